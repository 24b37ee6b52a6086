#ifndef PSEUDOTRAP_ORACLE_HPP
#define PSEUDOTRAP_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pseudotrap/pseudo_orbit.hpp"
#include "pseudotrap/verifier.hpp"

namespace pseudotrap {

// Brute-force deciders for the prefix checks. They enumerate every walk and
// test coverage point by point against the distance table; nothing here
// touches the product search or its masks.

namespace detail {

// Cycles found by jumping N steps (landing on the cycle) and walking around.
inline std::vector<std::vector<Point>> oracle_cycles(const FiniteSystem& s) {
    std::vector<std::vector<Point>> cycles;
    std::vector<bool> taken(s.size(), false);
    for (Point x = 0; x < s.size(); ++x) {
        Point p = x;
        for (std::size_t k = 0; k < s.size(); ++k) p = s.f(p);
        if (taken[p]) continue;
        std::vector<Point> c;
        Point q = p;
        do {
            taken[q] = true;
            c.push_back(q);
            q = s.f(q);
        } while (q != p);
        std::sort(c.begin(), c.end());
        cycles.push_back(std::move(c));
    }
    return cycles;
}

inline bool oracle_within(const FiniteSystem& s, const std::vector<Point>& walk, Point c, Distance eps) {
    for (Point x : walk)
        if (s.dist(x, c) < eps) return true;
    return false;
}

inline PrefixCertificate oracle_check(const FiniteSystem& s, CoverTarget target, Distance eps, Distance delta,
                                      std::size_t n, const SearchConfig& cfg) {
    require_positive(eps, "eps");
    require_positive(delta, "delta");
    std::vector<std::vector<Point>> targets;
    if (target == CoverTarget::whole_space) {
        auto& all = targets.emplace_back();
        for (Point p = 0; p < s.size(); ++p) all.push_back(p);
    } else {
        targets = oracle_cycles(s);
    }

    PrefixCertificate cert{target, eps, delta, n, Verdict::pass, "exhaustive walk enumeration", std::nullopt};
    const auto g = build_graph(s, delta);
    try {
        WalkEnumerator it(g, n, cfg.walk_cap);
        while (it.next()) {
            const auto& w = it.current();
            const bool ok = std::any_of(targets.begin(), targets.end(), [&](const std::vector<Point>& c) {
                return std::all_of(c.begin(), c.end(), [&](Point p) { return oracle_within(s, w, p, eps); });
            });
            if (!ok) {
                cert.verdict = Verdict::fail;
                cert.counterexample = Walk(w);
                break;
            }
        }
    } catch (const resource_cap_exceeded&) {
        cert.verdict = Verdict::undecided_resource;
        cert.counterexample.reset();
    }
    return cert;
}

} // namespace detail

inline TrapCertificate oracle_trap_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t n,
                                         const SearchConfig& cfg = {}) {
    return detail::oracle_check(s, CoverTarget::some_omega_set, eps, delta, n, cfg);
}

inline CoverCertificate oracle_cover_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t n,
                                           const SearchConfig& cfg = {}) {
    return detail::oracle_check(s, CoverTarget::whole_space, eps, delta, n, cfg);
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_ORACLE_HPP
