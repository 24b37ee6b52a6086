#ifndef PSEUDOTRAP_ORBIT_HPP
#define PSEUDOTRAP_ORBIT_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "pseudotrap/system.hpp"

namespace pseudotrap {

/// omega(x) on a finite discrete space: closures are trivial there, so the
/// set of limit points of the orbit is exactly the cycle the orbit enters.
struct OmegaSet {
    PointSet cycle;
    std::size_t entry_time = 0; // least k with f^k(anchor) on the cycle
    Point anchor = 0;

    std::size_t period() const { return cycle.size(); }
    friend bool operator==(const OmegaSet&, const OmegaSet&) = default;
};

/// (x, f(x), f^2(x), ...) up to and including the first repeated point.
inline Walk orbit(const FiniteSystem& s, Point x) {
    s.check_point(x);
    std::vector<Point> pts;
    std::vector<bool> seen(s.size(), false);
    Point p = x;
    while (!seen[p]) {
        seen[p] = true;
        pts.push_back(p);
        p = s.f(p);
    }
    pts.push_back(p);
    return Walk(std::move(pts));
}

inline OmegaSet omega_limit(const FiniteSystem& s, Point z) {
    s.check_point(z);
    std::vector<std::size_t> first_visit(s.size(), std::numeric_limits<std::size_t>::max());
    Point p = z;
    std::size_t t = 0;
    while (first_visit[p] == std::numeric_limits<std::size_t>::max()) {
        first_visit[p] = t++;
        p = s.f(p);
    }
    OmegaSet w{PointSet(s.size()), first_visit[p], z};
    Point q = p;
    do {
        w.cycle.insert(q);
        q = s.f(q);
    } while (q != p);
    return w;
}

/// Every cycle of the functional graph once, ordered by least member. The
/// anchor of each entry is its least member (entry_time 0).
inline std::vector<OmegaSet> all_omega_sets(const FiniteSystem& s) {
    const std::size_t n = s.size();
    // 0 = unvisited, 1 = on the current path, 2 = finished
    std::vector<char> state(n, 0);
    std::vector<OmegaSet> out;
    std::vector<Point> path;
    for (Point start = 0; start < n; ++start) {
        if (state[start]) continue;
        path.clear();
        Point p = start;
        while (state[p] == 0) {
            state[p] = 1;
            path.push_back(p);
            p = s.f(p);
        }
        if (state[p] == 1) {
            OmegaSet w{PointSet(n), 0, p};
            Point q = p;
            do {
                w.cycle.insert(q);
                q = s.f(q);
            } while (q != p);
            w.anchor = w.cycle.first();
            out.push_back(std::move(w));
        }
        for (Point v : path) state[v] = 2;
    }
    std::sort(out.begin(), out.end(), [](const OmegaSet& a, const OmegaSet& b) { return a.anchor < b.anchor; });
    return out;
}

/// f(A) within A.
inline bool is_positively_invariant(const FiniteSystem& s, const PointSet& a) {
    bool ok = true;
    a.for_each([&](Point x) { ok = ok && a.contains(s.f(x)); });
    return ok;
}

/// omega(x) = X for every x, i.e. f is one cyclic permutation of all points.
inline bool is_minimal(const FiniteSystem& s) {
    Point p = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        p = s.f(p);
        if (p == 0) return false;
    }
    return s.f(p) == 0;
}

struct HausdorffDistance {
    Distance classical = 0; // max of the two directed max-min distances
    Distance least_eps = 1; // least eps with mutual inclusion in strict eps-balls
    friend bool operator==(const HausdorffDistance&, const HausdorffDistance&) = default;
};

/// max over a of the distance to the nearest point of b.
inline Distance directed_hausdorff(const FiniteSystem& s, const PointSet& a, const PointSet& b) {
    Distance worst = 0;
    a.for_each([&](Point x) {
        Distance best = std::numeric_limits<Distance>::max();
        b.for_each([&](Point y) { best = std::min(best, s.dist(x, y)); });
        worst = std::max(worst, best);
    });
    return worst;
}

inline HausdorffDistance hausdorff_distance(const FiniteSystem& s, const PointSet& a, const PointSet& b) {
    if (a.universe() != s.size() || b.universe() != s.size())
        throw argument_error("point set width does not match the system");
    if (a.empty() || b.empty()) throw argument_error("Hausdorff distance needs nonempty sets");
    const Distance h = std::max(directed_hausdorff(s, a, b), directed_hausdorff(s, b, a));
    return {h, h + 1};
}

struct TrapHorizon {
    std::size_t n = 1;
    Point z = 0; // omega(z) is the covered cycle
};

/// Least n >= 1 such that the eps-balls around f(x), ..., f^n(x) cover some
/// cycle. x itself is not part of the union.
inline TrapHorizon orbit_trap_horizon(const FiniteSystem& s, Point x, Distance eps,
                                      const std::vector<OmegaSet>& cycles) {
    s.check_point(x);
    if (eps < 1) throw argument_error("eps must be a positive integer");
    PointSet covered(s.size());
    Point p = x;
    for (std::size_t n = 1;; ++n) {
        p = s.f(p);
        covered |= metric_ball(s, p, eps);
        for (const auto& c : cycles)
            if (c.cycle.is_subset_of(covered)) return {n, c.anchor};
    }
}

inline TrapHorizon orbit_trap_horizon(const FiniteSystem& s, Point x, Distance eps) {
    return orbit_trap_horizon(s, x, eps, all_omega_sets(s));
}

/// Least n that serves every starting point at once.
inline std::size_t uniform_trap_horizon(const FiniteSystem& s, Distance eps) {
    const auto cycles = all_omega_sets(s);
    std::size_t n = 1;
    for (Point x = 0; x < s.size(); ++x) n = std::max(n, orbit_trap_horizon(s, x, eps, cycles).n);
    return n;
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_ORBIT_HPP
