#ifndef PSEUDOTRAP_VERIFIER_HPP
#define PSEUDOTRAP_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pseudotrap/orbit.hpp"
#include "pseudotrap/product_search.hpp"
#include "pseudotrap/pseudo_orbit.hpp"
#include "pseudotrap/system.hpp"

namespace pseudotrap {

struct SearchConfig {
    std::uint64_t state_cap = default_state_cap;
    std::uint64_t walk_cap = default_walk_cap;

    /// Defaults, with PSEUDOTRAP_STATE_CAP overriding the state cap.
    static SearchConfig from_environment() {
        SearchConfig c;
        if (const char* v = std::getenv("PSEUDOTRAP_STATE_CAP"); v && *v) {
            char* end = nullptr;
            const unsigned long long cap = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && cap > 0) c.state_cap = cap;
        }
        return c;
    }
};

enum class Verdict { pass, fail, undecided_resource };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided_resource: return "undecided-resource";
    }
    return "?";
}

/// Which sets the prefix ball must swallow.
enum class CoverTarget {
    some_omega_set, // at least one cycle of f
    whole_space,    // all of X
};

/// Outcome of a fixed (eps, delta, n) check. On pass, every n-step
/// delta-pseudo-orbit has an eps-ball that contains the target; on fail,
/// `counterexample` is the lexicographically least n-step walk where it does not.
struct PrefixCertificate {
    CoverTarget target = CoverTarget::some_omega_set;
    Distance eps = 1;
    Distance delta = 1;
    std::size_t n = 0;
    Verdict verdict = Verdict::undecided_resource;
    std::string witness_mode;
    std::optional<Walk> counterexample;

    // n = 0 only passes when single points already cover the target.
    bool degenerate() const noexcept { return verdict == Verdict::pass && n == 0; }
};

using TrapCertificate = PrefixCertificate;
using CoverCertificate = PrefixCertificate;

namespace detail {

inline std::vector<PointSet> cover_targets(const FiniteSystem& s, CoverTarget target) {
    if (target == CoverTarget::whole_space) return {PointSet::full(s.size())};
    std::vector<PointSet> out;
    for (auto& w : all_omega_sets(s)) out.push_back(std::move(w.cycle));
    return out;
}

inline void require_positive(Distance v, const char* name) {
    if (v < 1) throw argument_error(std::string(name) + " must be a positive integer, got " + std::to_string(v));
}

inline PrefixCertificate prefix_check(const FiniteSystem& s, CoverTarget target, Distance eps, Distance delta,
                                      std::size_t n, const SearchConfig& cfg) {
    require_positive(eps, "eps");
    require_positive(delta, "delta");
    PrefixCertificate cert{target, eps, delta, n, Verdict::undecided_resource,
                           "product-graph safety search, layers 0.." + std::to_string(n), std::nullopt};
    const auto g = build_graph(s, delta);
    try {
        ProductSearch search(s, g, eps, cover_targets(s, target), cfg.state_cap);
        auto res = search.layered(n);
        if (res.counterexample_found) {
            cert.verdict = Verdict::fail;
            cert.counterexample = Walk(std::move(res.walk));
        } else {
            cert.verdict = Verdict::pass;
        }
    } catch (const resource_cap_exceeded&) {
        cert.verdict = Verdict::undecided_resource;
    }
    return cert;
}

} // namespace detail

/// Every delta-pseudo-orbit (x_0..x_n) has some omega-limit set inside
/// B_eps({x_0..x_n})?
inline TrapCertificate trap_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t n,
                                  const SearchConfig& cfg = {}) {
    return detail::prefix_check(s, CoverTarget::some_omega_set, eps, delta, n, cfg);
}

/// Every delta-pseudo-orbit (x_0..x_n) has B_eps({x_0..x_n}) = X?
/// Reuses the trap machinery with X as the single target; X need not be
/// a cycle, only the covering semantics matter.
inline CoverCertificate cover_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t n,
                                    const SearchConfig& cfg = {}) {
    return detail::prefix_check(s, CoverTarget::whole_space, eps, delta, n, cfg);
}

enum class Feasibility { feasible, infeasible, undecided_resource };

/// One delta of a threshold sweep: either the least n that works, or a
/// lasso (stem + loop) showing no n works.
struct DeltaOutcome {
    Distance delta = 1;
    Feasibility status = Feasibility::undecided_resource;
    std::optional<std::size_t> n;
    bool lasso = false;
    std::optional<Walk> counterexample;
    std::optional<std::size_t> loop_start;

    bool feasible() const noexcept { return status == Feasibility::feasible; }
};

struct Witness {
    Distance delta = 1;
    std::size_t n = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchResult {
    CoverTarget target = CoverTarget::some_omega_set;
    Distance eps = 1;
    std::vector<DeltaOutcome> results; // delta descending
    std::optional<Witness> recommended; // largest feasible delta, its least n

    bool undecided() const noexcept {
        for (const auto& r : results)
            if (r.status == Feasibility::undecided_resource) return true;
        return false;
    }

    const DeltaOutcome* find(Distance delta) const noexcept {
        for (const auto& r : results)
            if (r.delta == delta) return &r;
        return nullptr;
    }
};

/// Decides, for one delta, whether any n works, and if so the least one.
inline DeltaOutcome decide_delta(const FiniteSystem& s, CoverTarget target, Distance eps, Distance delta,
                                 const SearchConfig& cfg = {}) {
    detail::require_positive(eps, "eps");
    detail::require_positive(delta, "delta");
    DeltaOutcome out;
    out.delta = delta;
    const auto g = build_graph(s, delta);
    try {
        detail::ProductSearch search(s, g, eps, detail::cover_targets(s, target), cfg.state_cap);
        auto res = search.explore();
        if (res.lasso) {
            out.status = Feasibility::infeasible;
            out.lasso = true;
            out.counterexample = Walk(std::move(res.walk));
            out.loop_start = res.loop_start;
        } else {
            out.status = Feasibility::feasible;
            out.n = res.min_n;
        }
    } catch (const resource_cap_exceeded&) {
        out.status = Feasibility::undecided_resource;
    }
    return out;
}

inline SearchResult threshold_search(const FiniteSystem& s, CoverTarget target, Distance eps,
                                     const SearchConfig& cfg = {}) {
    detail::require_positive(eps, "eps");
    SearchResult out{target, eps, {}, std::nullopt};
    const auto grid = delta_grid(s);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        out.results.push_back(decide_delta(s, target, eps, *it, cfg));
        const auto& r = out.results.back();
        if (r.feasible() && !out.recommended) out.recommended = Witness{r.delta, *r.n};
    }
    return out;
}

/// For each grid delta (descending): does some n make every delta-pseudo-orbit
/// prefix trap an omega-limit set in its eps-ball? delta = 1 (true orbits
/// only) always succeeds, so the recommendation exists unless resources ran out.
inline SearchResult trap_search(const FiniteSystem& s, Distance eps, const SearchConfig& cfg = {}) {
    return threshold_search(s, CoverTarget::some_omega_set, eps, cfg);
}

/// As trap_search, but the prefix ball must be all of X.
inline SearchResult cover_search(const FiniteSystem& s, Distance eps, const SearchConfig& cfg = {}) {
    return threshold_search(s, CoverTarget::whole_space, eps, cfg);
}

/// Largest feasible grid delta and its least n for the whole-space cover,
/// stopping at the first feasible delta from the top. Feasibility is
/// downward closed in delta, so this matches cover_search().recommended.
inline std::optional<Witness> largest_cover_witness(const FiniteSystem& s, Distance eps, bool& undecided,
                                                    const SearchConfig& cfg = {}) {
    const auto grid = delta_grid(s);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        const auto r = decide_delta(s, CoverTarget::whole_space, eps, *it, cfg);
        if (r.status == Feasibility::undecided_resource) undecided = true;
        if (r.feasible()) return Witness{r.delta, *r.n};
    }
    return std::nullopt;
}

struct SecondWeakShadowingCertificate {
    Distance eps = 1;
    Verdict verdict = Verdict::undecided_resource;
    std::optional<Witness> witness;
    std::vector<std::string> justification;
};

/// Turns the finite trap check into a statement about infinite pseudo-orbits:
/// the prefix ball of any delta-pseudo-orbit holds a cycle C, any y in C has
/// Orb(y) = C, and the prefix ball lies inside the ball of the whole orbit.
inline SecondWeakShadowingCertificate certify_second_weak_shadowing(const FiniteSystem& s, Distance eps,
                                                                    const SearchConfig& cfg = {}) {
    const auto search = trap_search(s, eps, cfg);
    SecondWeakShadowingCertificate c;
    c.eps = eps;
    if (!search.recommended) {
        c.verdict = Verdict::undecided_resource;
        c.justification.push_back("no delta on the grid was decided feasible within the resource caps");
        return c;
    }
    c.verdict = Verdict::pass;
    c.witness = search.recommended;
    const auto d = std::to_string(c.witness->delta), n = std::to_string(c.witness->n), e = std::to_string(eps);
    c.justification = {
        "trap check passed: every " + d + "-pseudo-orbit prefix (x_0..x_" + n + ") has some cycle C with C within B_" +
            e + "({x_0..x_" + n + "})",
        "every cycle is an omega-limit set and is positively invariant, so y in C gives Orb(y) = C",
        "B_" + e + "({x_0..x_" + n + "}) is contained in B_" + e + "({x_i : i >= 0}) for the full pseudo-orbit",
        "hence every infinite " + d + "-pseudo-orbit (x_i) has a point y with Orb(y) within B_" + e + "({x_i})",
    };
    return c;
}

/// Two true orbits violating mutual eps-inclusion: y lies in omega(x) != X
/// and z stays at least eps away from omega(x), so Orb(z) escapes
/// B_eps(Orb(y)) at `escaping_point` (= z).
struct CounterexamplePair {
    Distance eps = 1;
    Point base = 0; // x with omega(x) != X
    Walk y_walk;    // orbit of y in omega(x)
    Walk z_walk;    // orbit of z
    Point escaping_point = 0;
};

namespace detail {

// The first (x, z) with every point of omega(x) at distance >= eps from z.
inline std::optional<CounterexamplePair> converse_pair(const FiniteSystem& s, Distance eps) {
    for (Point x = 0; x < s.size(); ++x) {
        const auto w = omega_limit(s, x);
        for (Point z = 0; z < s.size(); ++z) {
            bool far = true;
            w.cycle.for_each([&](Point c) { far = far && s.dist(z, c) >= eps; });
            if (far) {
                const Point y = w.cycle.first();
                return CounterexamplePair{eps, x, orbit(s, y), orbit(s, z), z};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Largest eps for which some omega(x) has B_eps(omega(x)) != X, together with
/// the two orbits exhibiting it. nullopt for minimal systems.
inline std::optional<CounterexamplePair> minimality_counterexample(const FiniteSystem& s) {
    Distance best = 0;
    for (Point x = 0; x < s.size(); ++x)
        best = std::max(best, directed_hausdorff(s, PointSet::full(s.size()), omega_limit(s, x).cycle));
    if (best < 1) return std::nullopt;
    return detail::converse_pair(s, best);
}

struct EpsOutcome {
    Distance eps = 1;
    std::optional<Witness> witness;
    std::optional<CounterexamplePair> counterexample;
    bool undecided = false;
};

struct MinimalityVerdict {
    bool minimal = false;
    bool undecided = false;
    std::vector<EpsOutcome> per_eps;
    std::optional<CounterexamplePair> counterexample;
};

/// Pseudo-orbit test for minimality: for every grid eps, find (delta, n) with
/// B_eps(prefix) = X for all delta-pseudo-orbits, which forces mutual
/// eps-inclusion of any two prefixes. An eps without such a pair gets a
/// two-orbit counterexample.
inline MinimalityVerdict minimality_criterion(const FiniteSystem& s, const SearchConfig& cfg = {}) {
    MinimalityVerdict v;
    v.minimal = true;
    for (Distance eps : eps_grid(s)) {
        EpsOutcome o;
        o.eps = eps;
        o.witness = largest_cover_witness(s, eps, o.undecided, cfg);
        if (!o.witness) {
            if (o.undecided) {
                v.undecided = true;
            } else {
                v.minimal = false;
                o.counterexample = detail::converse_pair(s, eps);
            }
        }
        v.per_eps.push_back(std::move(o));
    }
    if (v.undecided) v.minimal = false;
    if (!v.minimal && !v.undecided) v.counterexample = minimality_counterexample(s);
    return v;
}

/// Re-checks a pair: some point of z_walk is not eps-close to any point of y_walk.
inline bool validate_counterexample_pair(const FiniteSystem& s, const CounterexamplePair& p) {
    for (Point z : p.z_walk.points) {
        bool near = false;
        for (Point y : p.y_walk.points) near = near || s.dist(z, y) < p.eps;
        if (!near) return true;
    }
    return false;
}

struct PairwiseResult {
    bool within = false; // mutual eps-inclusion, i.e. classical H < eps
    HausdorffDistance distance;
};

/// Hausdorff closeness of two n-step delta-pseudo-orbit prefixes. Throws
/// argument_error naming the first bad step if a walk is not one.
inline PairwiseResult pairwise_dh_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t n,
                                        const Walk& a, const Walk& b) {
    detail::require_positive(eps, "eps");
    const auto g = build_graph(s, delta);
    for (const Walk* w : {&a, &b}) {
        if (w->steps() != n)
            throw argument_error("walk has " + std::to_string(w->steps()) + " steps, expected " + std::to_string(n));
        if (auto bad = first_violation(g, *w))
            throw argument_error("walk is not a " + std::to_string(delta) + "-pseudo-orbit at step " +
                                 std::to_string(*bad));
    }
    const auto h = hausdorff_distance(s, a.point_set(s.size()), b.point_set(s.size()));
    return {h.classical < eps, h};
}

namespace detail {
// A within B_eps(B) and B within B_eps(A).
inline bool mutually_close(const FiniteSystem& s, const PointSet& a, const PointSet& b, Distance eps) {
    return directed_hausdorff(s, a, b) < eps && directed_hausdorff(s, b, a) < eps;
}

inline PointSet window(const FiniteSystem& s, const std::vector<Point>& seq, std::size_t from, std::size_t len) {
    PointSet out(s.size());
    for (std::size_t i = from; i < from + len; ++i) out.insert(seq[i]);
    return out;
}

inline std::vector<Point> iterate(const FiniteSystem& s, Point x, std::size_t steps) {
    std::vector<Point> seq{x};
    for (std::size_t i = 0; i < steps; ++i) seq.push_back(s.f(seq.back()));
    return seq;
}
} // namespace detail

struct StrongOrbitalReport {
    Distance eps = 1;
    std::size_t horizon = 1;
    Verdict verdict = Verdict::undecided_resource;
    std::optional<Witness> witness;
    std::uint64_t orbit_instances = 0;   // (x_0, N, z) triples over true orbits
    std::uint64_t sampled_instances = 0; // (walk, N, z) triples over sampled pseudo-orbits
    std::size_t sampled_walks = 0;
    std::optional<std::string> failure;
};

/// For a minimal system: with (delta, n) from the cover witness at this eps,
/// checks mutual eps-inclusion of {f^{N+i}(z)}_{i<=n} and {x_{N+i}}_{i<=n}
/// for every true orbit (x_i), every offset N <= horizon and every z, then
/// repeats the check on `samples` seeded delta-pseudo-orbits.
inline StrongOrbitalReport strong_orbital_check_minimal(const FiniteSystem& s, Distance eps, std::size_t horizon,
                                                        std::uint64_t seed = 0, std::size_t samples = 16,
                                                        const SearchConfig& cfg = {}) {
    detail::require_positive(eps, "eps");
    if (!is_minimal(s)) throw argument_error("strong orbital check requires a minimal system");
    StrongOrbitalReport rep;
    rep.eps = eps;
    rep.horizon = horizon;
    bool undecided = false;
    rep.witness = largest_cover_witness(s, eps, undecided, cfg);
    if (!rep.witness) {
        rep.verdict = undecided ? Verdict::undecided_resource : Verdict::fail;
        if (!undecided) rep.failure = "no cover witness for this eps";
        return rep;
    }
    const std::size_t n = rep.witness->n;
    const std::size_t len = horizon + n;

    std::vector<std::vector<Point>> orbits;
    for (Point p = 0; p < s.size(); ++p) orbits.push_back(detail::iterate(s, p, len));

    auto check_sequence = [&](const std::vector<Point>& xs, std::uint64_t& counter) -> bool {
        for (std::size_t off = 0; off <= horizon; ++off) {
            const auto xw = detail::window(s, xs, off, n + 1);
            for (Point z = 0; z < s.size(); ++z) {
                ++counter;
                if (!detail::mutually_close(s, detail::window(s, orbits[z], off, n + 1), xw, eps)) {
                    std::string w;
                    for (Point p : xs) w += (w.empty() ? "" : ",") + std::to_string(p);
                    rep.failure = "offset " + std::to_string(off) + ", z = " + std::to_string(z) + ", sequence [" + w + "]";
                    return false;
                }
            }
        }
        return true;
    };

    rep.verdict = Verdict::pass;
    for (Point x0 = 0; x0 < s.size() && rep.verdict == Verdict::pass; ++x0)
        if (!check_sequence(orbits[x0], rep.orbit_instances)) rep.verdict = Verdict::fail;

    const auto g = build_graph(s, rep.witness->delta);
    std::mt19937_64 starts(seed);
    for (std::size_t k = 0; k < samples && rep.verdict == Verdict::pass; ++k) {
        const auto x0 = static_cast<Point>(uniform_below(starts, s.size()));
        const auto w = sample_walk(g, x0, len, seed + k + 1);
        ++rep.sampled_walks;
        if (!check_sequence(w.points, rep.sampled_instances)) rep.verdict = Verdict::fail;
    }
    return rep;
}

struct OrbitalWalkResult {
    Walk walk;
    bool pass = false;
    std::optional<Point> z;
};

/// Finite-horizon diagnostic for orbital shadowing: for each horizon-step
/// delta-pseudo-orbit, is there a z whose orbit and the walk's point set are
/// mutually eps-close? A semi-decision at the horizon, nothing more.
struct OrbitalReport {
    Distance eps = 1;
    Distance delta = 1;
    std::size_t horizon = 1;
    bool exhaustive = true;
    bool sampled_warning = false; // enumeration cap hit, results come from sampling
    std::uint64_t walks_checked = 0;
    std::uint64_t walks_passed = 0;
    std::uint64_t distinct_point_sets = 0;
    std::vector<OrbitalWalkResult> listed; // first `max_listed` walks, in order
    std::optional<OrbitalWalkResult> first_failure;

    bool pass() const noexcept { return walks_checked == walks_passed; }
};

inline OrbitalReport orbital_shadowing_check(const FiniteSystem& s, Distance eps, Distance delta, std::size_t horizon,
                                             std::uint64_t seed = 0, std::size_t max_listed = 100,
                                             std::size_t samples = 10'000, const SearchConfig& cfg = {}) {
    detail::require_positive(eps, "eps");
    detail::require_positive(delta, "delta");
    OrbitalReport rep;
    rep.eps = eps;
    rep.delta = delta;
    rep.horizon = horizon;

    std::vector<PointSet> orbit_sets;
    for (Point z = 0; z < s.size(); ++z) orbit_sets.push_back(orbit(s, z).point_set(s.size()));

    std::unordered_map<PointSet, std::optional<Point>, PointSetHash> memo;
    auto judge = [&](const std::vector<Point>& pts) {
        PointSet w(s.size());
        for (Point p : pts) w.insert(p);
        auto it = memo.find(w);
        if (it == memo.end()) {
            std::optional<Point> found;
            for (Point z = 0; z < s.size() && !found; ++z)
                if (detail::mutually_close(s, orbit_sets[z], w, eps)) found = z;
            it = memo.emplace(std::move(w), found).first;
        }
        OrbitalWalkResult r{Walk(pts), it->second.has_value(), it->second};
        ++rep.walks_checked;
        if (r.pass) ++rep.walks_passed;
        if (!r.pass && !rep.first_failure) rep.first_failure = r;
        if (rep.listed.size() < max_listed) rep.listed.push_back(std::move(r));
    };

    const auto g = build_graph(s, delta);
    if (count_walks(g, horizon) <= cfg.walk_cap) {
        for_each_walk(g, horizon, judge, cfg.walk_cap);
    } else {
        rep.exhaustive = false;
        rep.sampled_warning = true;
        std::mt19937_64 starts(seed);
        for (std::size_t k = 0; k < samples; ++k) {
            const auto x0 = static_cast<Point>(uniform_below(starts, s.size()));
            judge(sample_walk(g, x0, horizon, seed + k + 1).points);
        }
    }
    rep.distinct_point_sets = memo.size();
    return rep;
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_VERIFIER_HPP
