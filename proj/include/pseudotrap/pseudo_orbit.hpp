#ifndef PSEUDOTRAP_PSEUDO_ORBIT_HPP
#define PSEUDOTRAP_PSEUDO_ORBIT_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pseudotrap/system.hpp"

namespace pseudotrap {

inline constexpr std::uint64_t default_walk_cap = 10'000'000;

/// Digraph with x -> y iff (f(x), y) in D. Its walks of n steps are exactly
/// the D-pseudo-orbit prefixes (x_0, ..., x_n).
class PseudoOrbitGraph {
public:
    PseudoOrbitGraph(const FiniteSystem& s, const Entourage& d, std::string source = "entourage")
        : source_(std::move(source)) {
        if (d.size() != s.size())
            throw argument_error("entourage has " + std::to_string(d.size()) + " points, system has " +
                                 std::to_string(s.size()));
        adj_.reserve(s.size());
        for (Point x = 0; x < s.size(); ++x) adj_.push_back(d.row(s.f(x)));
    }

    std::size_t size() const noexcept { return adj_.size(); }
    const PointSet& successors(Point x) const noexcept { return adj_[x]; }
    bool has_edge(Point x, Point y) const noexcept { return adj_[x].contains(y); }
    const std::string& source() const noexcept { return source_; }

    std::size_t edge_count() const noexcept {
        std::size_t e = 0;
        for (const auto& r : adj_) e += r.size();
        return e;
    }

private:
    std::vector<PointSet> adj_;
    std::string source_;
};

/// Graph of D-pseudo-orbits for an explicit reflexive entourage.
inline PseudoOrbitGraph build_graph(const FiniteSystem& s, const Entourage& d) {
    return PseudoOrbitGraph(s, d, "entourage");
}

/// Graph of delta-pseudo-orbits: x -> y iff dist(f(x), y) < delta.
inline PseudoOrbitGraph build_graph(const FiniteSystem& s, Distance delta) {
    return PseudoOrbitGraph(s, metric_entourage(s, delta), "delta=" + std::to_string(delta));
}

/// First index i with (x_i, x_{i+1}) not an edge, or nullopt for a valid walk.
inline std::optional<std::size_t> first_violation(const PseudoOrbitGraph& g, const Walk& w) {
    for (Point p : w.points)
        if (p >= g.size()) return 0;
    for (std::size_t i = 0; i + 1 < w.points.size(); ++i)
        if (!g.has_edge(w[i], w[i + 1])) return i;
    return std::nullopt;
}

inline bool is_pseudo_orbit(const PseudoOrbitGraph& g, const Walk& w) { return !first_violation(g, w); }

namespace detail {
// Sorted thresholds v + 1 for the distinct positive values v, led by 1.
inline std::vector<Distance> threshold_grid(const std::set<Distance>& values) {
    std::vector<Distance> grid{1};
    for (Distance v : values)
        if (v >= 1) grid.push_back(v + 1);
    return grid;
}
} // namespace detail

/// Every delta > 0 yields the same graph as the least grid value >= delta,
/// so sweeping this grid covers all delta.
inline std::vector<Distance> delta_grid(const FiniteSystem& s) {
    std::set<Distance> values;
    for (Point x = 0; x < s.size(); ++x)
        for (Point y = 0; y < s.size(); ++y) values.insert(s.dist(s.f(x), y));
    return detail::threshold_grid(values);
}

/// Same construction over all pairwise distances; eps-balls are constant
/// between consecutive grid values.
inline std::vector<Distance> eps_grid(const FiniteSystem& s) {
    std::set<Distance> values;
    for (Point x = 0; x < s.size(); ++x)
        for (Point y = 0; y < s.size(); ++y) values.insert(s.dist(x, y));
    return detail::threshold_grid(values);
}

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister, by rejection
/// of the top partial block. Portable, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Random walk: at each step a uniform choice among the out-edges (in
/// ascending order) drawn with uniform_below on mt19937_64(seed).
inline Walk sample_walk(const PseudoOrbitGraph& g, Point start, std::size_t steps, std::uint64_t seed) {
    if (start >= g.size()) throw argument_error("start point out of range");
    std::mt19937_64 rng(seed);
    std::vector<Point> pts{start};
    pts.reserve(steps + 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const auto succ = g.successors(pts.back()).members();
        pts.push_back(succ[uniform_below(rng, succ.size())]);
    }
    return Walk(std::move(pts));
}

/// Lexicographic enumeration of every walk with `steps` steps. Throws
/// resource_cap_exceeded once more than `cap` walks would be produced.
///
///   WalkEnumerator it(g, 3);
///   while (it.next()) use(it.current());
class WalkEnumerator {
public:
    WalkEnumerator(const PseudoOrbitGraph& g, std::size_t steps, std::uint64_t cap = default_walk_cap)
        : g_(&g), cur_(steps + 1, 0), cap_(cap) {}

    bool next() {
        const auto n = static_cast<Point>(g_->size());
        if (done_) return false;
        if (!started_) {
            started_ = true;
            extend(1);
            return emit();
        }
        for (std::size_t d = cur_.size() - 1; d >= 1; --d) {
            const Point nxt = g_->successors(cur_[d - 1]).next_from(std::size_t{cur_[d]} + 1);
            if (nxt < n) {
                cur_[d] = nxt;
                extend(d + 1);
                return emit();
            }
        }
        if (++cur_[0] >= n) {
            done_ = true;
            return false;
        }
        extend(1);
        return emit();
    }

    const std::vector<Point>& current() const noexcept { return cur_; }
    Walk walk() const { return Walk(cur_); }
    std::uint64_t count() const noexcept { return count_; }

private:
    void extend(std::size_t from) {
        for (std::size_t i = from; i < cur_.size(); ++i) cur_[i] = g_->successors(cur_[i - 1]).first();
    }

    bool emit() {
        if (++count_ > cap_) throw resource_cap_exceeded("walk enumeration exceeded its cap", cap_);
        return true;
    }

    const PseudoOrbitGraph* g_;
    std::vector<Point> cur_;
    std::uint64_t cap_;
    std::uint64_t count_ = 0;
    bool started_ = false;
    bool done_ = false;
};

template <class F>
void for_each_walk(const PseudoOrbitGraph& g, std::size_t steps, F&& f, std::uint64_t cap = default_walk_cap) {
    WalkEnumerator it(g, steps, cap);
    while (it.next()) f(it.current());
}

inline std::vector<Walk> enumerate_walks(const PseudoOrbitGraph& g, std::size_t steps,
                                         std::uint64_t cap = default_walk_cap) {
    std::vector<Walk> out;
    for_each_walk(g, steps, [&](const std::vector<Point>& w) { out.emplace_back(w); }, cap);
    return out;
}

/// Number of walks with `steps` steps, by dynamic programming over walk
/// endpoints. Saturates at UINT64_MAX.
inline std::uint64_t count_walks(const PseudoOrbitGraph& g, std::size_t steps) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> ways(g.size(), 1);
    for (std::size_t t = 0; t < steps; ++t) {
        std::vector<std::uint64_t> nxt(g.size(), 0);
        for (Point x = 0; x < g.size(); ++x)
            g.successors(x).for_each([&](Point y) { nxt[y] = nxt[y] > top - ways[x] ? top : nxt[y] + ways[x]; });
        ways = std::move(nxt);
    }
    std::uint64_t total = 0;
    for (auto w : ways) total = total > top - w ? top : total + w;
    return total;
}

/// Graphviz rendering; nodes and edges in ascending index order.
inline std::string to_dot(const FiniteSystem& s, const PseudoOrbitGraph& g) {
    std::ostringstream out;
    out << "digraph pseudo_orbit {\n";
    out << "  // " << g.source() << "\n";
    for (Point x = 0; x < g.size(); ++x) out << "  n" << x << " [label=" << nlohmann::json(s.label(x)).dump() << "];\n";
    for (Point x = 0; x < g.size(); ++x) g.successors(x).for_each([&](Point y) { out << "  n" << x << " -> n" << y << ";\n"; });
    out << "}\n";
    return out.str();
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_PSEUDO_ORBIT_HPP
