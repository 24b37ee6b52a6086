#include <gtest/gtest.h>

#include <set>

#include "pseudotrap/pseudotrap.hpp"
#include "test_support.hpp"

using namespace pseudotrap;
using pseudotrap::testing::line_system;
using pseudotrap::testing::random_entourage;

namespace {

// Recursive count: walks from x with k steps left = sum over successors.
std::uint64_t count_from(const PseudoOrbitGraph& g, Point x, std::size_t k) {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    g.successors(x).for_each([&](Point y) { total += count_from(g, y, k - 1); });
    return total;
}

FiniteSystem three_point_identity() {
    return FiniteSystem({{0, 4, 7}, {4, 0, 4}, {7, 4, 0}}, {0, 1, 2});
}

} // namespace

TEST(BuildGraph, DiagonalAndFull) {
    const auto s = random_map(7, RandomMetric::line, 4);
    const auto g = build_graph(s, Entourage::diagonal(7));
    for (Point x = 0; x < 7; ++x) EXPECT_EQ(g.successors(x), PointSet::singleton(7, s.f(x)));
    const auto full = build_graph(s, Entourage::full(7));
    EXPECT_EQ(full.edge_count(), 49u);
    EXPECT_THROW(build_graph(s, Entourage::diagonal(6)), argument_error);
}

TEST(BuildGraph, RotationEightWithDeltaTwo) {
    const auto s = cyclic_rotation(8);
    const auto g = build_graph(s, Distance{2});
    for (Point x = 0; x < 8; ++x) {
        PointSet expected(8);
        for (int off : {-1, 0, 1}) expected.insert(static_cast<Point>((x + 1 + off + 8) % 8));
        EXPECT_EQ(g.successors(x), expected) << x;
    }
    EXPECT_EQ(g.source(), "delta=2");
}

TEST(BuildGraph, MonotoneInDelta) {
    for (const auto& [name, s] : standard_zoo(16)) {
        const auto grid = delta_grid(s);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const auto lo = build_graph(s, grid[i - 1]), hi = build_graph(s, grid[i]);
            for (Point x = 0; x < s.size(); ++x) {
                ASSERT_TRUE(lo.successors(x).is_subset_of(hi.successors(x))) << name;
                ASSERT_TRUE(lo.successors(x).contains(s.f(x)));
            }
            ASSERT_LT(lo.edge_count(), hi.edge_count()) << name << " grid values must give distinct graphs";
        }
    }
}

TEST(Grids, Examples) {
    const auto s = three_point_identity();
    EXPECT_EQ(delta_grid(s), (std::vector<Distance>{1, 5, 8}));
    EXPECT_EQ(eps_grid(s), (std::vector<Distance>{1, 5, 8}));
    EXPECT_EQ(delta_grid(cyclic_rotation(1)), (std::vector<Distance>{1}));
    EXPECT_EQ(eps_grid(cyclic_rotation(1)), (std::vector<Distance>{1}));

    // Only images matter for the delta grid.
    const auto collapse = line_system({0, 0, 0}, 3);
    EXPECT_EQ(delta_grid(collapse), (std::vector<Distance>{1, 4, 7}));
    const auto constant_end = line_system({2, 2, 2});
    EXPECT_EQ(delta_grid(constant_end), (std::vector<Distance>{1, 2, 3}));
}

TEST(Grids, ConstantBetweenGridValues) {
    for (const auto& [name, s] : standard_zoo(12)) {
        const auto grid = delta_grid(s);
        ASSERT_TRUE(std::is_sorted(grid.begin(), grid.end()));
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const auto base = build_graph(s, grid[i]);
            for (Distance d = grid[i] + 1; d < grid[i + 1]; ++d) {
                const auto mid = build_graph(s, d);
                for (Point x = 0; x < s.size(); ++x) ASSERT_EQ(mid.successors(x), base.successors(x)) << name;
            }
        }
    }
}

TEST(Predicate, FirstViolation) {
    const auto s = cyclic_rotation(8);
    const auto g = build_graph(s, Distance{2});
    EXPECT_TRUE(is_pseudo_orbit(g, Walk({0, 1, 3, 4})));
    EXPECT_EQ(first_violation(g, Walk({0, 1, 4, 5})), std::optional<std::size_t>{1});
    EXPECT_TRUE(is_pseudo_orbit(g, Walk({5})));
}

TEST(SampleWalk, Examples) {
    const auto s = random_map(6, RandomMetric::line, 9);
    const auto orbit_graph = build_graph(s, Entourage::diagonal(6));
    for (std::uint64_t seed : {0, 1, 77}) {
        const auto w = sample_walk(orbit_graph, 2, 10, seed);
        Point p = 2;
        for (std::size_t i = 0; i <= 10; ++i, p = s.f(p)) EXPECT_EQ(w[i], p);
    }
    EXPECT_EQ(sample_walk(orbit_graph, 3, 0, 5).points, (std::vector<Point>{3}));

    const auto complete = build_graph(line_system({0, 1, 2, 3}), Entourage::full(4));
    const auto a = sample_walk(complete, 0, 3, 12345), b = sample_walk(complete, 0, 3, 12345);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.points.size(), 4u);
    EXPECT_TRUE(is_pseudo_orbit(complete, a));
}

TEST(SampleWalk, UsesEveryEdge) {
    const auto complete = build_graph(line_system({0, 1, 2, 3}), Entourage::full(4));
    std::set<Point> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) seen.insert(sample_walk(complete, 0, 1, seed)[1]);
    EXPECT_EQ(seen.size(), 4u);
}

TEST(EnumerateWalks, Counts) {
    const auto s = random_map(5, RandomMetric::line, 1);
    EXPECT_EQ(enumerate_walks(build_graph(s, Entourage::diagonal(5)), 6).size(), 5u);
    const auto complete = build_graph(line_system({0, 1, 2}), Entourage::full(3));
    EXPECT_EQ(enumerate_walks(complete, 2).size(), 27u);
    EXPECT_EQ(enumerate_walks(build_graph(cyclic_rotation(4), Distance{2}), 2).size(), 36u);
    EXPECT_EQ(enumerate_walks(complete, 0).size(), 3u);
}

TEST(EnumerateWalks, LexicographicAndValid) {
    const auto g = build_graph(cyclic_rotation(5), Distance{2});
    const auto walks = enumerate_walks(g, 3);
    ASSERT_EQ(walks.size(), 5u * 27u);
    for (std::size_t i = 0; i < walks.size(); ++i) {
        ASSERT_TRUE(is_pseudo_orbit(g, walks[i]));
        if (i) { ASSERT_LT(walks[i - 1], walks[i]); }
    }
}

TEST(EnumerateWalks, DiagonalGivesOrbitPrefixes) {
    const auto s = random_map(8, RandomMetric::random_valid, 21);
    const auto walks = enumerate_walks(build_graph(s, Entourage::diagonal(8)), 5);
    ASSERT_EQ(walks.size(), 8u);
    for (Point x = 0; x < 8; ++x) {
        Point p = x;
        for (std::size_t i = 0; i <= 5; ++i, p = s.f(p)) EXPECT_EQ(walks[x][i], p);
    }
}

TEST(EnumerateWalks, CapSignalsResourceLimit) {
    const auto complete = build_graph(line_system({0, 1, 2}), Entourage::full(3));
    EXPECT_THROW(enumerate_walks(complete, 2, 26), resource_cap_exceeded);
    EXPECT_NO_THROW(enumerate_walks(complete, 2, 27));
}

TEST(CountWalks, AgreesWithEnumerationAndRecursion) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 6);
        std::vector<Point> map(n);
        for (auto& m : map) m = static_cast<Point>(uniform_below(rng, n));
        const auto s = line_system(map);
        const auto g = build_graph(s, random_entourage(rng, n, 25));
        const std::size_t steps = uniform_below(rng, 5);
        std::uint64_t rec = 0;
        for (Point x = 0; x < n; ++x) rec += count_from(g, x, steps);
        std::uint64_t enumerated = 0;
        for_each_walk(g, steps, [&](const std::vector<Point>& w) {
            ASSERT_TRUE(is_pseudo_orbit(g, Walk(w)));
            ++enumerated;
        });
        ASSERT_EQ(count_walks(g, steps), rec);
        ASSERT_EQ(enumerated, rec);
    }
}

TEST(CountWalks, Saturates) {
    const auto complete = build_graph(cyclic_rotation(16), Entourage::full(16));
    EXPECT_EQ(count_walks(complete, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(Dot, DeterministicRendering) {
    const auto s = interval_map_grid(IntervalMap::make_tent(), 2);
    const auto dot = to_dot(s, build_graph(s, Distance{1}));
    EXPECT_EQ(dot,
              "digraph pseudo_orbit {\n"
              "  // delta=1\n"
              "  n0 [label=\"1/4\"];\n"
              "  n1 [label=\"3/4\"];\n"
              "  n0 -> n0;\n"
              "  n1 -> n0;\n"
              "}\n");
}
