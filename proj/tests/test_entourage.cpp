#include <gtest/gtest.h>

#include "pseudotrap/pseudotrap.hpp"
#include "test_support.hpp"

using namespace pseudotrap;
using pseudotrap::testing::random_entourage;
using pseudotrap::testing::random_subset;

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix to_matrix(const Entourage& e) {
    BoolMatrix m(e.size(), std::vector<bool>(e.size()));
    for (Point i = 0; i < e.size(); ++i)
        for (Point j = 0; j < e.size(); ++j) m[i][j] = e.contains(i, j);
    return m;
}

// The defining formula, evaluated with a plain triple loop.
BoolMatrix product(const BoolMatrix& a, const BoolMatrix& b) {
    const std::size_t n = a.size();
    BoolMatrix c(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (a[x][y] && b[y][z]) c[x][z] = true;
    return c;
}

} // namespace

TEST(Compose, DiagonalIsIdentity) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_entourage(rng, 1 + uniform_below(rng, 12));
        const auto d = Entourage::diagonal(a.size());
        EXPECT_EQ(compose(d, a), a);
        EXPECT_EQ(compose(a, d), a);
    }
}

TEST(Compose, ThreePointExampleMatchesTripleLoop) {
    const auto a = Entourage::with_pairs(3, {{0, 1}, {1, 0}});
    const auto b = Entourage::with_pairs(3, {{1, 2}, {2, 1}});
    const auto expected = product(to_matrix(a), to_matrix(b));
    EXPECT_TRUE(expected[0][2]);
    EXPECT_EQ(to_matrix(compose(a, b)), expected);
    EXPECT_TRUE(compose(a, b).contains(0, 2));
}

TEST(Compose, AgreesWithTripleLoopOnRandomRelations) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 12);
        const auto a = random_entourage(rng, n), b = random_entourage(rng, n);
        ASSERT_EQ(to_matrix(compose(a, b)), product(to_matrix(a), to_matrix(b)));
    }
}

TEST(Compose, DimensionMismatch) {
    EXPECT_THROW(compose(Entourage::diagonal(2), Entourage::diagonal(3)), argument_error);
}

TEST(Inverse, Identities) {
    std::mt19937_64 rng(3);
    EXPECT_EQ(inverse(Entourage::diagonal(5)), Entourage::diagonal(5));
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 12);
        const auto a = random_entourage(rng, n), b = random_entourage(rng, n);
        EXPECT_EQ(inverse(inverse(a)), a);
        EXPECT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
        EXPECT_EQ(is_symmetric(a), inverse(a) == a);
    }
    EXPECT_FALSE(is_symmetric(Entourage::with_pairs(2, {{0, 1}})));
    EXPECT_TRUE(is_symmetric(Entourage::with_pairs(2, {{0, 1}, {1, 0}})));
}

TEST(NFold, Basics) {
    EXPECT_THROW(n_fold(Entourage::diagonal(3), 0), argument_error);
    for (std::size_t k = 1; k < 6; ++k) EXPECT_EQ(n_fold(Entourage::diagonal(4), k), Entourage::diagonal(4));
    std::mt19937_64 rng(4);
    const auto a = random_entourage(rng, 7);
    EXPECT_EQ(n_fold(a, 1), a);
    EXPECT_EQ(n_fold(a, 2), compose(a, a));
}

TEST(NFold, ChainReachesAcrossThreeSteps) {
    const auto chain = Entourage::with_pairs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
    auto m = to_matrix(chain);
    const auto expected = product(product(m, m), m);
    EXPECT_TRUE(expected[0][3]);
    EXPECT_EQ(to_matrix(n_fold(chain, 3)), expected);
    EXPECT_FALSE(n_fold(chain, 2).contains(0, 3));
}

TEST(Ball, Definitions) {
    const auto d = Entourage::diagonal(4);
    for (Point p = 0; p < 4; ++p) EXPECT_EQ(ball(d, p), PointSet::singleton(4, p));
    std::mt19937_64 rng(5);
    const auto a = random_entourage(rng, 6);
    EXPECT_EQ(ball_set(a, PointSet::full(6)), PointSet::full(6));
    EXPECT_TRUE(ball_set(a, PointSet(6)).empty());
    const auto two = disjoint_attractors({1, 1}, 10);
    EXPECT_EQ(ball(metric_entourage(two, 5), 0), PointSet::singleton(2, 0));
}

TEST(EntourageProperties, AssociativityAndMonotonicity) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 12);
        const auto a = random_entourage(rng, n, 20), b = random_entourage(rng, n, 20), c = random_entourage(rng, n, 20);
        ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        const auto big = compose(a, b); // contains a since b is reflexive
        ASSERT_TRUE(a.is_subset_of(big));
        const auto s = random_subset(rng, n);
        ASSERT_TRUE(ball_set(a, s).is_subset_of(ball_set(big, s)));
    }
}

TEST(EntourageProperties, MetricCompositionLaw) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_map(2 + seed % 11, RandomMetric::random_valid, 100 + seed);
        const auto grid = eps_grid(s);
        for (auto e1 : grid)
            for (auto e2 : grid)
                ASSERT_TRUE(compose(metric_entourage(s, e1), metric_entourage(s, e2))
                                .is_subset_of(metric_entourage(s, e1 + e2 - 1)));
    }
}

TEST(UniformityBase, DiagonalFamily) {
    const auto r = check_uniformity_base({Entourage::diagonal(4)});
    EXPECT_TRUE(r.all_pass());
    EXPECT_TRUE(r.separating);
}

TEST(UniformityBase, MetricFamiliesPass) {
    for (const auto& [name, s] : standard_zoo(16)) {
        std::vector<Entourage> fam;
        for (auto e : eps_grid(s)) fam.push_back(metric_entourage(s, e));
        const auto r = check_uniformity_base(fam);
        EXPECT_TRUE(r.all_pass()) << name;
        EXPECT_TRUE(r.separating) << name;
    }
}

TEST(UniformityBase, NonSymmetricMemberFailsInversion) {
    const auto r = check_uniformity_base({Entourage::with_pairs(2, {{0, 1}})});
    EXPECT_TRUE(r.intersection.pass);
    EXPECT_TRUE(r.composition.pass);
    EXPECT_FALSE(r.inversion.pass);
    ASSERT_TRUE(r.inversion.witness);
    EXPECT_EQ(*r.inversion.witness, (std::pair<std::size_t, std::size_t>{0, 0}));
    EXPECT_FALSE(r.separating);
}

TEST(UniformityBase, CompositionAndIntersectionFailures) {
    // The chain relation has no member whose square fits inside it.
    const auto chain = Entourage::with_pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    const auto r = check_uniformity_base({chain});
    EXPECT_FALSE(r.composition.pass);
    EXPECT_TRUE(r.inversion.pass);

    const auto left = Entourage::with_pairs(3, {{0, 1}, {1, 0}});
    const auto right = Entourage::with_pairs(3, {{1, 2}, {2, 1}});
    const auto r2 = check_uniformity_base({left, right});
    EXPECT_FALSE(r2.intersection.pass);
    EXPECT_EQ(*r2.intersection.witness, (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_THROW(check_uniformity_base({}), argument_error);
}
