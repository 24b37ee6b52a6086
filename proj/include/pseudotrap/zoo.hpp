#ifndef PSEUDOTRAP_ZOO_HPP
#define PSEUDOTRAP_ZOO_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pseudotrap/pseudo_orbit.hpp"
#include "pseudotrap/system.hpp"

namespace pseudotrap {

enum class RotationMetric {
    arc,       // d(i, j) = min(|i - j|, q - |i - j|) * scale
    chordlike, // d = k (q - k) * scale for arc step k
};

/// i -> i + 1 mod q. The chordlike metric is the parabola k (q - k), an
/// integer stand-in for the chord length sin(pi k / q): it is symmetric in
/// k <-> q - k and subadditive, so it is an exact metric on Z_q.
inline FiniteSystem cyclic_rotation(std::size_t q, RotationMetric metric = RotationMetric::arc, Distance scale = 1) {
    if (q < 1) throw argument_error("rotation needs q >= 1");
    const auto qi = static_cast<Distance>(q);
    std::vector<std::vector<Distance>> dist(q, std::vector<Distance>(q, 0));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            const Distance k = std::abs(static_cast<Distance>(i) - static_cast<Distance>(j));
            dist[i][j] = metric == RotationMetric::arc ? std::min(k, qi - k) * scale : k * (qi - k) * scale;
        }
    }
    std::vector<Point> map(q);
    for (std::size_t i = 0; i < q; ++i) map[i] = static_cast<Point>((i + 1) % q);
    try {
        return FiniteSystem(std::move(dist), std::move(map), scale);
    } catch (const validation_error& e) {
        throw error(std::string("rotation metric table failed validation: ") + e.what());
    }
}

struct IntervalMap {
    enum Kind { logistic, tent } kind = tent;
    std::int64_t r_num = 4; // logistic parameter r = r_num / r_den
    std::int64_t r_den = 1;

    static IntervalMap make_tent() { return {tent, 1, 1}; }
    static IntervalMap make_logistic(std::int64_t num, std::int64_t den) { return {logistic, num, den}; }
};

/// Discretizes an interval map on [0, 1] to the N cell centers (2k+1)/(2N).
/// Each center's image is evaluated exactly as a rational and sent to the
/// nearest center, ties going to the lower one; images outside [0, 1] clamp.
/// Metric: |i - j| * scale.
inline FiniteSystem interval_map_grid(const IntervalMap& m, std::size_t grid, Distance scale = 1) {
    if (grid < 2) throw argument_error("interval grid needs N >= 2");
    if (m.kind == IntervalMap::logistic && m.r_den <= 0) throw argument_error("logistic denominator must be positive");
    const auto n = static_cast<__int128>(grid);
    std::vector<Point> map(grid);
    std::vector<std::string> labels(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        const auto a = static_cast<__int128>(2 * k + 1);
        // image * N as the fraction num / den
        __int128 num, den;
        if (m.kind == IntervalMap::tent) {
            num = 2 * a <= 2 * n ? a : 2 * n - a;
            den = 1;
        } else {
            num = static_cast<__int128>(m.r_num) * a * (2 * n - a);
            den = 4 * static_cast<__int128>(m.r_den) * n;
        }
        // nearest center = ceil(image * N) - 1, which rounds boundary ties down
        __int128 idx = num <= 0 ? 0 : (num - 1) / den;
        idx = std::clamp<__int128>(idx, 0, n - 1);
        map[k] = static_cast<Point>(idx);
        const auto g = std::gcd(2 * k + 1, 2 * grid);
        labels[k] = std::to_string((2 * k + 1) / g) + "/" + std::to_string(2 * grid / g);
    }
    std::vector<std::vector<Distance>> dist(grid, std::vector<Distance>(grid));
    for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j)
            dist[i][j] = std::abs(static_cast<Distance>(i) - static_cast<Distance>(j)) * scale;
    return FiniteSystem(std::move(dist), std::move(map), scale, std::move(labels));
}

enum class RandomMetric {
    line,         // |i - j| * scale
    random_valid, // shortest-path closure of random symmetric weights
};

/// Seeded random self-map. Draws come from mt19937_64(seed) through
/// uniform_below: first the N map entries, then (random_valid only) the
/// upper-triangle weights in row order, each in [1, max_weight] * scale.
inline FiniteSystem random_map(std::size_t n, RandomMetric metric, std::uint64_t seed, Distance scale = 1,
                               Distance max_weight = 8) {
    if (n < 1) throw argument_error("random map needs N >= 1");
    if (max_weight < 1) throw argument_error("max_weight must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Point> map(n);
    for (auto& m : map) m = static_cast<Point>(uniform_below(rng, n));

    std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Distance w = metric == RandomMetric::line
                                   ? static_cast<Distance>(j - i)
                                   : 1 + static_cast<Distance>(uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
            d[i][j] = d[j][i] = w * scale;
        }
    }
    if (metric == RandomMetric::random_valid)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return FiniteSystem(std::move(d), std::move(map), scale);
}

/// Disjoint cycles of the given sizes, laid out consecutively. Inside a cycle
/// the distance is the arc metric; across cycles it is `separation`, which
/// must be at least every cycle's diameter.
inline FiniteSystem disjoint_attractors(const std::vector<std::size_t>& sizes, Distance separation) {
    if (sizes.size() < 2) throw argument_error("disjoint attractors needs at least two cycles");
    Distance widest = 1;
    for (auto g : sizes) {
        if (g < 1) throw argument_error("cycle sizes must be positive");
        widest = std::max(widest, static_cast<Distance>(g / 2));
    }
    if (separation < widest)
        throw argument_error("separation " + std::to_string(separation) + " is below the largest cycle diameter " +
                             std::to_string(widest));
    const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::vector<std::size_t> owner(n), offset(n);
    std::vector<Point> map(n);
    std::size_t base = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            owner[base + i] = c;
            offset[base + i] = i;
            map[base + i] = static_cast<Point>(base + (i + 1) % sizes[c]);
        }
        base += sizes[c];
    }
    std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n, separation));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (owner[i] != owner[j]) continue;
            const auto q = static_cast<Distance>(sizes[owner[i]]);
            const Distance k = std::abs(static_cast<Distance>(offset[i]) - static_cast<Distance>(offset[j]));
            dist[i][j] = std::min(k, q - k);
        }
    }
    return FiniteSystem(std::move(dist), std::move(map), 1);
}

struct NamedSystem {
    std::string name;
    FiniteSystem system;
};

/// Fixed test corpus: rotations, disjoint attractors, seeded random maps and
/// discretized interval maps, keeping only systems with at most max_points.
inline std::vector<NamedSystem> standard_zoo(std::size_t max_points) {
    std::vector<NamedSystem> zoo;
    auto add = [&](std::string name, FiniteSystem s) {
        if (s.size() <= max_points) zoo.push_back({std::move(name), std::move(s)});
    };

    for (std::size_t q : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24, 32, 48, 64}) {
        if (q > max_points) continue;
        add("rotation-arc-" + std::to_string(q), cyclic_rotation(q, RotationMetric::arc));
        add("rotation-chord-" + std::to_string(q), cyclic_rotation(q, RotationMetric::chordlike));
    }

    const std::vector<std::pair<std::vector<std::size_t>, Distance>> attractors = {
        {{1, 1}, 10}, {{2, 1}, 3}, {{2, 2}, 5}, {{3, 1}, 2}, {{1, 1, 1}, 4},
        {{3, 2}, 7},  {{4, 4}, 2}, {{5, 3}, 9}, {{6, 6, 4}, 3}, {{12, 8, 4}, 20},
    };
    for (const auto& [sizes, sep] : attractors) {
        std::string name = "attractors";
        for (auto g : sizes) name += "-" + std::to_string(g);
        name += "-sep" + std::to_string(sep);
        const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
        if (total <= max_points) add(name, disjoint_attractors(sizes, sep));
    }

    const std::size_t sizes[] = {3, 5, 8, 12, 16, 24, 32, 48, 64};
    std::size_t emitted = 0;
    for (std::uint64_t seed = 1; emitted < 20 && seed < 400; ++seed) {
        std::size_t n = sizes[seed % std::size(sizes)];
        if (n > max_points) n = std::max<std::size_t>(1, std::min(max_points, 2 + seed % max_points));
        const auto metric = seed % 2 ? RandomMetric::random_valid : RandomMetric::line;
        add("random-" + std::string(seed % 2 ? "valid" : "line") + "-n" + std::to_string(n) + "-seed" +
                std::to_string(seed),
            random_map(n, metric, seed));
        ++emitted;
    }

    for (std::size_t grid : {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64}) {
        if (grid > max_points) continue;
        const auto g = std::to_string(grid);
        add("tent-" + g, interval_map_grid(IntervalMap::make_tent(), grid));
        add("logistic-4-" + g, interval_map_grid(IntervalMap::make_logistic(4, 1), grid));
        add("logistic-7/2-" + g, interval_map_grid(IntervalMap::make_logistic(7, 2), grid));
        add("logistic-3-" + g, interval_map_grid(IntervalMap::make_logistic(3, 1), grid));
    }
    return zoo;
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_ZOO_HPP
