#ifndef PSEUDOTRAP_TEST_SUPPORT_HPP
#define PSEUDOTRAP_TEST_SUPPORT_HPP

#include <cstdint>
#include <cstdio>
#include <sys/wait.h>
#include <random>
#include <string>
#include <vector>

#include "pseudotrap/pseudotrap.hpp"

namespace pseudotrap::testing {

// Line metric d(i, j) = |i - j| * scale with the given map.
inline FiniteSystem line_system(std::vector<Point> map, Distance scale = 1) {
    const std::size_t n = map.size();
    std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = (i > j ? i - j : j - i) * scale;
    return FiniteSystem(std::move(d), std::move(map), scale);
}

// Random reflexive relation with roughly `density` percent off-diagonal pairs.
inline Entourage random_entourage(std::mt19937_64& rng, std::size_t n, unsigned density = 30) {
    std::vector<PointSet> rows(n, PointSet(n));
    for (Point i = 0; i < n; ++i) {
        rows[i].insert(i);
        for (Point j = 0; j < n; ++j)
            if (uniform_below(rng, 100) < density) rows[i].insert(j);
    }
    return Entourage(std::move(rows));
}

inline PointSet random_subset(std::mt19937_64& rng, std::size_t n, bool nonempty = false) {
    PointSet s(n);
    for (Point i = 0; i < n; ++i)
        if (uniform_below(rng, 2)) s.insert(i);
    if (nonempty && s.empty()) s.insert(static_cast<Point>(uniform_below(rng, n)));
    return s;
}

struct CommandResult {
    int status = -1;
    std::string out;
};

// Runs a shell command and captures its standard output.
inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace pseudotrap::testing

#endif
