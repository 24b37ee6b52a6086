#ifndef PSEUDOTRAP_ENTOURAGE_HPP
#define PSEUDOTRAP_ENTOURAGE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pseudotrap/system.hpp"

namespace pseudotrap {

namespace detail {
inline void require_same_size(const Entourage& a, const Entourage& b) {
    if (a.size() != b.size())
        throw argument_error("entourage dimension mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}
} // namespace detail

/// a o b = {(x, z) : exists y with (x, y) in a and (y, z) in b}.
/// Row x of the result is the union of b's rows over a's row x.
inline Entourage compose(const Entourage& a, const Entourage& b) {
    detail::require_same_size(a, b);
    const std::size_t n = a.size();
    std::vector<PointSet> rows(n, PointSet(n));
    for (Point x = 0; x < n; ++x) a.row(x).for_each([&](Point y) { rows[x] |= b.row(y); });
    return Entourage(std::move(rows));
}

inline Entourage inverse(const Entourage& a) {
    const std::size_t n = a.size();
    std::vector<PointSet> rows(n, PointSet(n));
    for (Point x = 0; x < n; ++x) a.row(x).for_each([&](Point y) { rows[y].insert(x); });
    return Entourage(std::move(rows));
}

inline bool is_symmetric(const Entourage& a) { return inverse(a) == a; }

/// nA = A o A o ... o A (n copies). n_fold(a, 1) == a.
inline Entourage n_fold(const Entourage& a, std::size_t n) {
    if (n == 0) throw argument_error("n_fold needs n >= 1");
    Entourage out = a;
    for (std::size_t k = 1; k < n; ++k) out = compose(out, a);
    return out;
}

inline Entourage intersect(const Entourage& a, const Entourage& b) {
    detail::require_same_size(a, b);
    std::vector<PointSet> rows = a.rows();
    for (Point x = 0; x < a.size(); ++x) rows[x] &= b.row(x);
    return Entourage(std::move(rows));
}

/// B_E(p) = {y : (p, y) in E}.
inline PointSet ball(const Entourage& a, Point p) {
    if (p >= a.size()) throw argument_error("point " + std::to_string(p) + " out of range");
    return a.row(p);
}

/// B_E(A) = union of B_E(x) over x in A. Empty for empty A.
inline PointSet ball_set(const Entourage& a, const PointSet& s) {
    if (s.universe() != a.size()) throw argument_error("point set width does not match entourage");
    PointSet out(a.size());
    s.for_each([&](Point x) { out |= a.row(x); });
    return out;
}

struct AxiomResult {
    bool pass = true;
    // Family indices of the first failure: (i, j) for the intersection axiom,
    // (i, i) for the composition and inverse axioms.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct UniformityBaseReport {
    AxiomResult intersection; // for all i, j: some D in fam with D within fam[i] & fam[j]
    AxiomResult composition;  // for all i: some D in fam with D o D within fam[i]
    AxiomResult inversion;    // for all i: some D in fam with D^-1 within fam[i]
    bool separating = false;  // intersection of the family is the diagonal

    bool all_pass() const noexcept { return intersection.pass && composition.pass && inversion.pass; }
};

/// Checks the three base properties of a uniformity on a finite family of
/// entourages, plus whether the family separates points.
inline UniformityBaseReport check_uniformity_base(const std::vector<Entourage>& fam) {
    if (fam.empty()) throw argument_error("uniformity base check needs a nonempty family");
    for (const auto& e : fam) detail::require_same_size(fam.front(), e);

    UniformityBaseReport rep;
    const std::size_t k = fam.size();

    std::vector<Entourage> squares, inverses;
    squares.reserve(k);
    inverses.reserve(k);
    for (const auto& d : fam) {
        squares.push_back(compose(d, d));
        inverses.push_back(inverse(d));
    }

    auto some_member_within = [&](const std::vector<Entourage>& cands, const Entourage& target) {
        for (const auto& c : cands)
            if (c.is_subset_of(target)) return true;
        return false;
    };

    for (std::size_t i = 0; i < k && rep.intersection.pass; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            if (!some_member_within(fam, intersect(fam[i], fam[j]))) {
                rep.intersection = {false, std::pair{i, j}};
                break;
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!some_member_within(squares, fam[i])) {
            rep.composition = {false, std::pair{i, i}};
            break;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!some_member_within(inverses, fam[i])) {
            rep.inversion = {false, std::pair{i, i}};
            break;
        }
    }

    Entourage meet = fam.front();
    for (const auto& e : fam) meet = intersect(meet, e);
    rep.separating = meet == Entourage::diagonal(meet.size());
    return rep;
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_ENTOURAGE_HPP
