#ifndef PSEUDOTRAP_SYSTEM_HPP
#define PSEUDOTRAP_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudotrap/errors.hpp"
#include "pseudotrap/point_set.hpp"

namespace pseudotrap {

/// Scaled integer distance; one unit is 1/scale of the modelled metric.
using Distance = std::int64_t;

/// A finite dynamical system (X, f): N points, an exact integer metric and a
/// self-map. Every finite discrete space is compact Hausdorff and every
/// self-map of it is continuous, so these are honest models of the setting.
///
/// Instances are validated on construction and immutable afterwards.
class FiniteSystem {
public:
    /// Validates and builds a system. `dist` is row-major N x N.
    /// Throws validation_error naming the first failing index or triple.
    FiniteSystem(std::vector<std::vector<Distance>> dist, std::vector<Point> map, Distance scale = 1,
                 std::optional<std::vector<std::string>> labels = std::nullopt)
        : n_(map.size()), scale_(scale), map_(std::move(map)), labels_(std::move(labels)) {
        if (n_ == 0) throw validation_error("num_points must be positive");
        if (scale_ <= 0) throw validation_error("scale must be positive");
        if (dist.size() != n_)
            throw validation_error("dist has " + std::to_string(dist.size()) + " rows, expected " +
                                   std::to_string(n_));
        dist_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (dist[i].size() != n_)
                throw validation_error("dist row " + std::to_string(i) + " has " +
                                       std::to_string(dist[i].size()) + " entries, expected " +
                                       std::to_string(n_));
            dist_.insert(dist_.end(), dist[i].begin(), dist[i].end());
        }
        if (labels_ && labels_->size() != n_)
            throw validation_error("labels has " + std::to_string(labels_->size()) + " entries, expected " +
                                   std::to_string(n_));
        validate();
    }

    std::size_t size() const noexcept { return n_; }
    Distance scale() const noexcept { return scale_; }
    Distance dist(Point i, Point j) const noexcept { return dist_[i * n_ + j]; }
    Point f(Point i) const noexcept { return map_[i]; }
    const std::vector<Point>& map() const noexcept { return map_; }
    const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

    std::string label(Point i) const {
        return labels_ ? (*labels_)[i] : std::to_string(i);
    }

    std::vector<std::vector<Distance>> dist_table() const {
        std::vector<std::vector<Distance>> t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            t[i].assign(dist_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                        dist_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        return t;
    }

    Distance diameter() const noexcept {
        Distance d = 0;
        for (auto v : dist_) d = std::max(d, v);
        return d;
    }

    void check_point(Point p) const {
        if (p >= n_)
            throw argument_error("point " + std::to_string(p) + " out of range for " + std::to_string(n_) +
                                 " points");
    }

    friend bool operator==(const FiniteSystem&, const FiniteSystem&) = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (map_[i] >= n_)
                throw validation_error("map[" + std::to_string(i) + "] = " + std::to_string(map_[i]) +
                                       " is not a valid point index");
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const Distance d = dist_[i * n_ + j];
                const std::string at = "dist[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                if (d < 0) throw validation_error(at + " is negative");
                if (i == j && d != 0) throw validation_error(at + " must be 0");
                if (i != j && d == 0) throw validation_error(at + " must be positive");
                if (d != dist_[j * n_ + i]) throw validation_error(at + " is not symmetric");
            }
        }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (dist_[i * n_ + k] > dist_[i * n_ + j] + dist_[j * n_ + k])
                        throw validation_error("triangle inequality fails for (" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + std::to_string(k) + "): " +
                                               std::to_string(dist_[i * n_ + k]) + " > " +
                                               std::to_string(dist_[i * n_ + j]) + " + " +
                                               std::to_string(dist_[j * n_ + k]));
    }

    std::size_t n_;
    Distance scale_;
    std::vector<Distance> dist_;
    std::vector<Point> map_;
    std::optional<std::vector<std::string>> labels_;
};

/// A reflexive relation on the points of a system: row x holds B_E(x).
class Entourage {
public:
    explicit Entourage(std::vector<PointSet> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].universe() != rows_.size())
                throw validation_error("entourage row " + std::to_string(i) + " has width " +
                                       std::to_string(rows_[i].universe()) + ", expected " +
                                       std::to_string(rows_.size()));
            if (!rows_[i].contains(static_cast<Point>(i)))
                throw validation_error("entourage is not reflexive at (" + std::to_string(i) + "," +
                                       std::to_string(i) + ")");
        }
    }

    static Entourage diagonal(std::size_t n) {
        std::vector<PointSet> rows;
        rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rows.push_back(PointSet::singleton(n, static_cast<Point>(i)));
        return Entourage(std::move(rows));
    }

    static Entourage full(std::size_t n) { return Entourage(std::vector<PointSet>(n, PointSet::full(n))); }

    /// The diagonal together with the listed pairs.
    static Entourage with_pairs(std::size_t n, const std::vector<std::pair<Point, Point>>& pairs) {
        auto rows = diagonal(n).rows_;
        for (auto [x, y] : pairs) {
            if (x >= n || y >= n) throw argument_error("entourage pair out of range");
            rows[x].insert(y);
        }
        return Entourage(std::move(rows));
    }

    std::size_t size() const noexcept { return rows_.size(); }
    bool contains(Point x, Point y) const noexcept { return rows_[x].contains(y); }
    const PointSet& row(Point x) const noexcept { return rows_[x]; }
    const std::vector<PointSet>& rows() const noexcept { return rows_; }

    bool is_subset_of(const Entourage& other) const {
        if (other.size() != size()) throw argument_error("entourage dimension mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!rows_[i].is_subset_of(other.rows_[i])) return false;
        return true;
    }

    friend bool operator==(const Entourage&, const Entourage&) = default;

private:
    std::vector<PointSet> rows_;
};

/// Finite sequence (x_0, ..., x_n) of points; steps() is n.
struct Walk {
    std::vector<Point> points;

    Walk() = default;
    explicit Walk(std::vector<Point> pts) : points(std::move(pts)) {
        if (points.empty()) throw argument_error("a walk has at least one point");
    }

    std::size_t steps() const noexcept { return points.empty() ? 0 : points.size() - 1; }
    Point operator[](std::size_t i) const noexcept { return points[i]; }

    PointSet point_set(std::size_t universe) const {
        PointSet s(universe);
        for (Point p : points) s.insert(p);
        return s;
    }

    friend bool operator==(const Walk&, const Walk&) = default;
    friend auto operator<=>(const Walk&, const Walk&) = default;
};

/// E_eps = {(x, y) : dist(x, y) < eps}. Throws for eps < 1, whose strict ball
/// would not contain the diagonal.
inline Entourage metric_entourage(const FiniteSystem& s, Distance eps) {
    if (eps < 1) throw argument_error("eps must be a positive integer, got " + std::to_string(eps));
    const std::size_t n = s.size();
    std::vector<PointSet> rows(n, PointSet(n));
    for (Point i = 0; i < n; ++i)
        for (Point j = 0; j < n; ++j)
            if (s.dist(i, j) < eps) rows[i].insert(j);
    return Entourage(std::move(rows));
}

/// Open metric ball B_eps(p) = {y : dist(p, y) < eps}.
inline PointSet metric_ball(const FiniteSystem& s, Point p, Distance eps) {
    PointSet b(s.size());
    for (Point y = 0; y < s.size(); ++y)
        if (s.dist(p, y) < eps) b.insert(y);
    return b;
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_SYSTEM_HPP
