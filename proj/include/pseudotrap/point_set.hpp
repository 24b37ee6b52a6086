#ifndef PSEUDOTRAP_POINT_SET_HPP
#define PSEUDOTRAP_POINT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "pseudotrap/errors.hpp"

namespace pseudotrap {

using Point = std::uint32_t;

/// Subset of the points 0..N-1 of a finite system, stored as a bitset whose
/// width is fixed at construction. Binary operations require equal widths.
class PointSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    PointSet() = default;

    explicit PointSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    PointSet(std::size_t universe, std::initializer_list<Point> members)
        : PointSet(universe) {
        for (Point p : members) insert(p);
    }

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        for (auto& w : s.words_) w = ~word_type{0};
        s.trim();
        return s;
    }

    static PointSet singleton(std::size_t universe, Point p) {
        PointSet s(universe);
        s.insert(p);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Point p) const noexcept {
        return p < universe_ && ((words_[p / word_bits] >> (p % word_bits)) & 1u);
    }

    void insert(Point p) {
        check_index(p);
        words_[p / word_bits] |= word_type{1} << (p % word_bits);
    }

    void erase(Point p) {
        check_index(p);
        words_[p / word_bits] &= ~(word_type{1} << (p % word_bits));
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_subset_of(const PointSet& other) const {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const PointSet& other) const {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    PointSet& operator|=(const PointSet& other) {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    PointSet& operator&=(const PointSet& other) {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    // Set difference.
    PointSet& operator-=(const PointSet& other) {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    PointSet complement() const {
        PointSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

    /// Smallest member; universe() when empty.
    Point first() const noexcept { return next_from(0); }

    /// Smallest member >= p; universe() when none.
    Point next_from(std::size_t p) const noexcept {
        if (p >= universe_) return static_cast<Point>(universe_);
        std::size_t wi = p / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (p % word_bits));
        while (true) {
            if (w) return static_cast<Point>(wi * word_bits + std::countr_zero(w));
            if (++wi == words_.size()) return static_cast<Point>(universe_);
            w = words_[wi];
        }
    }

    std::vector<Point> members() const {
        std::vector<Point> out;
        for_each([&](Point p) { out.push_back(p); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                f(static_cast<Point>(wi * word_bits + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<word_type>& words() const noexcept { return words_; }

    std::size_t hash() const noexcept {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check_index(Point p) const {
        if (p >= universe_)
            throw argument_error("point index " + std::to_string(p) + " out of range for " +
                                 std::to_string(universe_) + " points");
    }

    void check_width(const PointSet& other) const {
        if (other.universe_ != universe_)
            throw argument_error("point set width mismatch: " + std::to_string(universe_) + " vs " +
                                 std::to_string(other.universe_));
    }

    void trim() noexcept {
        if (universe_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word_type> words_;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

} // namespace pseudotrap

#endif // PSEUDOTRAP_POINT_SET_HPP
