#ifndef PSEUDOTRAP_PRODUCT_SEARCH_HPP
#define PSEUDOTRAP_PRODUCT_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pseudotrap/pseudo_orbit.hpp"
#include "pseudotrap/system.hpp"

namespace pseudotrap {

inline constexpr std::uint64_t default_state_cap = 10'000'000;

namespace detail {

/// Safety search over the product of a pseudo-orbit graph with the
/// "still uncovered" masks of a list of target sets.
///
/// A product state is (current point, U_1..U_k) where U_j is the part of
/// target j not yet within eps of any visited point. Moving to y removes
/// everything y eps-covers. A state is alive while every U_j is nonempty;
/// a walk whose final state is alive is a counterexample. Masks only shrink
/// along a walk, so any product cycle keeps its mask constant, and an alive
/// state on a cycle yields counterexamples of every length (a lasso).
///
/// Targets are packed into one bitset of sum |target_j| bits. Masks are
/// interned in an arena so a state is two 32-bit ids.
class ProductSearch {
public:
    struct Layered {
        bool counterexample_found = false;
        std::vector<Point> walk; // lexicographically least alive walk of n steps
    };

    struct Explored {
        bool lasso = false;
        std::size_t min_n = 0;   // least n with no alive n-step walk (when !lasso)
        std::vector<Point> walk; // stem followed by one loop, ending on loop start
        std::size_t loop_start = 0;
    };

    ProductSearch(const FiniteSystem& s, const PseudoOrbitGraph& g, Distance eps,
                  const std::vector<PointSet>& targets, std::uint64_t state_cap)
        : g_(&g), n_(s.size()), state_cap_(state_cap) {
        if (eps < 1) throw argument_error("eps must be a positive integer");
        if (g.size() != n_) throw argument_error("graph does not match the system");
        if (targets.empty()) throw argument_error("product search needs at least one target");

        std::vector<Point> bit_point;
        std::vector<std::size_t> seg_begin;
        for (const auto& t : targets) {
            if (t.empty()) throw argument_error("product search target is empty");
            seg_begin.push_back(bit_point.size());
            t.for_each([&](Point p) { bit_point.push_back(p); });
        }
        bits_ = bit_point.size();
        words_ = (bits_ + 63) / 64;
        seg_begin.push_back(bits_);

        cov_.assign(n_ * words_, 0);
        for (Point y = 0; y < n_; ++y)
            for (std::size_t b = 0; b < bits_; ++b)
                if (s.dist(y, bit_point[b]) < eps) cov_[y * words_ + b / 64] |= std::uint64_t{1} << (b % 64);

        segs_.assign(targets.size() * words_, 0);
        for (std::size_t j = 0; j < targets.size(); ++j)
            for (std::size_t b = seg_begin[j]; b < seg_begin[j + 1]; ++b)
                segs_[j * words_ + b / 64] |= std::uint64_t{1} << (b % 64);

        scratch_.assign(words_, 0);
        full_.assign(words_, 0);
        for (std::size_t b = 0; b < bits_; ++b) full_[b / 64] |= std::uint64_t{1} << (b % 64);
    }

    /// Decides whether an alive walk with exactly `steps` steps exists,
    /// exploring layers 0..steps with per-layer deduplication. Layers are kept
    /// in order of each state's least reaching prefix, so the first state of
    /// the last layer ends the lexicographically least counterexample.
    Layered layered(std::size_t steps) {
        struct Node {
            std::uint32_t state;
            std::uint32_t parent;
        };
        std::vector<std::vector<Node>> layers(1);
        for (Point x = 0; x < n_; ++x) {
            initial_mask(x);
            if (alive_scratch()) layers[0].push_back({intern(x), 0});
        }
        charge(layers[0].size());

        std::unordered_map<std::uint32_t, std::uint32_t> seen;
        for (std::size_t t = 0; t < steps && !layers.back().empty(); ++t) {
            seen.clear();
            std::vector<Node> next;
            const auto& cur = layers.back();
            for (std::uint32_t pos = 0; pos < cur.size(); ++pos) {
                const auto [pt, mask] = states_[cur[pos].state];
                g_->successors(pt).for_each([&](Point y) {
                    if (!step_scratch(mask, y)) return;
                    const std::uint32_t id = intern(y);
                    if (seen.emplace(id, static_cast<std::uint32_t>(next.size())).second) {
                        next.push_back({id, pos});
                        charge(1);
                    }
                });
            }
            layers.push_back(std::move(next));
        }

        Layered out;
        if (layers.size() != steps + 1 || layers.back().empty()) return out;
        out.counterexample_found = true;
        out.walk.resize(steps + 1);
        std::uint32_t pos = 0;
        for (std::size_t t = steps + 1; t-- > 0;) {
            out.walk[t] = states_[layers[t][pos].state].point;
            pos = layers[t][pos].parent;
        }
        return out;
    }

    /// Explores every reachable alive state depth-first (initial points and
    /// successors ascending). A back edge is a lasso; otherwise the alive
    /// region is a DAG and the longest alive walk fixes the least safe n.
    Explored explore() {
        enum : char { white, gray, black };
        std::vector<char> color;
        std::vector<std::uint32_t> height; // longest alive walk (steps) from the state
        struct Frame {
            std::uint32_t state;
            std::uint32_t cursor; // next successor candidate
        };
        std::vector<Frame> stack;
        auto grow = [&] {
            if (color.size() < states_.size()) {
                color.resize(states_.size(), white);
                height.resize(states_.size(), 0);
            }
        };

        Explored out;
        bool any_initial = false;
        std::uint32_t longest = 0;
        for (Point x0 = 0; x0 < n_; ++x0) {
            initial_mask(x0);
            if (!alive_scratch()) continue;
            any_initial = true;
            const std::uint32_t root = intern(x0);
            grow();
            if (color[root] == black) {
                longest = std::max(longest, height[root]);
                continue;
            }
            color[root] = gray;
            stack.push_back({root, 0});
            while (!stack.empty()) {
                Frame& fr = stack.back();
                const auto [pt, mask] = states_[fr.state];
                const Point y = g_->successors(pt).next_from(fr.cursor);
                if (y >= n_) {
                    color[fr.state] = black;
                    const std::uint32_t h = height[fr.state];
                    stack.pop_back();
                    if (!stack.empty()) {
                        auto& ph = height[stack.back().state];
                        ph = std::max(ph, h + 1);
                    }
                    continue;
                }
                fr.cursor = y + 1;
                if (!step_scratch(mask, y)) continue;
                const std::uint32_t child = intern(y);
                grow();
                if (color[child] == gray) {
                    out.lasso = true;
                    for (const auto& f : stack) out.walk.push_back(states_[f.state].point);
                    out.walk.push_back(y);
                    for (std::size_t i = 0; i < stack.size(); ++i)
                        if (stack[i].state == child) out.loop_start = i;
                    return out;
                }
                if (color[child] == black) {
                    height[fr.state] = std::max(height[fr.state], height[child] + 1);
                    continue;
                }
                color[child] = gray;
                stack.push_back({child, 0});
            }
            longest = std::max(longest, height[root]);
        }
        out.min_n = any_initial ? std::size_t{longest} + 1 : 0;
        return out;
    }

    std::size_t states_interned() const noexcept { return states_.size(); }

private:
    struct State {
        Point point;
        std::uint32_t mask;
    };

    void initial_mask(Point x) {
        for (std::size_t w = 0; w < words_; ++w) scratch_[w] = full_[w] & ~cov_[x * words_ + w];
    }

    // scratch = mask(id) minus cov(y); returns whether the result is alive.
    bool step_scratch(std::uint32_t mask_id, Point y) {
        const std::uint64_t* m = &arena_[std::size_t{mask_id} * words_];
        for (std::size_t w = 0; w < words_; ++w) scratch_[w] = m[w] & ~cov_[y * words_ + w];
        return alive_scratch();
    }

    bool alive_scratch() const {
        const std::size_t k = segs_.size() / words_;
        for (std::size_t j = 0; j < k; ++j) {
            bool hit = false;
            for (std::size_t w = 0; w < words_ && !hit; ++w) hit = (scratch_[w] & segs_[j * words_ + w]) != 0;
            if (!hit) return false;
        }
        return true;
    }

    std::uint64_t hash_scratch() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : scratch_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    // Interns the scratch mask together with point p and returns the state id.
    std::uint32_t intern(Point p) {
        std::uint32_t mask_id = UINT32_MAX;
        const std::uint64_t h = hash_scratch();
        auto [lo, hi] = mask_index_.equal_range(h);
        for (auto it = lo; it != hi && mask_id == UINT32_MAX; ++it)
            if (std::equal(scratch_.begin(), scratch_.end(), arena_.begin() + static_cast<std::ptrdiff_t>(it->second * words_)))
                mask_id = it->second;
        if (mask_id == UINT32_MAX) {
            mask_id = static_cast<std::uint32_t>(arena_.size() / words_);
            arena_.insert(arena_.end(), scratch_.begin(), scratch_.end());
            mask_index_.emplace(h, mask_id);
        }
        const std::uint64_t key = (std::uint64_t{mask_id} << 32) | p;
        auto [it, fresh] = state_index_.emplace(key, static_cast<std::uint32_t>(states_.size()));
        if (fresh) {
            if (states_.size() >= state_cap_)
                throw resource_cap_exceeded("product search exceeded its state cap", state_cap_);
            states_.push_back({p, mask_id});
        }
        return it->second;
    }

    void charge(std::size_t k) {
        layer_states_ += k;
        if (layer_states_ > state_cap_)
            throw resource_cap_exceeded("product search exceeded its state cap", state_cap_);
    }

    const PseudoOrbitGraph* g_;
    std::size_t n_;
    std::uint64_t state_cap_;
    std::size_t bits_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> cov_;
    std::vector<std::uint64_t> segs_;
    std::vector<std::uint64_t> full_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::uint64_t> arena_;
    std::unordered_multimap<std::uint64_t, std::uint32_t> mask_index_;
    std::unordered_map<std::uint64_t, std::uint32_t> state_index_;
    std::vector<State> states_;
    std::uint64_t layer_states_ = 0;
};

} // namespace detail
} // namespace pseudotrap

#endif // PSEUDOTRAP_PRODUCT_SEARCH_HPP
