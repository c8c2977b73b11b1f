#pragma once

#include "quasisym/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quasisym {

/// Largest supported number of points. Images are packed into 4-bit nibbles.
inline constexpr int kMaxPoints = 16;

/// Bitmask of players; bit i set means player i (0-indexed) is a member.
using Mask = std::uint32_t;

/// Cycle type of a permutation: j[k-1] is the number of k-cycles.
struct CycleType {
    std::vector<int> j;

    int degree() const;
    int num_cycles() const;
    int fixed_points() const { return j.empty() ? 0 : j[0]; }

    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// A bijection of {0, ..., n-1}. Value type, ordered lexicographically by
/// image sequence (for equal degree).
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidArgument unless `image` is a bijection of {0..n-1}.
    explicit Permutation(std::span<const int> image);

    static Permutation identity(int n);

    int degree() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    std::vector<int> image() const;

    /// Image of a coalition: {p(i) : i in mask}.
    Mask apply(Mask mask) const;

    Permutation inverse() const;
    bool is_identity() const;

    CycleType cycle_type() const;
    int num_cycles() const;
    int num_fixed_points() const;
    bool is_even() const { return (n_ - num_cycles()) % 2 == 0; }

    /// Packed image, most significant nibble = image of point 0. Numeric order
    /// agrees with lexicographic order on images of equal degree.
    std::uint64_t key() const;

    /// 1-indexed disjoint-cycle notation, fixed points omitted, "()" for the
    /// identity.
    std::string to_cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static constexpr std::array<std::uint8_t, kMaxPoints> identity_image() {
        std::array<std::uint8_t, kMaxPoints> a{};
        for (int i = 0; i < kMaxPoints; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return a;
    }

    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxPoints> img_ = identity_image();

    friend Permutation compose(const Permutation& p, const Permutation& q);
};

/// (p ∘ q)(x) = p(q(x)). Throws InvalidArgument on mismatched degree.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g h g⁻¹
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Parses disjoint-cycle notation with 1-indexed points, e.g. "(1 2)(3 4)" or
/// "(1,2,3)". For n <= 9 the compact form "(12345)" is accepted as well.
Permutation parse_cycles(std::string_view text, int n);

/// Cycle index as a finite map from cycle type to coefficient.
struct CycleIndex {
    int n = 0;
    std::map<CycleType, Rational> terms;

    /// Z_G with every variable set to x.
    Rational evaluate_at(const Rational& x) const;
    /// dZ_G/dx_1 with every variable set to x.
    Rational d_dx1_at(const Rational& x) const;
    std::string to_string() const;
};

/// A finite permutation group with its full element list (sorted).
class PermGroup {
public:
    PermGroup() = default;

    /// Smallest group containing `generators`; the trivial group when empty.
    static PermGroup generate(int n, std::span<const Permutation> generators);

    /// Wraps an element list that is already known to be a group. A small
    /// generating set is picked greedily. Throws std::logic_error when the
    /// list is not closed.
    static PermGroup from_elements(int n, std::vector<Permutation> elements);

    int degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }

    bool contains(const Permutation& p) const;
    /// Position of `p` in elements(); order() when absent.
    std::size_t index_of(const Permutation& p) const;

    bool is_subgroup_of(const PermGroup& other) const;

    /// s G s⁻¹
    PermGroup conjugate_by(const Permutation& s) const;

    std::string describe() const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }

private:
    int n_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

inline PermGroup closure(int n, std::span<const Permutation> generators) {
    return PermGroup::generate(n, generators);
}

/// Orbits of `points` under G, where act(g, point) returns g·point. Computed
/// by breadth-first expansion with the generators only. Each orbit is sorted;
/// orbits are ordered by their smallest point.
template <class Point, class Action>
std::vector<std::vector<Point>> orbits(const PermGroup& group, std::span<const Point> points,
                                       Action&& act) {
    std::unordered_map<Point, std::size_t> position;
    position.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) position.emplace(points[k], k);

    std::vector<bool> seen(points.size(), false);
    std::vector<std::vector<Point>> result;
    std::vector<std::size_t> order(points.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    for (std::size_t start : order) {
        if (seen[start]) continue;
        std::vector<Point> orbit{points[start]};
        seen[start] = true;
        std::deque<Point> queue{points[start]};
        while (!queue.empty()) {
            const Point x = queue.front();
            queue.pop_front();
            for (const auto& g : group.generators()) {
                const Point y = act(g, x);
                const auto it = position.find(y);
                if (it == position.end() || seen[it->second]) continue;
                seen[it->second] = true;
                orbit.push_back(y);
                queue.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

/// Orbits of the nonempty coalitions under g·R = {g(i) : i ∈ R}.
std::vector<std::vector<Mask>> coalition_orbits(const PermGroup& group);

/// Setwise stabilizer {g ∈ G : g·A = A}.
PermGroup stabilizer(const PermGroup& group, Mask coalition);

CycleIndex cycle_index(const PermGroup& group);

PermGroup trivial_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
/// Direct product of the symmetric groups on each block. Blocks hold 0-indexed
/// players and must partition {0, ..., n-1}.
PermGroup caste_group(const std::vector<std::vector<int>>& blocks);

} // namespace quasisym
