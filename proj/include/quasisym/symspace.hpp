#pragma once

#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"
#include "quasisym/value.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace quasisym {

/// One G-orbit of nonempty coalitions together with the way its
/// representative splits under its own stabilizer.
struct ChiOrbit {
    Mask representative;                   // smallest mask in the orbit
    std::vector<Mask> members;             // sorted
    std::vector<std::vector<int>> blocks;  // G_R-orbits of the representative, by min member

    std::size_t k() const { return blocks.size(); }
    std::vector<std::size_t> block_sizes() const;
};

/// G-orbits of χ (nonempty coalitions) and X (pairs (i, R) with i ∈ R).
/// X-orbits are numbered χ-orbit by χ-orbit, block by block.
struct OrbitStructure {
    int n = 0;
    std::vector<ChiOrbit> chi_orbits;
    std::vector<std::size_t> first_x_orbit;  // per χ-orbit

    std::size_t num_chi_orbits() const { return chi_orbits.size(); }
    std::size_t num_x_orbits() const;

    /// X-orbit id of (i, R); -1 when i ∉ R.
    long x_orbit_of(int player, Mask coalition) const;
    /// Index of the χ-orbit containing R.
    std::size_t chi_orbit_of(Mask coalition) const;

    std::vector<long> x_orbit_table;   // player * (2^n - 1) + (mask - 1)
    std::vector<std::size_t> chi_index;  // by mask, entry 0 unused
};

OrbitStructure orbit_structure(const PermGroup& group);

/// Σ_m (k_m − 1) = |X/G| − |χ/G|
std::size_t dimension_orbit(const PermGroup& group);
std::size_t dimension_orbit(const OrbitStructure& structure);

/// (dZ_G/dx_1 − Z_G) at (2, ..., 2), plus 1, evaluated from the cycle index.
/// Throws std::logic_error if the result is not a nonnegative integer.
std::size_t dimension_cycle_index(const PermGroup& group);

struct DirectionEntry {
    int player;
    Mask coalition;
    Rational value;
};

/// A direction of the affine space, stored as its nonzero entries in
/// (coalition, player) order.
struct Direction {
    std::vector<DirectionEntry> entries;

    ValueMatrix dense(int n) const;
};

/// A_G = base + span(directions), with base the Shapley matrix.
struct Parametrization {
    ValueMatrix base;
    std::vector<Direction> directions;

    std::size_t dimension() const { return directions.size(); }
    /// base + Σ_j coefficients[j] · directions[j]. Throws InvalidArgument on a
    /// length mismatch.
    ValueMatrix point(std::span<const Rational> coefficients) const;
};

/// For every χ-orbit m and block i < k_m, a direction with +1/l_{mi} on the
/// X-orbit (m, i) and −1/l_{m,k_m} on the last block's X-orbit.
Parametrization parametrize(const PermGroup& group);

/// parametrize(group).point(coefficients)
ValueMatrix sample(const PermGroup& group, std::span<const Rational> coefficients);

/// (1/|G|) Σ_g fix(g). Throws std::logic_error when the average is not an
/// integer, which means `fix_counter` is not a group action count.
std::size_t burnside_count(const PermGroup& group,
                           const std::function<Integer(const Permutation&)>& fix_counter);

/// |χ/G| via Burnside: fix(g) = 2^{#cycles(g)} − 1.
std::size_t chi_orbit_count(const PermGroup& group);
/// |X/G| via Burnside: fix(g) = #fixedpoints(g) · 2^{#cycles(g) − 1}.
std::size_t x_orbit_count(const PermGroup& group);

} // namespace quasisym
