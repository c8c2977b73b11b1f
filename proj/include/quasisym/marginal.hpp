#pragma once

#include "quasisym/game.hpp"
#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"
#include "quasisym/value.hpp"

#include <span>
#include <utility>
#include <vector>

namespace quasisym {

/// Dense distributions over S_n are limited to n <= 8 (40320 weights).
inline constexpr int kMaxDistributionPlayers = 8;

/// All n! permutations of degree n in lexicographic order.
const std::vector<Permutation>& all_permutations(int n);

/// Position of p in all_permutations(p.degree()).
std::size_t permutation_rank(const Permutation& p);

/// Probability distribution over S_n, stored densely in lexicographic
/// permutation order. Weights are nonnegative and sum to 1.
class MarginalDistribution {
public:
    /// Throws InvalidArgument on wrong length, a negative weight, or total != 1.
    MarginalDistribution(int n, std::vector<Rational> weights);

    static MarginalDistribution uniform(int n);
    static MarginalDistribution point_mass(const Permutation& p);

    int players() const { return n_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(const Permutation& p) const { return weights_[permutation_rank(p)]; }

    friend bool operator==(const MarginalDistribution&, const MarginalDistribution&) = default;

private:
    int n_;
    std::vector<Rational> weights_;
};

/// γ: nonempty coalitions → players with γ(R) ∈ R. choice[0] is unused.
struct Selector {
    int n;
    std::vector<int> choice;

    /// Throws InvalidArgument unless choice has 2^n entries and γ(R) ∈ R.
    void validate() const;

    /// γ(R) = max(R), the selector of the identity arrival order.
    static Selector max_member(int n);
};

/// Last-arriving member under arrival order p(0), p(1), ..., p(n-1), i.e. the
/// i ∈ R maximising p⁻¹(i).
int last_arrival(const Permutation& p, Mask coalition);

/// (m_p)_{iR} = 1 iff i is the last arrival of R.
ValueMatrix marginal_matrix(const Permutation& p);

/// a_{iR} = δ_{i, γ(R)}
ValueMatrix selector_matrix(const Selector& s);

/// Σ_p weight(p) · m_p, reduced in parallel over permutations.
ValueMatrix average(const MarginalDistribution& d);

/// Distribution with weight(g p) = rep_weights(p) for g ∈ G. The keys must be
/// a transversal of the cosets {g p : g ∈ G}. Throws InvalidArgument when two
/// keys share a coset, a coset is missed, a weight is negative, or the mass is
/// not 1.
MarginalDistribution coset_constant(const PermGroup& group,
                                    std::span<const std::pair<Permutation, Rational>> rep_weights);

/// Smallest element of every coset {g p : g ∈ G}, in increasing order.
std::vector<Permutation> coset_representatives(const PermGroup& group);

/// s/n! on even and (2 − s)/n! on odd permutations, s ∈ [0, 2].
MarginalDistribution parity_weighted(int n, const Rational& s);

/// 1/n! off S₀ (permutations fixing every player outside omega0), α/n! on the
/// even and (2 − α)/n! on the odd elements of S₀. Requires |omega0| > 3 and
/// 0 < α < 2.
MarginalDistribution shapley_family(const Coalition& omega0, const Rational& alpha);

/// Rank of {weights(d) − uniform}. The family together with the uniform
/// distribution is affinely independent iff this equals ds.size().
std::size_t affine_rank(std::span<const MarginalDistribution> ds);

/// Rank of {average(d) − shapley(n)}: the affine dimension spanned by the
/// quasi-values the distributions average to (with Shapley as base point).
std::size_t operator_affine_rank(std::span<const MarginalDistribution> ds);

} // namespace quasisym
