#pragma once

#include "quasisym/game.hpp"
#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"

#include <optional>
#include <vector>

namespace quasisym {

/// A linear game value in the unanimity basis: entry (i, R) is the payoff of
/// player i in the game u_R. Stored densely as n × (2^n − 1), columns in
/// increasing mask order.
class ValueMatrix {
public:
    /// Zero matrix.
    explicit ValueMatrix(int n);

    int players() const { return n_; }
    std::size_t columns() const { return cols_; }

    const Rational& operator()(int i, Mask r) const { return a_[index(i, r)]; }
    Rational& operator()(int i, Mask r) { return a_[index(i, r)]; }

    Rational column_sum(Mask r) const;

    ValueMatrix& operator+=(const ValueMatrix& other);
    ValueMatrix& operator-=(const ValueMatrix& other);
    ValueMatrix& operator*=(const Rational& s);

    friend bool operator==(const ValueMatrix&, const ValueMatrix&) = default;

private:
    std::size_t index(int i, Mask r) const {
        return static_cast<std::size_t>(i) * cols_ + (r - 1);
    }

    int n_;
    std::size_t cols_;
    std::vector<Rational> a_;
};

/// a_{iR} = 1/|R| for i ∈ R.
ValueMatrix shapley(int n);

/// Payoffs φ_i(v) = Σ_R a_{iR} Δ_v(R).
Allocation apply(const ValueMatrix& m, const Game& v);

struct QuasiValueViolation {
    enum class Kind { NullPlayer, Efficiency };
    Kind kind;
    int player;  // -1 for efficiency violations
    Mask coalition;
};

struct QuasiValueReport {
    bool null_player_ok = true;
    bool efficiency_ok = true;
    std::vector<QuasiValueViolation> violations;

    bool ok() const { return null_player_ok && efficiency_ok; }
};

/// a_{iR} = 0 for i ∉ R and every column sums to 1.
QuasiValueReport check_quasivalue(const ValueMatrix& m);

struct SymmetryWitness {
    Permutation g;
    int player;
    Mask coalition;
};

struct SymmetryReport {
    bool ok = true;
    std::optional<SymmetryWitness> witness;
};

enum class SymmetryMode {
    Generators,  // sufficient: the symmetries of a matrix form a group
    Exhaustive,  // every group element, for cross-validation
};

/// Checks a_{iR} = a_{g(i), gR}. The witness is the first violation in the
/// order (player, mask, generator/element index).
SymmetryReport check_symmetry(const ValueMatrix& m, const PermGroup& group,
                              SymmetryMode mode = SymmetryMode::Generators);

} // namespace quasisym
