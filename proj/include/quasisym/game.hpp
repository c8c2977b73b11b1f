#pragma once

#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace quasisym {

/// Largest player count accepted by games and value matrices. Everything in
/// the test suite stays at n <= 8.
inline constexpr int kMaxGamePlayers = 12;

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return __builtin_popcount(m); }

/// A subset of the n players.
class Coalition {
public:
    /// Throws InvalidArgument when mask >= 2^n.
    Coalition(int n, Mask mask);
    /// 0-indexed members.
    static Coalition of(int n, std::initializer_list<int> members);
    static Coalition full(int n) { return Coalition(n, full_mask(n)); }

    int players() const { return n_; }
    Mask mask() const { return mask_; }
    int size() const { return popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return quasisym::contains(mask_, i); }

    friend bool operator==(const Coalition&, const Coalition&) = default;

private:
    int n_;
    Mask mask_;
};

/// Characteristic function on all 2^n coalitions, indexed by mask, v(∅) = 0.
class Game {
public:
    /// The zero game.
    explicit Game(int n);
    /// Throws InvalidArgument on wrong length or v(∅) != 0.
    Game(int n, std::vector<Rational> values);

    /// v(R) = Σ_{i∈R} payoffs[i].
    static Game additive(std::span<const Rational> payoffs);

    int players() const { return n_; }
    const Rational& operator[](Mask m) const { return values_[m]; }
    const Rational& at(Mask m) const;
    void set(Mask m, const Rational& value);
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Game&, const Game&) = default;

private:
    int n_;
    std::vector<Rational> values_;
};

/// A payoff per player; identified with the additive game it induces.
struct Allocation {
    std::vector<Rational> payoff;

    int players() const { return static_cast<int>(payoff.size()); }
    Rational total() const;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// u_R(S) = 1 iff R ⊆ S. Throws InvalidArgument for R = ∅.
Game unanimity(const Coalition& r);

/// Möbius transform: Δ_v(R) = Σ_{T⊆R} (-1)^{|R|-|T|} v(T), in O(n 2^n).
std::vector<Rational> harsanyi_dividends(const Game& v);

/// v = Σ_R d[R] u_R. Throws InvalidArgument when d[∅] != 0 or the length is
/// not a power of two.
Game from_dividends(std::span<const Rational> dividends);

/// (g·v)(R) = v(g⁻¹ R)
Game act(const Permutation& g, const Game& v);

/// (g·x)_{g(i)} = x_i
Allocation act(const Permutation& g, const Allocation& x);

bool is_additive(const Game& v);

/// v(R ∪ {i}) = v(R) for every R.
bool is_null_player(const Game& v, int player);

} // namespace quasisym
