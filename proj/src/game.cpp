#include "quasisym/game.hpp"

#include "quasisym/error.hpp"

#include <string>

namespace quasisym {

namespace {

void check_players(int n) {
    if (n < 1 || n > kMaxGamePlayers)
        throw InvalidArgument("player count " + std::to_string(n) + " outside 1.." +
                              std::to_string(kMaxGamePlayers));
}

} // namespace

Coalition::Coalition(int n, Mask mask) : n_(n), mask_(mask) {
    check_players(n);
    if (mask > full_mask(n)) throw InvalidArgument("coalition mask exceeds 2^n - 1");
}

Coalition Coalition::of(int n, std::initializer_list<int> members) {
    Mask m = 0;
    for (int i : members) {
        if (i < 0 || i >= n) throw InvalidArgument("coalition member out of range");
        m |= Mask{1} << i;
    }
    return Coalition(n, m);
}

Game::Game(int n) : n_(n) {
    check_players(n);
    values_.assign(std::size_t{1} << n, Rational(0));
}

Game::Game(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    check_players(n);
    if (values_.size() != (std::size_t{1} << n))
        throw InvalidArgument("game needs 2^n values");
    for (auto& x : values_) x.canonicalize();
    if (values_[0] != 0) throw InvalidArgument("v(empty set) must be 0");
}

Game Game::additive(std::span<const Rational> payoffs) {
    Game v(static_cast<int>(payoffs.size()));
    for (Mask m = 1; m < v.values_.size(); ++m) {
        const int low = __builtin_ctz(m);
        v.values_[m] = v.values_[m & (m - 1)] + payoffs[static_cast<std::size_t>(low)];
    }
    return v;
}

const Rational& Game::at(Mask m) const {
    if (m >= values_.size()) throw InvalidArgument("coalition mask out of range");
    return values_[m];
}

void Game::set(Mask m, const Rational& value) {
    if (m >= values_.size()) throw InvalidArgument("coalition mask out of range");
    if (m == 0 && value != 0) throw InvalidArgument("v(empty set) must be 0");
    values_[m] = value;
    values_[m].canonicalize();
}

Rational Allocation::total() const {
    Rational s = 0;
    for (const auto& x : payoff) s += x;
    return s;
}

Game unanimity(const Coalition& r) {
    if (r.empty()) throw InvalidArgument("unanimity game of the empty coalition");
    Game u(r.players());
    for (Mask s = 1; s <= full_mask(r.players()); ++s)
        if ((s & r.mask()) == r.mask()) u.set(s, 1);
    return u;
}

std::vector<Rational> harsanyi_dividends(const Game& v) {
    std::vector<Rational> d = v.values();
    const std::size_t size = d.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1)
        for (std::size_t m = 0; m < size; ++m)
            if (m & bit) d[m] -= d[m ^ bit];
    return d;
}

Game from_dividends(std::span<const Rational> dividends) {
    const std::size_t size = dividends.size();
    if (size < 2 || (size & (size - 1)) != 0)
        throw InvalidArgument("dividend sequence length must be 2^n with n >= 1");
    if (dividends[0] != 0) throw InvalidArgument("dividend of the empty coalition must be 0");
    std::vector<Rational> v(dividends.begin(), dividends.end());
    for (std::size_t bit = 1; bit < size; bit <<= 1)
        for (std::size_t m = 0; m < size; ++m)
            if (m & bit) v[m] += v[m ^ bit];
    return Game(__builtin_ctzll(size), std::move(v));
}

Game act(const Permutation& g, const Game& v) {
    if (g.degree() != v.players()) throw InvalidArgument("act: permutation degree differs from n");
    Game w(v.players());
    // (g·v)(gR) = v(R)
    for (Mask r = 1; r <= full_mask(v.players()); ++r) w.set(g.apply(r), v[r]);
    return w;
}

Allocation act(const Permutation& g, const Allocation& x) {
    if (g.degree() != x.players()) throw InvalidArgument("act: permutation degree differs from n");
    Allocation y{std::vector<Rational>(x.payoff.size())};
    for (int i = 0; i < x.players(); ++i)
        y.payoff[static_cast<std::size_t>(g(i))] = x.payoff[static_cast<std::size_t>(i)];
    return y;
}

bool is_additive(const Game& v) {
    for (Mask r = 1; r <= full_mask(v.players()); ++r) {
        Rational sum = 0;
        for (int i = 0; i < v.players(); ++i)
            if (contains(r, i)) sum += v[Mask{1} << i];
        if (sum != v[r]) return false;
    }
    return true;
}

bool is_null_player(const Game& v, int player) {
    if (player < 0 || player >= v.players()) throw InvalidArgument("player out of range");
    const Mask bit = Mask{1} << player;
    for (Mask r = 0; r <= full_mask(v.players()); ++r)
        if (!(r & bit) && v[r | bit] != v[r]) return false;
    return true;
}

} // namespace quasisym
