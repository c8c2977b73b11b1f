#include "quasisym/marginal.hpp"

#include "quasisym/error.hpp"
#include "quasisym/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

namespace quasisym {

namespace {

void check_distribution_players(int n) {
    if (n < 1 || n > kMaxDistributionPlayers)
        throw InvalidArgument("distribution player count " + std::to_string(n) + " outside 1.." +
                              std::to_string(kMaxDistributionPlayers));
}

unsigned long factorial(int n) {
    unsigned long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
    return f;
}

} // namespace

const std::vector<Permutation>& all_permutations(int n) {
    check_distribution_players(n);
    static std::array<std::vector<Permutation>, kMaxDistributionPlayers + 1> cache;
    static std::once_flag flags[kMaxDistributionPlayers + 1];
    std::call_once(flags[n], [n] {
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 0);
        auto& out = cache[static_cast<std::size_t>(n)];
        out.reserve(factorial(n));
        do {
            out.emplace_back(image);
        } while (std::next_permutation(image.begin(), image.end()));
    });
    return cache[static_cast<std::size_t>(n)];
}

std::size_t permutation_rank(const Permutation& p) {
    // Lehmer code.
    const int n = p.degree();
    std::size_t rank = 0;
    unsigned used = 0;
    for (int i = 0; i < n; ++i) {
        const unsigned below = static_cast<unsigned>(p(i));
        const int smaller_unused = below - static_cast<unsigned>(__builtin_popcount(used & ((1u << below) - 1)));
        rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller_unused);
        used |= 1u << below;
    }
    return rank;
}

MarginalDistribution::MarginalDistribution(int n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
    check_distribution_players(n);
    if (weights_.size() != factorial(n)) throw InvalidArgument("distribution needs n! weights");
    Rational total = 0;
    for (auto& w : weights_) {
        w.canonicalize();
        if (w < 0) throw InvalidArgument("distribution weight is negative");
        total += w;
    }
    if (total != 1) throw InvalidArgument("distribution weights sum to " + to_string(total) + ", not 1");
}

MarginalDistribution MarginalDistribution::uniform(int n) {
    check_distribution_players(n);
    const unsigned long f = factorial(n);
    return MarginalDistribution(n, std::vector<Rational>(f, Rational(1, f)));
}

MarginalDistribution MarginalDistribution::point_mass(const Permutation& p) {
    check_distribution_players(p.degree());
    std::vector<Rational> w(factorial(p.degree()), Rational(0));
    w[permutation_rank(p)] = 1;
    return MarginalDistribution(p.degree(), std::move(w));
}

void Selector::validate() const {
    if (n < 1 || n > kMaxGamePlayers) throw InvalidArgument("selector: unsupported player count");
    if (choice.size() != (std::size_t{1} << n)) throw InvalidArgument("selector needs 2^n entries");
    for (Mask r = 1; r <= full_mask(n); ++r) {
        const int c = choice[r];
        if (c < 0 || c >= n || !contains(r, c)) throw InvalidArgument("selector choice outside its coalition");
    }
}

Selector Selector::max_member(int n) {
    Selector s{n, std::vector<int>(std::size_t{1} << n, -1)};
    for (Mask r = 1; r <= full_mask(n); ++r) s.choice[r] = 31 - __builtin_clz(r);
    return s;
}

int last_arrival(const Permutation& p, Mask coalition) {
    const Permutation arrival = p.inverse();
    int best = -1;
    for (int i = 0; i < p.degree(); ++i)
        if (contains(coalition, i) && (best < 0 || arrival(i) > arrival(best))) best = i;
    return best;
}

namespace {

// winners[R] = last arrival of R under p, for every mask, in O(2^n).
std::vector<int> last_arrivals(const Permutation& p) {
    const int n = p.degree();
    const Permutation arrival = p.inverse();
    std::vector<int> winners(std::size_t{1} << n, -1);
    for (Mask r = 1; r <= full_mask(n); ++r) {
        const int low = __builtin_ctz(r);
        const int rest = winners[r & (r - 1)];
        winners[r] = (rest < 0 || arrival(low) > arrival(rest)) ? low : rest;
    }
    return winners;
}

} // namespace

ValueMatrix marginal_matrix(const Permutation& p) {
    ValueMatrix m(p.degree());
    const auto winners = last_arrivals(p);
    for (Mask r = 1; r <= full_mask(p.degree()); ++r) m(winners[r], r) = 1;
    return m;
}

ValueMatrix selector_matrix(const Selector& s) {
    s.validate();
    ValueMatrix m(s.n);
    for (Mask r = 1; r <= full_mask(s.n); ++r) m(s.choice[r], r) = 1;
    return m;
}

ValueMatrix average(const MarginalDistribution& d) {
    const int n = d.players();
    const auto& perms = all_permutations(n);
    const auto& w = d.weights();
    ValueMatrix total(n);
    const auto count = static_cast<std::ptrdiff_t>(perms.size());

#pragma omp parallel
    {
        ValueMatrix local(n);
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            const auto& weight = w[static_cast<std::size_t>(k)];
            if (weight == 0) continue;
            const auto winners = last_arrivals(perms[static_cast<std::size_t>(k)]);
            for (Mask r = 1; r <= full_mask(n); ++r) local(winners[r], r) += weight;
        }
        // Exact addition: the merge order does not affect the result.
#pragma omp critical
        total += local;
    }
    return total;
}

MarginalDistribution coset_constant(const PermGroup& group,
                                    std::span<const std::pair<Permutation, Rational>> rep_weights) {
    const int n = group.degree();
    const auto& perms = all_permutations(n);
    std::vector<Rational> weights(perms.size(), Rational(0));
    std::vector<bool> assigned(perms.size(), false);
    for (const auto& [rep, weight] : rep_weights) {
        if (rep.degree() != n) throw InvalidArgument("coset representative has the wrong degree");
        if (weight < 0) throw InvalidArgument("coset weight is negative");
        for (const auto& g : group.elements()) {
            const std::size_t k = permutation_rank(compose(g, rep));
            if (assigned[k])
                throw InvalidArgument("representatives " + rep.to_cycles() +
                                      " and another key lie in the same coset");
            assigned[k] = true;
            weights[k] = weight;
        }
    }
    const auto missing = std::find(assigned.begin(), assigned.end(), false);
    if (missing != assigned.end())
        throw InvalidArgument("coset of " + perms[static_cast<std::size_t>(missing - assigned.begin())].to_cycles() +
                              " has no representative");
    return MarginalDistribution(n, std::move(weights));
}

std::vector<Permutation> coset_representatives(const PermGroup& group) {
    const auto& perms = all_permutations(group.degree());
    std::vector<bool> covered(perms.size(), false);
    std::vector<Permutation> reps;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        if (covered[k]) continue;
        reps.push_back(perms[k]);
        for (const auto& g : group.elements()) covered[permutation_rank(compose(g, perms[k]))] = true;
    }
    return reps;
}

MarginalDistribution parity_weighted(int n, const Rational& s) {
    if (s < 0 || s > 2) throw InvalidArgument("parity weight s must lie in [0, 2]");
    const auto& perms = all_permutations(n);
    const Rational f(factorial(n));
    std::vector<Rational> w;
    w.reserve(perms.size());
    for (const auto& p : perms) w.push_back(p.is_even() ? Rational(s / f) : Rational((2 - s) / f));
    return MarginalDistribution(n, std::move(w));
}

MarginalDistribution shapley_family(const Coalition& omega0, const Rational& alpha) {
    if (omega0.size() <= 3) throw InvalidArgument("shapley_family: |omega0| must exceed 3");
    if (alpha <= 0 || alpha >= 2) throw InvalidArgument("shapley_family: alpha must lie in (0, 2)");
    const int n = omega0.players();
    const auto& perms = all_permutations(n);
    const Rational f(factorial(n));
    const Mask outside = full_mask(n) & ~omega0.mask();
    std::vector<Rational> w;
    w.reserve(perms.size());
    for (const auto& p : perms) {
        bool in_s0 = true;
        for (int i = 0; i < n && in_s0; ++i)
            if (contains(outside, i) && p(i) != i) in_s0 = false;
        if (!in_s0) w.push_back(1 / f);
        else w.push_back(p.is_even() ? Rational(alpha / f) : Rational((2 - alpha) / f));
    }
    return MarginalDistribution(n, std::move(w));
}

std::size_t affine_rank(std::span<const MarginalDistribution> ds) {
    if (ds.empty()) return 0;
    const int n = ds.front().players();
    const Rational u(1, factorial(n));
    std::vector<SparseRow> rows;
    for (const auto& d : ds) {
        if (d.players() != n) throw InvalidArgument("affine_rank: player counts differ");
        SparseRow row;
        for (std::size_t k = 0; k < d.weights().size(); ++k)
            if (d.weights()[k] != u) row.emplace_back(k, d.weights()[k] - u);
        rows.push_back(std::move(row));
    }
    return exact_rank(rows);
}

std::size_t operator_affine_rank(std::span<const MarginalDistribution> ds) {
    if (ds.empty()) return 0;
    const int n = ds.front().players();
    const ValueMatrix base = shapley(n);
    std::vector<SparseRow> rows;
    for (const auto& d : ds) {
        if (d.players() != n) throw InvalidArgument("operator_affine_rank: player counts differ");
        const ValueMatrix m = average(d);
        SparseRow row;
        for (int i = 0; i < n; ++i)
            for (Mask r = 1; r <= full_mask(n); ++r) {
                const Rational diff = m(i, r) - base(i, r);
                if (diff != 0) row.emplace_back(static_cast<std::size_t>(i) * full_mask(n) + (r - 1), diff);
            }
        rows.push_back(std::move(row));
    }
    return exact_rank(rows);
}

} // namespace quasisym
