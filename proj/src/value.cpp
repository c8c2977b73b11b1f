#include "quasisym/value.hpp"

#include "quasisym/error.hpp"

#include <omp.h>

#include <limits>
#include <string>
#include <tuple>

namespace quasisym {

ValueMatrix::ValueMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxGamePlayers)
        throw InvalidArgument("player count " + std::to_string(n) + " outside 1.." +
                              std::to_string(kMaxGamePlayers));
    cols_ = (std::size_t{1} << n) - 1;
    a_.assign(static_cast<std::size_t>(n) * cols_, Rational(0));
}

Rational ValueMatrix::column_sum(Mask r) const {
    Rational s = 0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, r);
    return s;
}

ValueMatrix& ValueMatrix::operator+=(const ValueMatrix& other) {
    if (other.n_ != n_) throw InvalidArgument("matrix player counts differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

ValueMatrix& ValueMatrix::operator-=(const ValueMatrix& other) {
    if (other.n_ != n_) throw InvalidArgument("matrix player counts differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

ValueMatrix& ValueMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ValueMatrix shapley(int n) {
    ValueMatrix m(n);
    for (Mask r = 1; r <= full_mask(n); ++r) {
        const Rational share(1, static_cast<unsigned long>(popcount(r)));
        for (int i = 0; i < n; ++i)
            if (contains(r, i)) m(i, r) = share;
    }
    return m;
}

Allocation apply(const ValueMatrix& m, const Game& v) {
    if (m.players() != v.players()) throw InvalidArgument("apply: player counts differ");
    const auto d = harsanyi_dividends(v);
    Allocation x{std::vector<Rational>(static_cast<std::size_t>(m.players()))};
    for (int i = 0; i < m.players(); ++i)
        for (Mask r = 1; r <= full_mask(m.players()); ++r)
            if (d[r] != 0) x.payoff[static_cast<std::size_t>(i)] += m(i, r) * d[r];
    return x;
}

QuasiValueReport check_quasivalue(const ValueMatrix& m) {
    QuasiValueReport report;
    const int n = m.players();
    for (Mask r = 1; r <= full_mask(n); ++r) {
        for (int i = 0; i < n; ++i)
            if (!contains(r, i) && m(i, r) != 0) {
                report.null_player_ok = false;
                report.violations.push_back({QuasiValueViolation::Kind::NullPlayer, i, r});
            }
        if (m.column_sum(r) != 1) {
            report.efficiency_ok = false;
            report.violations.push_back({QuasiValueViolation::Kind::Efficiency, -1, r});
        }
    }
    return report;
}

namespace {

// First violation of a_{iR} = a_{g(i), gR} in (player, mask) order.
std::optional<std::pair<int, Mask>> first_violation(const ValueMatrix& m, const Permutation& g) {
    const int n = m.players();
    for (int i = 0; i < n; ++i)
        for (Mask r = 1; r <= full_mask(n); ++r)
            if (m(i, r) != m(g(i), g.apply(r))) return std::make_pair(i, r);
    return std::nullopt;
}

} // namespace

SymmetryReport check_symmetry(const ValueMatrix& m, const PermGroup& group, SymmetryMode mode) {
    if (group.degree() != m.players()) throw InvalidArgument("check_symmetry: degree differs from n");
    const auto& perms = mode == SymmetryMode::Generators ? group.generators() : group.elements();

    // Smallest (player, mask, index) over all checked permutations; each
    // permutation is independent so the scan runs in parallel.
    using Key = std::tuple<int, Mask, std::size_t>;
    const Key none{std::numeric_limits<int>::max(), 0, 0};
    Key best = none;
    const auto count = static_cast<std::ptrdiff_t>(perms.size());
#pragma omp parallel
    {
        Key local = none;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            if (const auto v = first_violation(m, perms[static_cast<std::size_t>(k)])) {
                const Key key{v->first, v->second, static_cast<std::size_t>(k)};
                if (key < local) local = key;
            }
        }
#pragma omp critical
        if (local < best) best = local;
    }

    SymmetryReport report;
    if (best != none) {
        report.ok = false;
        report.witness = SymmetryWitness{perms[std::get<2>(best)], std::get<0>(best), std::get<1>(best)};
    }
    return report;
}

} // namespace quasisym
