#include "quasisym/symspace.hpp"

#include "quasisym/error.hpp"
#include "quasisym/game.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace quasisym {

std::vector<std::size_t> ChiOrbit::block_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size());
    return sizes;
}

std::size_t OrbitStructure::num_x_orbits() const {
    std::size_t total = 0;
    for (const auto& m : chi_orbits) total += m.k();
    return total;
}

long OrbitStructure::x_orbit_of(int player, Mask coalition) const {
    return x_orbit_table[static_cast<std::size_t>(player) * full_mask(n) + (coalition - 1)];
}

std::size_t OrbitStructure::chi_orbit_of(Mask coalition) const { return chi_index[coalition]; }

OrbitStructure orbit_structure(const PermGroup& group) {
    const int n = group.degree();
    if (n < 1 || n > kMaxGamePlayers) throw InvalidArgument("orbit_structure: unsupported degree");
    const Mask full = full_mask(n);

    OrbitStructure s;
    s.n = n;
    s.x_orbit_table.assign(static_cast<std::size_t>(n) * full, -1);
    s.chi_index.assign(std::size_t{full} + 1, 0);

    // transporter[R] maps the orbit representative onto R.
    std::vector<Permutation> transporter(std::size_t{full} + 1);
    std::vector<bool> seen(std::size_t{full} + 1, false);
    std::size_t next_x = 0;

    for (Mask start = 1; start <= full; ++start) {
        if (seen[start]) continue;
        ChiOrbit orbit;
        orbit.representative = start;
        seen[start] = true;
        transporter[start] = Permutation::identity(n);
        std::deque<Mask> queue{start};
        while (!queue.empty()) {
            const Mask x = queue.front();
            queue.pop_front();
            orbit.members.push_back(x);
            for (const auto& g : group.generators()) {
                const Mask y = g.apply(x);
                if (seen[y]) continue;
                seen[y] = true;
                transporter[y] = compose(g, transporter[x]);
                queue.push_back(y);
            }
        }
        std::sort(orbit.members.begin(), orbit.members.end());

        const PermGroup stab = stabilizer(group, start);
        std::vector<int> points;
        for (int i = 0; i < n; ++i)
            if (contains(start, i)) points.push_back(i);
        orbit.blocks = orbits<int>(stab, points, [](const Permutation& g, int i) { return g(i); });

        std::vector<std::size_t> block_of(static_cast<std::size_t>(n), 0);
        for (std::size_t b = 0; b < orbit.blocks.size(); ++b)
            for (int i : orbit.blocks[b]) block_of[static_cast<std::size_t>(i)] = b;

        const std::size_t index = s.chi_orbits.size();
        for (Mask r : orbit.members) {
            s.chi_index[r] = index;
            const Permutation& t = transporter[r];
            for (int i : points)
                s.x_orbit_table[static_cast<std::size_t>(t(i)) * full + (r - 1)] =
                    static_cast<long>(next_x + block_of[static_cast<std::size_t>(i)]);
        }
        s.first_x_orbit.push_back(next_x);
        next_x += orbit.blocks.size();
        s.chi_orbits.push_back(std::move(orbit));
    }
    return s;
}

std::size_t dimension_orbit(const OrbitStructure& structure) {
    return structure.num_x_orbits() - structure.num_chi_orbits();
}

std::size_t dimension_orbit(const PermGroup& group) { return dimension_orbit(orbit_structure(group)); }

std::size_t dimension_cycle_index(const PermGroup& group) {
    const CycleIndex z = cycle_index(group);
    const Rational two(2);
    const Rational dim = z.d_dx1_at(two) - z.evaluate_at(two) + 1;
    if (dim.get_den() != 1 || dim < 0)
        throw std::logic_error("dimension_cycle_index: non-integral result " + to_string(dim));
    return dim.get_num().get_ui();
}

ValueMatrix Direction::dense(int n) const {
    ValueMatrix m(n);
    for (const auto& e : entries) m(e.player, e.coalition) = e.value;
    return m;
}

ValueMatrix Parametrization::point(std::span<const Rational> coefficients) const {
    if (coefficients.size() != directions.size())
        throw InvalidArgument("expected " + std::to_string(directions.size()) +
                              " coefficients, got " + std::to_string(coefficients.size()));
    ValueMatrix m = base;
    for (std::size_t j = 0; j < directions.size(); ++j) {
        if (coefficients[j] == 0) continue;
        for (const auto& e : directions[j].entries) m(e.player, e.coalition) += coefficients[j] * e.value;
    }
    return m;
}

Parametrization parametrize(const PermGroup& group) {
    const OrbitStructure s = orbit_structure(group);
    const int n = s.n;
    Parametrization p{shapley(n), {}};

    for (std::size_t m = 0; m < s.chi_orbits.size(); ++m) {
        const ChiOrbit& orbit = s.chi_orbits[m];
        if (orbit.k() < 2) continue;
        const std::size_t last = orbit.k() - 1;
        const Rational minus_pivot(-1, static_cast<unsigned long>(orbit.blocks[last].size()));
        for (std::size_t b = 0; b < last; ++b) {
            const Rational plus(1, static_cast<unsigned long>(orbit.blocks[b].size()));
            Direction d;
            for (Mask r : orbit.members)
                for (int i = 0; i < n; ++i) {
                    if (!contains(r, i)) continue;
                    const auto block = static_cast<std::size_t>(s.x_orbit_of(i, r)) - s.first_x_orbit[m];
                    if (block == b) d.entries.push_back({i, r, plus});
                    else if (block == last) d.entries.push_back({i, r, minus_pivot});
                }
            p.directions.push_back(std::move(d));
        }
    }
    return p;
}

ValueMatrix sample(const PermGroup& group, std::span<const Rational> coefficients) {
    return parametrize(group).point(coefficients);
}

std::size_t burnside_count(const PermGroup& group,
                           const std::function<Integer(const Permutation&)>& fix_counter) {
    Integer total = 0;
    for (const auto& g : group.elements()) total += fix_counter(g);
    const Integer order(static_cast<unsigned long>(group.order()));
    if (total % order != 0)
        throw std::logic_error("burnside_count: fixed-point total " + total.get_str() +
                               " not divisible by |G| = " + order.get_str());
    const Integer count = total / order;
    return count.get_ui();
}

namespace {

Integer pow2(int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

} // namespace

std::size_t chi_orbit_count(const PermGroup& group) {
    return burnside_count(group, [](const Permutation& g) { return Integer(pow2(g.num_cycles()) - 1); });
}

std::size_t x_orbit_count(const PermGroup& group) {
    return burnside_count(group, [](const Permutation& g) {
        return Integer(g.num_fixed_points() * pow2(g.num_cycles() - 1));
    });
}

} // namespace quasisym
