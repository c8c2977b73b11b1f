#include <doctest.h>

#include "corpus.hpp"
#include "quasisym/error.hpp"
#include "quasisym/linalg.hpp"
#include "quasisym/symspace.hpp"

#include <map>

using namespace quasisym;

namespace {

// Nullity of the homogeneous system {a_{iR} = a_{g(i),gR} for all g ∈ G,
// Σ_i a_{iR} = 0} over variables (i, R) with i ∈ R.
std::size_t brute_dimension(const PermGroup& group) {
    const int n = group.degree();
    std::map<std::pair<int, Mask>, std::size_t> var;
    for (Mask r = 1; r <= full_mask(n); ++r)
        for (int i = 0; i < n; ++i)
            if (contains(r, i)) var.emplace(std::pair{i, r}, var.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : group.elements())
        for (const auto& [key, col] : var) {
            const auto image = var.at({g(key.first), g.apply(key.second)});
            if (image == col) continue;
            std::vector<Rational> row(var.size());
            row[col] = 1;
            row[image] = -1;
            rows.push_back(std::move(row));
        }
    for (Mask r = 1; r <= full_mask(n); ++r) {
        std::vector<Rational> row(var.size());
        for (int i = 0; i < n; ++i)
            if (contains(r, i)) row[var.at({i, r})] = 1;
        rows.push_back(std::move(row));
    }
    return var.size() - exact_rank(rows);
}

} // namespace

TEST_CASE("dimension formulas agree with brute-force linear algebra on S4 subgroups") {
    for (const auto& g : enumerate_subgroups(4)) {
        const auto d = brute_dimension(g);
        CHECK(dimension_orbit(g) == d);
        CHECK(dimension_cycle_index(g) == d);
    }
    for (int n = 1; n <= 3; ++n) {
        CHECK(dimension_orbit(trivial_group(n)) == brute_dimension(trivial_group(n)));
        CHECK(dimension_orbit(cyclic_group(n)) == brute_dimension(cyclic_group(n)));
    }
}

TEST_CASE("known dimensions") {
    CHECK(dimension_orbit(cyclic_group(3)) == 1);
    CHECK(dimension_orbit(symmetric_group(5)) == 0);
    CHECK(dimension_orbit(alternating_group(5)) == 0);
    CHECK(dimension_orbit(alternating_group(3)) == 1);
    CHECK(dimension_orbit(caste_group({{0, 1}, {2, 3, 4}})) == 6);
    // n 2^{n-1} - 2^n + 1
    CHECK(dimension_orbit(trivial_group(4)) == 17);
}

TEST_CASE("orbit counts agree with Burnside counts") {
    std::mt19937_64 rng(31);
    auto groups = testing::random_groups(rng, 20, 2, 6);
    for (const auto& ng : groups) {
        const auto s = orbit_structure(ng.group);
        CHECK(s.num_chi_orbits() == chi_orbit_count(ng.group));
        CHECK(s.num_x_orbits() == x_orbit_count(ng.group));
    }
}

TEST_CASE("burnside count rejects a non-integral total") {
    CHECK_THROWS_AS(burnside_count(cyclic_group(3), [](const Permutation& g) { return Integer(g.is_identity()); }),
                    std::logic_error);
}

TEST_CASE("x-orbit table is invariant under the group") {
    std::mt19937_64 rng(32);
    for (const auto& ng : testing::random_groups(rng, 10, 3, 6)) {
        const auto s = orbit_structure(ng.group);
        const int n = ng.group.degree();
        for (const auto& g : ng.group.elements())
            for (Mask r = 1; r <= full_mask(n); ++r) {
                CHECK(s.chi_orbit_of(g.apply(r)) == s.chi_orbit_of(r));
                for (int i = 0; i < n; ++i) {
                    if (!contains(r, i)) {
                        CHECK(s.x_orbit_of(i, r) == -1);
                        continue;
                    }
                    CHECK(s.x_orbit_of(g(i), g.apply(r)) == s.x_orbit_of(i, r));
                }
            }
    }
}

TEST_CASE("chi orbit layout") {
    const auto s = orbit_structure(cyclic_group(4));
    REQUIRE(s.num_chi_orbits() == 5);
    CHECK(s.chi_orbits[0].representative == 0b0001);
    CHECK(s.chi_orbits[1].representative == 0b0011);
    CHECK(s.chi_orbits[1].k() == 2);
    CHECK(s.chi_orbits[2].representative == 0b0101);
    CHECK(s.chi_orbits[2].block_sizes() == std::vector<std::size_t>{2});
}

TEST_CASE("parametrization directions are homogeneous solutions") {
    std::mt19937_64 rng(33);
    auto groups = testing::random_groups(rng, 10, 3, 5);
    groups.push_back({"C4", cyclic_group(4)});
    groups.push_back({"trivial4", trivial_group(4)});
    for (const auto& ng : groups) {
        const int n = ng.group.degree();
        const auto p = parametrize(ng.group);
        CHECK(p.base == shapley(n));
        CHECK(p.dimension() == dimension_orbit(ng.group));
        std::vector<SparseRow> rows;
        for (const auto& d : p.directions) {
            const ValueMatrix m = d.dense(n);
            for (Mask r = 1; r <= full_mask(n); ++r) {
                CHECK(m.column_sum(r) == 0);
                for (int i = 0; i < n; ++i)
                    if (!contains(r, i)) CHECK(m(i, r) == 0);
            }
            CHECK(check_symmetry(m, ng.group, SymmetryMode::Exhaustive).ok);
            SparseRow row;
            for (const auto& e : d.entries) row.emplace_back(e.player * full_mask(n) + e.coalition - 1, e.value);
            rows.push_back(row);
        }
        CHECK(exact_rank(rows) == p.dimension());
    }
}

TEST_CASE("sampled points are G-symmetric quasi-values") {
    const auto g = caste_group({{0, 1}, {2, 3}});
    const auto p = parametrize(g);
    std::vector<Rational> c(p.dimension());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = Rational(static_cast<long>(k) - 2, 3);
    const auto m = sample(g, c);
    CHECK(check_quasivalue(m).ok());
    CHECK(check_symmetry(m, g).ok);
    if (!c.empty()) CHECK_FALSE(m == shapley(4));
    CHECK_THROWS_AS(p.point(std::vector<Rational>(p.dimension() + 1)), InvalidArgument);
    CHECK(parametrize(symmetric_group(5)).directions.empty());
}
