#include <doctest.h>

#include "corpus.hpp"
#include "quasisym/error.hpp"
#include "quasisym/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace quasisym;
using quasisym::testing::Image;

namespace {

Permutation perm(std::initializer_list<int> image) { return Permutation(std::vector<int>(image)); }

// Orbits by applying every group element, not just generators.
std::set<std::set<Mask>> brute_coalition_orbits(const PermGroup& g) {
    std::set<std::set<Mask>> out;
    for (Mask r = 1; r <= (Mask{1} << g.degree()) - 1; ++r) {
        std::set<Mask> orbit;
        for (const auto& e : g.elements()) orbit.insert(e.apply(r));
        out.insert(orbit);
    }
    return out;
}

} // namespace

TEST_CASE("composition applies the right factor first") {
    const Permutation a = parse_cycles("(1 2)", 3);
    const Permutation b = parse_cycles("(2 3)", 3);
    // a(b(x)): 0 -> b 0 -> a 1, 1 -> b 2 -> a 2, 2 -> b 1 -> a 0
    CHECK(compose(a, b).image() == std::vector<int>{1, 2, 0});
    CHECK(compose(b, a).image() == std::vector<int>{2, 0, 1});

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto p = testing::random_permutation(rng, 6);
        const auto q = testing::random_permutation(rng, 6);
        const Image expected = testing::image_compose(p.image(), q.image());
        CHECK(compose(p, q).image() == expected);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(conjugate(p, q) == p * q * p.inverse());
    }
}

TEST_CASE("compose rejects mismatched degrees") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), InvalidArgument);
}

TEST_CASE("permutation construction validates the image") {
    CHECK_THROWS_AS(perm({0, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(perm({0, 3, 1}), InvalidArgument);
    CHECK_NOTHROW(perm({2, 0, 1}));
}

TEST_CASE("cycle notation round-trips") {
    CHECK(parse_cycles("(1 2 3)(4 5)", 5).image() == std::vector<int>{1, 2, 0, 4, 3});
    CHECK(parse_cycles("(12345)", 5) == parse_cycles("(1 2 3 4 5)", 5));
    CHECK(parse_cycles("(1,2)(3,4)", 4) == parse_cycles("(1 2)(3 4)", 4));
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(parse_cycles("", 4).is_identity());
    CHECK(Permutation::identity(4).to_cycles() == "()");

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto p = testing::random_permutation(rng, 9);
        CHECK(parse_cycles(p.to_cycles(), 9) == p);
    }
}

TEST_CASE("cycle notation errors") {
    CHECK_THROWS_AS(parse_cycles("(1 2 2)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("1 2)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError);
}

TEST_CASE("cycle type and parity") {
    const auto p = parse_cycles("(1 2 3)(4 5)", 7);
    const auto t = p.cycle_type();
    CHECK(t.fixed_points() == 2);
    CHECK(t.j[1] == 1);
    CHECK(t.j[2] == 1);
    CHECK(t.degree() == 7);
    CHECK(p.num_cycles() == 4);
    CHECK_FALSE(p.is_even());
    CHECK(parse_cycles("(1 2 3)", 3).is_even());
}

TEST_CASE("coalition action is the image set") {
    const auto p = parse_cycles("(1 2 3)", 4);
    CHECK(p.apply(0b0001) == 0b0010);
    CHECK(p.apply(0b1001) == 0b1010);
    CHECK(p.apply(0b0111) == 0b0111);
}

TEST_CASE("named group orders") {
    const long fact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
    for (int n = 1; n <= 8; ++n) {
        CHECK(symmetric_group(n).order() == static_cast<std::size_t>(fact[n]));
        CHECK(alternating_group(n).order() == static_cast<std::size_t>(n < 2 ? 1 : fact[n] / 2));
        CHECK(cyclic_group(n).order() == static_cast<std::size_t>(n));
        CHECK(trivial_group(n).order() == 1);
    }
    CHECK(caste_group({{0, 1}, {2, 3, 4}}).order() == 12);
    CHECK_THROWS_AS(caste_group({{0, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(caste_group({{0, 2}}), InvalidArgument);
}

TEST_CASE("closure agrees with a naive closure") {
    std::mt19937_64 rng(3);
    for (const auto& ng : testing::random_groups(rng, 20, 3, 6)) {
        std::vector<Image> gens;
        for (const auto& g : ng.group.generators()) gens.push_back(g.image());
        const auto expected = testing::brute_closure(gens, ng.group.degree());
        std::vector<Image> got;
        for (const auto& e : ng.group.elements()) got.push_back(e.image());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("membership, subgroup and conjugation") {
    const auto a4 = alternating_group(4);
    const auto s4 = symmetric_group(4);
    CHECK(a4.is_subgroup_of(s4));
    CHECK_FALSE(s4.is_subgroup_of(a4));
    CHECK(a4.contains(parse_cycles("(1 2)(3 4)", 4)));
    CHECK_FALSE(a4.contains(parse_cycles("(1 2)", 4)));
    const auto c = cyclic_group(4).conjugate_by(parse_cycles("(2 3)", 4));
    CHECK(c.contains(parse_cycles("(1 3 2 4)", 4)));
    CHECK(c.order() == 4);
    CHECK_THROWS_AS(PermGroup::from_elements(3, {Permutation::identity(3), parse_cycles("(1 2 3)", 3)}),
                    std::logic_error);
}

TEST_CASE("coalition orbits match orbits under all elements") {
    std::mt19937_64 rng(5);
    auto groups = testing::random_groups(rng, 15, 3, 6);
    groups.push_back({"C5", cyclic_group(5)});
    for (const auto& ng : groups) {
        std::set<std::set<Mask>> got;
        for (const auto& o : coalition_orbits(ng.group)) got.insert(std::set<Mask>(o.begin(), o.end()));
        CHECK(got == brute_coalition_orbits(ng.group));
    }
}

TEST_CASE("orbit-stabilizer on coalitions") {
    std::mt19937_64 rng(9);
    for (const auto& ng : testing::random_groups(rng, 15, 3, 6))
        for (const auto& orbit : coalition_orbits(ng.group))
            CHECK(orbit.size() * stabilizer(ng.group, orbit.front()).order() == ng.group.order());
}

TEST_CASE("cycle index of S3 and C4") {
    const auto z = cycle_index(symmetric_group(3));
    // (x1^3 + 3 x1 x2 + 2 x3) / 6 at x = 2: (8 + 12 + 4) / 6 = 4
    CHECK(z.evaluate_at(2) == 4);
    CHECK(z.terms.size() == 3);
    const auto c4 = cycle_index(cyclic_group(4));
    // (x1^4 + x2^2 + 2 x4) / 4 at 2: (16 + 4 + 4) / 4 = 6 ; derivative 4 x1^3 / 4 = 8
    CHECK(c4.evaluate_at(2) == 6);
    CHECK(c4.d_dx1_at(2) == 8);
}

TEST_CASE("subgroups of S3 by exhaustive subset test") {
    std::vector<Image> all;
    Image id{0, 1, 2};
    do {
        all.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    int closed_subsets = 0;
    for (unsigned s = 0; s < 64; ++s) {
        std::set<Image> members;
        for (unsigned k = 0; k < 6; ++k)
            if (s >> k & 1u) members.insert(all[k]);
        if (!members.count(Image{0, 1, 2})) continue;
        bool closed = true;
        for (const auto& a : members)
            for (const auto& b : members)
                if (!members.count(testing::image_compose(a, b))) closed = false;
        if (closed) ++closed_subsets;
    }
    CHECK(closed_subsets == 6);
}
