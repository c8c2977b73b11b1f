#include <doctest.h>

#include "quasisym/linalg.hpp"

#include <random>

using namespace quasisym;

namespace {

std::vector<SparseRow> to_sparse(const std::vector<std::vector<Rational>>& rows) {
    std::vector<SparseRow> out;
    for (const auto& r : rows) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.emplace_back(c, r[c]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("rank of small matrices") {
    CHECK(exact_rank(std::vector<std::vector<Rational>>{}) == 0);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
    CHECK(exact_rank({{Rational(1, 3), Rational(1, 6)}, {2, 1}}) == 1);
}

TEST_CASE("sparse rank equals dense rank") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> val(-2, 2), coin(0, 3);
    for (int t = 0; t < 50; ++t) {
        const int rows = 1 + t % 9, cols = 1 + (t * 7) % 11;
        std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(rows),
                                                 std::vector<Rational>(static_cast<std::size_t>(cols)));
        for (auto& r : dense)
            for (auto& x : r) x = coin(rng) == 0 ? val(rng) : 0;
        // Occasionally duplicate a row scaled.
        if (rows > 1 && t % 3 == 0)
            for (std::size_t c = 0; c < dense[0].size(); ++c) dense[1][c] = 3 * dense[0][c];
        CHECK(exact_rank(to_sparse(dense)) == exact_rank(dense));
    }
}

TEST_CASE("block structure: disjoint supports add ranks") {
    std::vector<SparseRow> rows{
        {{0, 1}, {1, 1}},
        {{0, 2}, {1, 2}},
        {{5, 1}},
        {{7, 1}, {9, -1}},
        {{9, 1}, {7, -1}},
    };
    CHECK(exact_rank(rows) == 3);
}
