#include "quasisym/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace quasisym {

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, Rational(0));

    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = 1 / rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational f = rows[r][col] * inv;
            for (std::size_t c = col; c < width; ++c)
                if (rows[rank][c] != 0) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
    DisjointSets sets(rows.size());
    std::unordered_map<std::size_t, std::size_t> owner;  // column -> some row using it
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, value] : rows[r]) {
            if (value == 0) continue;
            const auto [it, inserted] = owner.emplace(col, r);
            if (!inserted) sets.unite(r, it->second);
        }

    std::unordered_map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t r = 0; r < rows.size(); ++r) blocks[sets.find(r)].push_back(r);

    std::size_t rank = 0;
    for (const auto& [root, members] : blocks) {
        std::unordered_map<std::size_t, std::size_t> local;
        for (std::size_t r : members)
            for (const auto& [col, value] : rows[r])
                if (value != 0) local.emplace(col, local.size());
        std::vector<std::vector<Rational>> dense(members.size(),
                                                 std::vector<Rational>(local.size(), Rational(0)));
        for (std::size_t k = 0; k < members.size(); ++k)
            for (const auto& [col, value] : rows[members[k]])
                if (value != 0) dense[k][local.at(col)] = value;
        rank += exact_rank(std::move(dense));
    }
    return rank;
}

} // namespace quasisym
