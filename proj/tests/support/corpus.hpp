#pragma once

#include "quasisym/classify.hpp"
#include "quasisym/perm.hpp"

#include <random>
#include <string>
#include <vector>

namespace quasisym::testing {

struct NamedGroup {
    std::string name;
    PermGroup group;
};

/// Integer partitions of n, parts in non-increasing order.
std::vector<std::vector<int>> partitions(int n);

/// Contiguous blocks of the given sizes: {0..a-1}, {a..a+b-1}, ...
std::vector<std::vector<int>> contiguous_blocks(const std::vector<int>& sizes);

/// S_n, A_n, C_n for 1 <= n <= max_n and the caste group of every partition.
std::vector<NamedGroup> named_groups(int max_n);

/// Subgroups generated by one or two random permutations of random support,
/// degree drawn uniformly from [lo_n, hi_n].
std::vector<NamedGroup> random_groups(std::mt19937_64& rng, int count, int lo_n, int hi_n);

/// All 30 subgroups of S4, plus named groups for n <= 8, 50 random subgroups
/// of S5..S7 and the exotic S5 image.
std::vector<NamedGroup> full_corpus();

Permutation random_permutation(std::mt19937_64& rng, int n);

// Oracles built on plain image vectors, independent of PermGroup.
using Image = std::vector<int>;
Image image_compose(const Image& p, const Image& q);
std::vector<Image> brute_closure(std::vector<Image> gens, int n);
/// Distinct subgroups of S_n reachable from generating sets of at most
/// max_gens elements, each as a sorted element list.
std::vector<std::vector<Image>> brute_subgroups(int n, int max_gens);

long totient(long n);

} // namespace quasisym::testing
