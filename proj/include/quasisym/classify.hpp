#pragma once

#include "quasisym/perm.hpp"
#include "quasisym/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasisym {

struct SupertransitivityWitness {
    Mask coalition;  // smallest failing A (by size, then mask)
    int from;        // min(A)
    int to;          // smallest member of A the stabilizer cannot reach from `from`
};

struct SupertransitivityReport {
    bool ok = true;
    std::optional<SupertransitivityWitness> witness;
};

/// Whether the setwise stabilizer of every nonempty A ⊆ Ω is transitive on A.
/// Subsets are scanned in parallel; the reported witness is the first failure
/// in (size, mask) order.
SupertransitivityReport is_supertransitive(const PermGroup& group);

/// Whether, for every 1 <= k <= n, all k-subsets form a single G-orbit.
bool is_set_transitive(const PermGroup& group);

/// lcm(1, ..., n)
Integer lcm_upto(int n);

/// lcm(1..n) divides |G|; necessary for supertransitivity.
bool lcm_filter(const PermGroup& group);
bool lcm_filter(const Integer& order, int n);

/// S5 acting by conjugation on its six Sylow 5-subgroups.
struct EmbeddingReport {
    PermGroup image_group;  // on 6 points
    /// Generators of the Sylow subgroups labelled I..VI (points 0..5).
    std::array<Permutation, 6> sylow_generators;
    /// Every transposition of S5 (lexicographic) with its image under
    /// g ↦ (P ↦ g P g⁻¹).
    std::vector<std::pair<Permutation, Permutation>> transposition_images;
    /// Same, under the other convention P ↦ g⁻¹ P g.
    std::vector<std::pair<Permutation, Permutation>> transposition_images_alt;
    /// The homomorphism on all of S5, in lexicographic order of S5.
    std::vector<std::pair<Permutation, Permutation>> map;

    const Permutation& image_of(const Permutation& g) const;
};

/// Throws std::logic_error on internal inconsistency (not six Sylow
/// subgroups, image order != 120).
EmbeddingReport exotic_embedding();

/// The standard copy of S5 in S6 fixing the sixth point.
PermGroup standard_s5_in_s6();

/// "I".."VI" for points 0..5.
std::string roman_label(int point);
/// Cycle notation with roman point labels, e.g. "(I VI)(II IV)(III V)".
std::string roman_cycles(const Permutation& p);

/// Every subgroup of S_n (1 <= n <= 5) by iterated cyclic extension: start
/// from all cyclic subgroups and add one element at a time until nothing new
/// appears. Sorted by order, then element list.
std::vector<PermGroup> enumerate_subgroups(int n);

struct ClassificationReport {
    int n = 0;
    bool exhaustive = false;
    bool ok = true;
    std::vector<PermGroup> supertransitive;
    std::vector<std::string> lines;     // human-readable findings
    std::vector<std::string> failures;  // empty iff ok
};

/// n <= 5: every subgroup of S_n is tested and the supertransitive ones must
/// be exactly {S_n} ∪ {A_n : n > 3}. n = 6: S6, A6 and the exotic image must
/// be supertransitive with dimension 0, a curated list of other groups must
/// fail with dimension >= 1.
ClassificationReport verify_classification(int n);

} // namespace quasisym
