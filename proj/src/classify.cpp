#include "quasisym/classify.hpp"

#include "quasisym/error.hpp"
#include "quasisym/game.hpp"
#include "quasisym/marginal.hpp"
#include "quasisym/symspace.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace quasisym {

namespace {

// Subsets of {0..n-1} ordered by size, then mask.
std::vector<Mask> subsets_by_size(int n) {
    std::vector<Mask> subsets;
    for (Mask m = 1; m <= full_mask(n); ++m) subsets.push_back(m);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    return subsets;
}

std::optional<SupertransitivityWitness> stabilizer_transitivity_failure(const PermGroup& group, Mask a) {
    const int from = __builtin_ctz(a);
    Mask reached = 0;
    for (const auto& g : group.elements())
        if (g.apply(a) == a) reached |= Mask{1} << g(from);
    if (reached == a) return std::nullopt;
    return SupertransitivityWitness{a, from, __builtin_ctz(a & ~reached)};
}

} // namespace

SupertransitivityReport is_supertransitive(const PermGroup& group) {
    const auto subsets = subsets_by_size(group.degree());
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    std::atomic<std::ptrdiff_t> first_fail{count};

#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        if (k > first_fail.load(std::memory_order_relaxed)) continue;
        if (stabilizer_transitivity_failure(group, subsets[static_cast<std::size_t>(k)])) {
            std::ptrdiff_t cur = first_fail.load();
            while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {}
        }
    }

    SupertransitivityReport report;
    if (first_fail < count) {
        report.ok = false;
        report.witness = stabilizer_transitivity_failure(group, subsets[static_cast<std::size_t>(first_fail.load())]);
    }
    return report;
}

bool is_set_transitive(const PermGroup& group) {
    const int n = group.degree();
    for (int k = 1; k < n; ++k) {
        const Mask start = full_mask(k);
        std::set<Mask> orbit{start};
        std::deque<Mask> queue{start};
        while (!queue.empty()) {
            const Mask x = queue.front();
            queue.pop_front();
            for (const auto& g : group.generators())
                if (orbit.insert(g.apply(x)).second) queue.push_back(g.apply(x));
        }
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if (binom != static_cast<unsigned long>(orbit.size())) return false;
    }
    return true;
}

Integer lcm_upto(int n) {
    Integer l = 1;
    for (int k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
    return l;
}

bool lcm_filter(const Integer& order, int n) { return order % lcm_upto(n) == 0; }

bool lcm_filter(const PermGroup& group) {
    return lcm_filter(Integer(static_cast<unsigned long>(group.order())), group.degree());
}

const Permutation& EmbeddingReport::image_of(const Permutation& g) const {
    const auto it = std::lower_bound(map.begin(), map.end(), g,
                                     [](const auto& entry, const Permutation& p) { return entry.first < p; });
    if (it == map.end() || it->first != g) throw InvalidArgument("image_of: not an element of S5");
    return it->second;
}

std::string roman_label(int point) {
    static const char* labels[] = {"I", "II", "III", "IV", "V", "VI"};
    if (point < 0 || point > 5) throw InvalidArgument("roman_label: point outside 0..5");
    return labels[point];
}

std::string roman_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
        out += '(';
        for (int x = i; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            if (x != i) out += ' ';
            out += roman_label(x);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

EmbeddingReport exotic_embedding() {
    const PermGroup s5 = symmetric_group(5);

    // Sylow 5-subgroups: group the 24 five-cycles by the subgroup they generate.
    std::vector<PermGroup> sylow;
    for (const auto& g : s5.elements()) {
        if (g.cycle_type().j[4] != 1) continue;
        const Permutation gens[] = {g};
        PermGroup p = PermGroup::generate(5, gens);
        if (std::find(sylow.begin(), sylow.end(), p) == sylow.end()) sylow.push_back(std::move(p));
    }
    if (sylow.size() != 6)
        throw std::logic_error("exotic_embedding: found " + std::to_string(sylow.size()) +
                               " Sylow 5-subgroups, expected 6");

    EmbeddingReport report;
    static const char* labels[] = {"(12345)", "(12354)", "(12435)", "(12453)", "(12534)", "(12543)"};
    std::array<const PermGroup*, 6> labelled{};
    for (int k = 0; k < 6; ++k) {
        report.sylow_generators[static_cast<std::size_t>(k)] = parse_cycles(labels[k], 5);
        for (const auto& p : sylow)
            if (p.contains(report.sylow_generators[static_cast<std::size_t>(k)])) labelled[static_cast<std::size_t>(k)] = &p;
    }
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (labelled[static_cast<std::size_t>(a)] == labelled[static_cast<std::size_t>(b)])
                throw std::logic_error("exotic_embedding: labels do not name six distinct subgroups");

    auto label_of = [&](const Permutation& generator) {
        for (int k = 0; k < 6; ++k)
            if (labelled[static_cast<std::size_t>(k)]->contains(generator)) return k;
        throw std::logic_error("exotic_embedding: conjugate is not a Sylow 5-subgroup");
    };
    // Conjugating the generator suffices: g⟨c⟩g⁻¹ = ⟨g c g⁻¹⟩.
    auto induced = [&](const Permutation& g) {
        std::vector<int> image(6);
        for (int k = 0; k < 6; ++k)
            image[static_cast<std::size_t>(k)] = label_of(conjugate(g, report.sylow_generators[static_cast<std::size_t>(k)]));
        return Permutation(image);
    };

    std::vector<Permutation> images;
    for (const auto& g : s5.elements()) {
        report.map.emplace_back(g, induced(g));
        images.push_back(report.map.back().second);
    }
    for (const auto& g : s5.elements()) {
        if (g.cycle_type().j[1] == 1 && g.cycle_type().j[0] == 3) {
            report.transposition_images.emplace_back(g, report.image_of(g));
            report.transposition_images_alt.emplace_back(g, induced(g.inverse()));
        }
    }

    std::vector<Permutation> gens;
    for (const auto& g : s5.generators()) gens.push_back(report.image_of(g));
    report.image_group = PermGroup::generate(6, gens);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (report.image_group.order() != 120 || images != report.image_group.elements())
        throw std::logic_error("exotic_embedding: image is not a faithful copy of S5");
    return report;
}

PermGroup standard_s5_in_s6() {
    const Permutation gens[] = {parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5)", 6)};
    return PermGroup::generate(6, gens);
}

std::vector<PermGroup> enumerate_subgroups(int n) {
    if (n < 1 || n > 5) throw InvalidArgument("enumerate_subgroups: n must lie in 1..5");
    const PermGroup sn = symmetric_group(n);

    auto element_key = [](const PermGroup& g) {
        std::vector<std::uint64_t> key;
        key.reserve(g.order());
        for (const auto& e : g.elements()) key.push_back(e.key());
        return key;
    };

    std::map<std::vector<std::uint64_t>, PermGroup> known;
    std::deque<const PermGroup*> work;
    auto add = [&](PermGroup g) {
        auto [it, inserted] = known.emplace(element_key(g), std::move(g));
        if (inserted) work.push_back(&it->second);
    };

    for (const auto& x : sn.elements()) {
        const Permutation gens[] = {x};
        add(PermGroup::generate(n, gens));
    }
    while (!work.empty()) {
        const PermGroup& h = *work.front();
        work.pop_front();
        for (const auto& x : sn.elements()) {
            if (h.contains(x)) continue;
            std::vector<Permutation> gens = h.generators();
            gens.push_back(x);
            add(PermGroup::generate(n, gens));
        }
    }

    std::vector<PermGroup> result;
    for (auto& [key, g] : known) result.push_back(g);
    std::stable_sort(result.begin(), result.end(),
                     [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return result;
}

namespace {

std::string verdict_line(const std::string& name, const PermGroup& g, bool supertransitive, std::size_t dim) {
    return name + ": order " + std::to_string(g.order()) + ", supertransitive " +
           (supertransitive ? "yes" : "no") + ", dimension " + std::to_string(dim);
}

} // namespace

ClassificationReport verify_classification(int n) {
    ClassificationReport report;
    report.n = n;

    if (n >= 1 && n <= 5) {
        report.exhaustive = true;
        const auto subgroups = enumerate_subgroups(n);
        report.lines.push_back("subgroups of S" + std::to_string(n) + ": " + std::to_string(subgroups.size()));

        std::vector<PermGroup> expected{symmetric_group(n)};
        if (n > 3) expected.push_back(alternating_group(n));

        for (const auto& g : subgroups) {
            const bool st = is_supertransitive(g).ok;
            if (st) report.supertransitive.push_back(g);
            if (st && (!is_set_transitive(g) || !lcm_filter(g)))
                report.failures.push_back("supertransitive group fails a necessary condition: " + g.describe());
            if (!st && is_set_transitive(g))
                report.lines.push_back("set-transitive, not supertransitive: order " + std::to_string(g.order()) +
                                       (lcm_filter(g) ? "" : " (rejected by lcm filter)"));
        }
        for (const auto& e : expected)
            if (std::find(report.supertransitive.begin(), report.supertransitive.end(), e) ==
                report.supertransitive.end())
                report.failures.push_back("expected supertransitive group missing: " + e.describe());
        for (const auto& g : report.supertransitive) {
            report.lines.push_back("supertransitive: " + std::string(g.order() == symmetric_group(n).order() ? "S" : "A") +
                                   std::to_string(n) + " (order " + std::to_string(g.order()) + ")");
            if (std::find(expected.begin(), expected.end(), g) == expected.end())
                report.failures.push_back("unexpected supertransitive group: " + g.describe());
        }
    } else if (n == 6) {
        const std::vector<std::pair<std::string, PermGroup>> unique_value{
            {"S6", symmetric_group(6)},
            {"A6", alternating_group(6)},
            {"exotic S5", exotic_embedding().image_group},
        };
        for (const auto& [name, g] : unique_value) {
            const bool st = is_supertransitive(g).ok;
            const std::size_t dim = dimension_orbit(g);
            report.lines.push_back(verdict_line(name, g, st, dim));
            if (st) report.supertransitive.push_back(g);
            if (!st || dim != 0) report.failures.push_back(name + " should be supertransitive with dimension 0");
        }

        auto gen = [](std::initializer_list<const char*> cycles) {
            std::vector<Permutation> gens;
            for (const char* c : cycles) gens.push_back(parse_cycles(c, 6));
            return PermGroup::generate(6, gens);
        };
        const std::vector<std::pair<std::string, PermGroup>> curated{
            {"C6", cyclic_group(6)},
            {"D6", gen({"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"})},
            {"standard S5", standard_s5_in_s6()},
            {"caste 3+3", caste_group({{0, 1, 2}, {3, 4, 5}})},
            {"caste 2+2+2", caste_group({{0, 1}, {2, 3}, {4, 5}})},
            {"caste 4+2", caste_group({{0, 1, 2, 3}, {4, 5}})},
            {"caste 5+1", caste_group({{0, 1, 2, 3, 4}, {5}})},
            {"S3 wr S2", gen({"(1 2)", "(1 2 3)", "(1 4)(2 5)(3 6)"})},
            {"trivial", trivial_group(6)},
        };
        for (const auto& [name, g] : curated) {
            const bool st = is_supertransitive(g).ok;
            const std::size_t dim = dimension_orbit(g);
            report.lines.push_back(verdict_line(name, g, st, dim));
            if (st || dim < 1) report.failures.push_back(name + " should not be supertransitive and have dimension >= 1");
        }
    } else {
        throw InvalidArgument("verify_classification supports n in 1..6");
    }
    report.ok = report.failures.empty();
    return report;
}

} // namespace quasisym
