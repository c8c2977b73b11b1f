#include "quasisym/serial.hpp"

#include "quasisym/game.hpp"

#include <algorithm>

namespace quasisym::serial {

ValueMatrix average(const MarginalDistribution& d) {
    const auto& perms = all_permutations(d.players());
    ValueMatrix total(d.players());
    for (std::size_t k = 0; k < perms.size(); ++k) {
        if (d.weights()[k] == 0) continue;
        ValueMatrix m = marginal_matrix(perms[k]);
        m *= d.weights()[k];
        total += m;
    }
    return total;
}

SymmetryReport check_symmetry_exhaustive(const ValueMatrix& m, const PermGroup& group) {
    const int n = m.players();
    SymmetryReport report;
    for (int i = 0; i < n; ++i)
        for (Mask r = 1; r <= full_mask(n); ++r)
            for (const auto& g : group.elements())
                if (m(i, r) != m(g(i), g.apply(r))) {
                    report.ok = false;
                    report.witness = SymmetryWitness{g, i, r};
                    return report;
                }
    return report;
}

SupertransitivityReport is_supertransitive(const PermGroup& group) {
    const int n = group.degree();
    SupertransitivityReport report;
    for (int size = 1; size <= n; ++size)
        for (Mask a = 1; a <= full_mask(n); ++a) {
            if (popcount(a) != size) continue;
            const PermGroup stab = stabilizer(group, a);
            std::vector<int> points;
            for (int i = 0; i < n; ++i)
                if (contains(a, i)) points.push_back(i);
            const auto blocks = orbits<int>(stab, points, [](const Permutation& g, int i) { return g(i); });
            if (blocks.size() == 1) continue;
            const int to = *std::min_element(blocks[1].begin(), blocks[1].end());
            report.ok = false;
            report.witness = SupertransitivityWitness{a, blocks[0].front(), to};
            return report;
        }
    return report;
}

} // namespace quasisym::serial
