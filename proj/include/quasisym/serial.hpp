#pragma once

// Straightforward sequential versions of the OpenMP kernels. They are kept
// as references for the tests and as the baseline in bench_kernels.

#include "quasisym/classify.hpp"
#include "quasisym/marginal.hpp"
#include "quasisym/value.hpp"

namespace quasisym::serial {

/// Σ_p weight(p) · marginal_matrix(p), one dense matrix at a time.
ValueMatrix average(const MarginalDistribution& d);

/// check_symmetry over every group element, sequentially.
SymmetryReport check_symmetry_exhaustive(const ValueMatrix& m, const PermGroup& group);

/// Builds each stabilizer with quasisym::stabilizer and its orbits with the
/// generic orbit routine; stops at the first failing subset.
SupertransitivityReport is_supertransitive(const PermGroup& group);

} // namespace quasisym::serial
