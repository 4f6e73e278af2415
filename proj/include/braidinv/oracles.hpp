#pragma once

#include "braidinv/braid.hpp"
#include "braidinv/linalg.hpp"

namespace braidinv {

// Independent brute-force routes used to validate the production paths.
// Not optimized; the guards are hard limits.

/// Cofactor (Laplace) expansion. Dimension capped at 7.
BigInt naive_determinant(const IntMatrix& m);

/// crossing_matrix(power(w, |rho|)) by literal tracing of the repeated
/// word. Must equal pure_power_sum(w). The traced letter count
/// |rho| * len(w) is capped at 10^7.
IntMatrix direct_power_matrix(const BraidWord& w);

/// True iff Q^T m Q equals the row/column reindexing of m by p, with
/// Q = permutation_similarity(p).
bool similarity_witness_check(const Permutation& p, const IntMatrix& m);

}  // namespace braidinv
