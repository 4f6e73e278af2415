#pragma once

#include "braidinv/braid.hpp"
#include "braidinv/linalg.hpp"

namespace braidinv {

/// Signed crossing-count matrix of a braid word. Entry (i, j) counts
/// positive minus negative crossings in which strand i passes over
/// strand j; the diagonal is always zero, and the matrix is symmetric
/// exactly when the word is pure.
using CrossingMatrix = IntMatrix;

/// Computes the crossing matrix in one pass over the letters while
/// maintaining the position-to-strand map. At sigma_i^{+1} the strand
/// currently at position i+1 passes over the strand at position i and
/// the entry (over, under) is incremented; at sigma_i^{-1} the strand at
/// position i passes over and the entry is decremented. The two
/// positions then swap.
CrossingMatrix crossing_matrix(const BraidWord& w);

/// Simultaneous row/column reindexing: result(i, j) = m(p^{-1}(i), p^{-1}(j)).
/// Linear in m, and a similarity transformation (see permutation_similarity).
CrossingMatrix apply_perm_to_matrix(const Permutation& p, const CrossingMatrix& m);

/// The crossing matrix of w^|rho|, computed as the sum of p^k applied to
/// crossing_matrix(w) for k = 0..|rho|-1 instead of tracing the |rho|-fold
/// word. Always symmetric with zero diagonal.
CrossingMatrix pure_power_sum(const BraidWord& w,
                              std::uint64_t max_order = kDefaultMaxOrder);

/// Constructs a pure braid word whose crossing matrix is exactly m, for
/// any zero-diagonal symmetric integer matrix. Built as the product over
/// i < j of the band generator (sigma_{j-1}...sigma_{i+1}) sigma_i^2
/// (sigma_{i+1}^{-1}...sigma_{j-1}^{-1}) raised to the m(i, j) power,
/// factors ordered lexicographically by (i, j).
BraidWord realize_pure(const CrossingMatrix& m);

}  // namespace braidinv
