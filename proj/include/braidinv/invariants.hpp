#pragma once

#include <string>

#include "braidinv/crossing.hpp"

#include <json.hpp>

namespace braidinv {

/// The pair (permutation order, purified determinant). Distinguishes a
/// braid from its pure powers, which share the determinant alone.
struct PPair {
  std::uint64_t order;
  BigInt p_value;

  friend bool operator==(const PPair&, const PPair&) = default;
};

/// Conjugation-invariant key: permutation order together with the
/// characteristic polynomial of the pure-power crossing matrix. The
/// polynomial determines the purified determinant and the rank.
struct ConjugacyKey {
  std::uint64_t order;
  IntPolynomial charpoly;

  /// Canonical serialization "(order|c0,c1,...,cn)" with ascending
  /// decimal coefficients; stable for sorting and diffing.
  std::string canonical() const;

  friend bool operator==(const ConjugacyKey&, const ConjugacyKey&) = default;
};

/// Total order on keys: by order, then by coefficient list.
bool operator<(const ConjugacyKey& a, const ConjugacyKey& b);

/// All word-level quantities in one consistent bundle.
struct InvariantReport {
  int n;
  std::string word;
  Permutation permutation;
  std::uint64_t order;
  CrossingMatrix matrix;       // C(w)
  CrossingMatrix pure_matrix;  // C(w^order)
  BigInt p;
  PPair pp;
  BigInt q;
  IntPolynomial charpoly;  // of pure_matrix
  int rank;                // of pure_matrix
  bool is_pure;
};

/// det of the pure-power crossing matrix; identical on conjugate words
/// and on all words representing the same braid.
BigInt purified_determinant(const BraidWord& w,
                            std::uint64_t max_order = kDefaultMaxOrder);

PPair p_pair(const BraidWord& w, std::uint64_t max_order = kDefaultMaxOrder);

/// det(C(w) + I); unchanged by stabilization, but not by conjugation.
BigInt q_determinant(const BraidWord& w);

ConjugacyKey conjugacy_key(const BraidWord& w,
                           std::uint64_t max_order = kDefaultMaxOrder);

InvariantReport invariant_report(const BraidWord& w,
                                 std::uint64_t max_order = kDefaultMaxOrder);

/// True when all fields that do not depend on the spelling of the word
/// agree (everything except the word text itself).
bool reports_agree(const InvariantReport& a, const InvariantReport& b);

/// Fixed-field-order JSON; big integers as decimal strings.
nlohmann::ordered_json report_to_json(const InvariantReport& r);

/// Aligned key/value table with the two matrices printed in full.
std::string report_to_text(const InvariantReport& r);

}  // namespace braidinv
