#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/linalg.hpp"

namespace braidinv {

/// Seeded generator with stdlib-independent bounded draws, so the same
/// seed produces the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  int range(int lo, int hi);                 // uniform in [lo, hi]

 private:
  std::mt19937_64 engine_;
};

/// Uniform random word: length in [0, max_len], letters uniform over
/// +-1..+-(n-1).
BraidWord random_word(Rng& rng, int n, int max_len);

/// Random zero-diagonal symmetric matrix with entries in [lo, hi].
IntMatrix random_zero_diag_symmetric(Rng& rng, int n, int lo, int hi);

/// Random square matrix with entries in [lo, hi].
IntMatrix random_matrix(Rng& rng, int n, int lo, int hi);

/// Random pure word, as the realization of a random zero-diagonal
/// symmetric matrix with entries in [-max_entry, max_entry].
BraidWord random_pure_word(Rng& rng, int n, int max_entry);

Permutation random_permutation(Rng& rng, int n);

// ---- property suite -------------------------------------------------

struct VerifyOptions {
  int n = 4;          // maximum strand count of generated values
  int trials = 200;   // checks per randomized property
  std::uint64_t seed = 1;
  int max_len = 8;    // maximum generated word length
  std::uint64_t max_order = kDefaultMaxOrder;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // counterexample description, empty if none
};

/// Runs every algebraic property of the library under seeded randomness;
/// one result row per property.
std::vector<PropertyResult> run_property_suite(const VerifyOptions& opts);

/// Fixed-width table of the results plus a final PASS/FAIL summary line.
std::string property_results_to_text(const std::vector<PropertyResult>& results);

}  // namespace braidinv
