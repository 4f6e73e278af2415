#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidinv/invariants.hpp"

namespace braidinv {

/// One conjugacy-key equivalence class found by the sieve.
struct SieveBucket {
  ConjugacyKey key;
  std::uint64_t count = 0;
  std::vector<int> rep_tokens;  // shortest, then token-lexicographically least

  std::string rep_text() const;
};

struct SieveResult {
  int n = 0;
  int max_len = 0;
  std::uint64_t word_count = 0;
  std::vector<SieveBucket> buckets;  // sorted by key
};

/// Enumerates every word over the letters +-1..+-(n-1) of length
/// 0..max_len and buckets them by conjugacy key. Evaluation may fan out
/// across `threads` workers (0 = pick automatically); the merged listing
/// is identical regardless of scheduling.
SieveResult run_sieve(int n, int max_len, unsigned threads = 0,
                      std::uint64_t max_order = kDefaultMaxOrder);

std::string sieve_to_text(const SieveResult& r);
nlohmann::ordered_json sieve_to_json(const SieveResult& r);

}  // namespace braidinv
