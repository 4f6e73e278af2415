#pragma once

#include <gmpxx.h>

#include <string>

namespace braidinv {

/// Exact arbitrary-precision integer. Crossing counts grow with word
/// length times permutation order and determinants grow factorially,
/// so fixed-width arithmetic is never used for matrix entries.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace braidinv
