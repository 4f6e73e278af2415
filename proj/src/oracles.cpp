#include "braidinv/oracles.hpp"

#include "braidinv/crossing.hpp"

namespace braidinv {

namespace {

constexpr int kNaiveDetMaxDim = 7;
constexpr std::uint64_t kMaxTracedLetters = 10'000'000;

BigInt laplace(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 1) return m.at(0, 0);
  BigInt det = 0;
  for (int col = 0; col < n; ++col) {
    if (m.at(0, col) == 0) continue;
    IntMatrix minor(n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    const BigInt term = m.at(0, col) * laplace(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

BigInt naive_determinant(const IntMatrix& m) {
  if (m.dim() > kNaiveDetMaxDim)
    throw CostGuardError("cofactor expansion capped at dimension " +
                         std::to_string(kNaiveDetMaxDim));
  return laplace(m);
}

IntMatrix direct_power_matrix(const BraidWord& w) {
  const std::uint64_t order = perm_order(permutation_of(w));
  if (order * w.size() > kMaxTracedLetters)
    throw CostGuardError("traced letter count exceeds " +
                         std::to_string(kMaxTracedLetters));
  return crossing_matrix(power(w, static_cast<int>(order)));
}

bool similarity_witness_check(const Permutation& p, const IntMatrix& m) {
  if (p.size() != m.dim())
    throw InvalidArgument("permutation size does not match matrix dimension");
  const IntMatrix q = permutation_similarity(p);
  return q.transposed() * m * q == apply_perm_to_matrix(p, m);
}

}  // namespace braidinv
