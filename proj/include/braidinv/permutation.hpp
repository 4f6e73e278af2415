#pragma once

#include <cstdint>
#include <vector>

#include "braidinv/errors.hpp"

namespace braidinv {

/// Default cap on permutation orders accepted by order-dependent
/// computations. Orders are bounded by Landau's function and can explode
/// for large strand counts; the guard bounds downstream matrix-sum work.
inline constexpr std::uint64_t kDefaultMaxOrder = 1'000'000;

/// A bijection of {0, ..., n-1}, stored as the image list.
///
/// Positions are 0-based internally; `one_based()` renders the
/// conventional (j_1, ..., j_n) form used in word-level output.
class Permutation {
 public:
  /// Identity on n points.
  static Permutation identity(int n);

  /// From a 1-based image list (j_1, ..., j_n) with rho(k) = j_k.
  static Permutation from_one_based(const std::vector<int>& images);

  /// From a 0-based image list; must be a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;

  /// Composition "this first, then next": result(i) = next(this(i)).
  Permutation then(const Permutation& next) const;

  Permutation power(std::uint64_t k) const;

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Least k >= 1 with p^k = id, the lcm of the cycle lengths.
/// Throws OrderGuardError when the order exceeds max_order.
std::uint64_t perm_order(const Permutation& p,
                         std::uint64_t max_order = kDefaultMaxOrder);

/// The transposition of i and i+1 (1-based) on n points.
Permutation transposition(int n, int i);

}  // namespace braidinv
