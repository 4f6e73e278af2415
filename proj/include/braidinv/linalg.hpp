#pragma once

#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

/// Square matrix of exact integers, row-major.
class IntMatrix {
 public:
  /// Zero matrix of dimension n >= 1.
  explicit IntMatrix(int n);

  IntMatrix(int n, std::vector<BigInt> entries);

  static IntMatrix identity(int n);

  int dim() const { return n_; }
  BigInt& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  IntMatrix& operator+=(const IntMatrix& other);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

  IntMatrix transposed() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool has_zero_diagonal() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<BigInt> entries_;
};

/// Integer-coefficient polynomial, coefficients stored ascending by degree.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{BigInt(0)} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const { return coeffs_[i]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  /// Human-readable form, highest degree first, e.g. "x^3 - 3*x - 2".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting and sign tracking.
BigInt determinant(const IntMatrix& m);

/// Exact coefficients of det(xI - m), computed division-free by the
/// Samuelson-Berkowitz iteration. Monic of degree dim(m).
IntPolynomial characteristic_polynomial(const IntMatrix& m);

/// Rank over the rationals, by fraction-free elimination with full
/// pivoting on nonzero entries.
int rank(const IntMatrix& m);

/// The 0/1 matrix Q with Q^T m Q equal to the simultaneous row/column
/// reindexing of m by p, for every m. Q^{-1} = Q^T.
IntMatrix permutation_similarity(const Permutation& p);

}  // namespace braidinv
