#include "braidinv/linalg.hpp"

#include <algorithm>
#include <utility>

namespace braidinv {

IntMatrix::IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(int n, std::vector<BigInt> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw InvalidArgument("entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (n_ != other.n_) throw InvalidArgument("dimension mismatch in matrix sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_)
    throw InvalidArgument("dimension mismatch in matrix product");
  const int n = lhs.n_;
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& a = lhs.at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const BigInt& v) { return v == 0; });
}

bool IntMatrix::has_zero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (at(i, i) != 0) return false;
  return true;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(BigInt(0));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    const bool first = out.empty();
    const bool negative = c < 0;
    BigInt abs_c = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = abs_c == 1 && d > 0;
    if (!unit) out += abs_c.get_str();
    if (d > 0) {
      if (!unit) out += "*";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void divexact_inplace(BigInt& num, const BigInt& den) {
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot_row = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) return 0;
    if (pivot_row != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot_row, j));
      sign = -sign;
    }
    // one Bareiss step: every updated entry stays an exact minor
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt& v = a.at(i, j);
        v = v * a.at(k, k) - a.at(i, k) * a.at(k, j);
        divexact_inplace(v, prev);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  BigInt det = a.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  const int n = m.dim();
  // Samuelson-Berkowitz: grow the leading principal block one row at a
  // time, mapping the previous characteristic polynomial through a
  // lower-triangular Toeplitz matrix. Division-free throughout.
  std::vector<BigInt> poly{BigInt(1)};  // descending coefficients
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> toeplitz_col(static_cast<std::size_t>(k) + 1);
    toeplitz_col[0] = 1;
    toeplitz_col[1] = -m.at(k - 1, k - 1);
    if (k >= 2) {
      // v = (leading block)^t * S where S is the column above entry (k-1,k-1)
      std::vector<BigInt> v(static_cast<std::size_t>(k) - 1);
      for (int i = 0; i < k - 1; ++i) v[i] = m.at(i, k - 1);
      for (int i = 2; i <= k; ++i) {
        BigInt dot = 0;
        for (int t = 0; t < k - 1; ++t) dot += m.at(k - 1, t) * v[t];
        toeplitz_col[i] = -dot;
        if (i < k) {
          std::vector<BigInt> next(static_cast<std::size_t>(k) - 1);
          for (int r = 0; r < k - 1; ++r) {
            BigInt acc = 0;
            for (int c = 0; c < k - 1; ++c) acc += m.at(r, c) * v[c];
            next[r] = acc;
          }
          v = std::move(next);
        }
      }
    }
    std::vector<BigInt> next_poly(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) {
      BigInt acc = 0;
      for (int c = 0; c < k && c <= r; ++c) acc += toeplitz_col[r - c] * poly[c];
      next_poly[r] = acc;
    }
    poly = std::move(next_poly);
  }
  std::reverse(poly.begin(), poly.end());  // store ascending
  return IntPolynomial(std::move(poly));
}

int rank(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix a = m;
  BigInt prev = 1;
  int r = 0;
  while (r < n) {
    int pi = -1, pj = -1;
    for (int i = r; i < n && pi < 0; ++i)
      for (int j = r; j < n; ++j)
        if (a.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(pi, j));
    if (pj != r)
      for (int i = 0; i < n; ++i) std::swap(a.at(i, r), a.at(i, pj));
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j) {
        BigInt& v = a.at(i, j);
        v = v * a.at(r, r) - a.at(i, r) * a.at(r, j);
        divexact_inplace(v, prev);
      }
      a.at(i, r) = 0;
    }
    prev = a.at(r, r);
    ++r;
  }
  return r;
}

IntMatrix permutation_similarity(const Permutation& p) {
  const int n = p.size();
  IntMatrix q(n);
  for (int i = 0; i < n; ++i) q.at(i, p.apply(i)) = 1;
  return q;
}

}  // namespace braidinv
