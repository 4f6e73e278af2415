#include "braidinv/crossing.hpp"

#include <numeric>

namespace braidinv {

CrossingMatrix crossing_matrix(const BraidWord& w) {
  const int n = w.strands();
  IntMatrix m(n);
  std::vector<int> strand_at(n);  // position -> strand, 0-based
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (const Letter& l : w.letters()) {
    const int p = l.index - 1;
    if (l.sign > 0) {
      m.at(strand_at[p + 1], strand_at[p]) += 1;  // right strand passes over
    } else {
      m.at(strand_at[p], strand_at[p + 1]) -= 1;  // left strand passes over
    }
    std::swap(strand_at[p], strand_at[p + 1]);
  }
  return m;
}

CrossingMatrix apply_perm_to_matrix(const Permutation& p, const CrossingMatrix& m) {
  if (p.size() != m.dim())
    throw InvalidArgument("permutation size does not match matrix dimension");
  const Permutation inv = p.inverse();
  const int n = m.dim();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = m.at(inv.apply(i), inv.apply(j));
  return out;
}

CrossingMatrix pure_power_sum(const BraidWord& w, std::uint64_t max_order) {
  const Permutation rho = permutation_of(w);
  const std::uint64_t order = perm_order(rho, max_order);
  const CrossingMatrix base = crossing_matrix(w);
  CrossingMatrix sum = base;
  CrossingMatrix term = base;
  for (std::uint64_t k = 1; k < order; ++k) {
    term = apply_perm_to_matrix(rho, term);
    sum += term;
  }
  return sum;
}

namespace {

// Band generator: (sigma_{j-1}...sigma_{i+1}) sigma_i^2
// (sigma_{i+1}^{-1}...sigma_{j-1}^{-1}), with 1-based i < j. Its crossing
// matrix is the elementary symmetric matrix with ones at (i,j) and (j,i).
BraidWord band_generator(int n, int i, int j) {
  std::vector<Letter> letters;
  for (int k = j - 1; k >= i + 1; --k) letters.push_back(Letter{k, +1});
  letters.push_back(Letter{i, +1});
  letters.push_back(Letter{i, +1});
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(Letter{k, -1});
  return BraidWord(n, std::move(letters));
}

}  // namespace

BraidWord realize_pure(const CrossingMatrix& m) {
  if (!m.has_zero_diagonal())
    throw InvalidArgument("matrix has a nonzero diagonal entry");
  if (!m.is_symmetric()) throw InvalidArgument("matrix is not symmetric");
  const int n = m.dim();
  BraidWord word(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const BigInt& e = m.at(i - 1, j - 1);
      if (e == 0) continue;
      if (!e.fits_slong_p())
        throw InvalidArgument("matrix entry too large to realize as a word");
      const long exp = e.get_si();
      const BraidWord base = band_generator(n, i, j);
      word = concat(word, power(exp > 0 ? base : inverse(base),
                                static_cast<int>(exp > 0 ? exp : -exp)));
    }
  }
  return word;
}

}  // namespace braidinv
