#include "braidinv/permutation.hpp"

#include <numeric>
#include <string>

#include "braidinv/bigint.hpp"

namespace braidinv {

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation size must be >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> shifted(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) shifted[i] = images[i] - 1;
  return Permutation(std::move(shifted));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw InvalidArgument("permutation size must be >= 1");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw InvalidArgument("image list is not a bijection of {1..n}");
    seen[v] = 1;
  }
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (size() != next.size())
    throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = next.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::power(std::uint64_t k) const {
  Permutation result = identity(size());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t perm_order(const Permutation& p, std::uint64_t max_order) {
  const int n = p.size();
  std::vector<char> visited(n, 0);
  BigInt order = 1;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    int cur = start;
    while (!visited[cur]) {
      visited[cur] = 1;
      cur = p.apply(cur);
      ++len;
    }
    mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), len);
  }
  if (order > BigInt(static_cast<unsigned long>(max_order)))
    throw OrderGuardError("permutation order " + order.get_str() +
                          " exceeds the guard " + std::to_string(max_order));
  return order.get_ui();
}

Permutation transposition(int n, int i) {
  if (i < 1 || i >= n)
    throw InvalidArgument("transposition index out of range");
  Permutation t = Permutation::identity(n);
  std::vector<int> images = t.images();
  std::swap(images[i - 1], images[i]);
  return Permutation(std::move(images));
}

}  // namespace braidinv
