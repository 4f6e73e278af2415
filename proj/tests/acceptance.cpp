// Acceptance gate: every criterion prints exactly one PASS/FAIL line.
// Exit status is the number of failed criteria.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "braidinv/crossing.hpp"
#include "braidinv/invariants.hpp"
#include "braidinv/oracles.hpp"
#include "braidinv/verify.hpp"

using namespace braidinv;

namespace {

IntMatrix mat(int n, const std::vector<int>& values) {
  std::vector<BigInt> entries(values.begin(), values.end());
  return IntMatrix(n, std::move(entries));
}

IntMatrix ones_off_diagonal(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.at(i, j) = 1;
  return m;
}

bool golden_crossing_matrices() {
  return crossing_matrix(parse_word("1", 3)) == mat(3, {0, 0, 0,  //
                                                        1, 0, 0,  //
                                                        0, 0, 0}) &&
         crossing_matrix(parse_word("-2 1 2", 3)) == mat(3, {0, 0, 0,   //
                                                             1, 0, -1,  //
                                                             1, 0, 0}) &&
         crossing_matrix(parse_word("1 1", 3)) == mat(3, {0, 1, 0,  //
                                                          1, 0, 0,  //
                                                          0, 0, 0}) &&
         crossing_matrix(parse_word("-2 1 2 -2 1 2", 3)) ==
             mat(3, {0, 0, 1,  //
                     0, 0, 0,  //
                     1, 0, 0});
}

bool golden_reindexing_example() {
  const IntMatrix m = mat(5, {0, -1, 0, 0, 0,  //
                              0, 0,  0, 0, 0,  //
                              0, 0,  0, 0, 0,  //
                              0, 0,  0, 0, 0,  //
                              0, 0,  1, 1, 0});
  const Permutation rho = Permutation::from_one_based({2, 1, 4, 5, 3});
  return apply_perm_to_matrix(rho, m) == mat(5, {0,  0, 0, 0, 0,  //
                                                 -1, 0, 0, 0, 0,  //
                                                 0,  0, 0, 1, 1,  //
                                                 0,  0, 0, 0, 0,  //
                                                 0,  0, 0, 0, 0}) &&
         apply_perm_to_matrix(rho.power(2), m) == mat(5, {0, -1, 0, 0, 0,  //
                                                          0, 0,  0, 0, 0,  //
                                                          0, 0,  0, 0, 0,  //
                                                          0, 0,  1, 0, 1,  //
                                                          0, 0,  0, 0, 0});
}

bool worked_example_five_strands() {
  const BraidWord w = parse_word("-1 4 3", 5);
  return perm_order(permutation_of(w)) == 6 &&
         pure_power_sum(w) == mat(5, {0,  -3, 0, 0, 0,  //
                                      -3, 0,  0, 0, 0,  //
                                      0,  0,  0, 2, 2,  //
                                      0,  0,  2, 0, 2,  //
                                      0,  0,  2, 2, 0}) &&
         purified_determinant(w) == -144;
}

bool half_twist_closed_form() {
  for (int n = 2; n <= 8; ++n) {
    BigInt expected = n - 1;
    if (n % 2 == 0) expected = -expected;
    const BraidWord delta = fundamental_braid(n);
    if (purified_determinant(delta) != expected) return false;
    if (pure_power_sum(delta) != ones_off_diagonal(n)) return false;
  }
  return true;
}

bool p_pair_example() {
  const BraidWord w = parse_word("-1 2", 3);
  return p_pair(w) == PPair{3, BigInt(0)} &&
         p_pair(power(w, 3)) == PPair{1, BigInt(0)};
}

bool q_values_on_conjugates() {
  const BigInt q1 = q_determinant(parse_word("-2 -2 -2 1", 3));
  const BigInt q2 = q_determinant(parse_word("-2 -2 1 -2", 3));
  return q1 == -1 && q2 == 1 && q1 != q2;
}

bool trace_equality_of_p() {
  Rng rng(1007);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.range(2, 5);
    const BraidWord w1 = random_word(rng, n, 8);
    const BraidWord w2 = random_word(rng, n, 8);
    if (purified_determinant(concat(w1, w2)) !=
        purified_determinant(concat(w2, w1)))
      return false;
  }
  return true;
}

bool conjugation_invariance() {
  Rng rng(1008);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(2, 5);
    const BraidWord w = random_word(rng, n, 8);
    const BraidWord a = random_word(rng, n, 8);
    const BraidWord c = conjugate(w, a);
    if (purified_determinant(w) != purified_determinant(c)) return false;
    if (!(p_pair(w) == p_pair(c))) return false;
    if (!(conjugacy_key(w) == conjugacy_key(c))) return false;
  }
  return true;
}

bool product_decomposition() {
  Rng rng(1009);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(2, 5);
    const BraidWord w1 = random_word(rng, n, 8);
    const BraidWord w2 = random_word(rng, n, 8);
    if (crossing_matrix(concat(w1, w2)) !=
        crossing_matrix(w1) +
            apply_perm_to_matrix(permutation_of(w1).inverse(),
                                 crossing_matrix(w2)))
      return false;
  }
  return true;
}

bool pure_realization_round_trip() {
  Rng rng(1010);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.range(1, 6);
    const IntMatrix m = random_zero_diag_symmetric(rng, n, -3, 3);
    const BraidWord w = realize_pure(m);
    if (!permutation_of(w).is_identity()) return false;
    if (crossing_matrix(w) != m) return false;
  }
  return true;
}

bool generator_conjugation_of_pure_words() {
  Rng rng(1011);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.range(2, 5);
    const BraidWord w = random_pure_word(rng, n, 2);
    const int i = rng.range(1, n - 1);
    const int eps = rng.below(2) == 0 ? +1 : -1;
    const BraidWord a(n, {Letter{i, -eps}});
    if (crossing_matrix(conjugate(w, a)) !=
        apply_perm_to_matrix(transposition(n, i), crossing_matrix(w)))
      return false;
  }
  return true;
}

bool q_stabilization() {
  Rng rng(1012);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(1, 5);
    const BraidWord w = random_word(rng, n, 8);
    const int sign = rng.below(2) == 0 ? +1 : -1;
    if (q_determinant(stabilize(w, sign)) != q_determinant(w)) return false;
  }
  return true;
}

bool layered_multiplicativity() {
  Rng rng(1013);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w1 = random_pure_word(rng, rng.range(1, 4), 2);
    const BraidWord w2 = random_pure_word(rng, rng.range(1, 4), 2);
    if (purified_determinant(direct_sum(w1, w2)) !=
        purified_determinant(w1) * purified_determinant(w2))
      return false;
  }
  return true;
}

bool oracle_equivalence() {
  Rng rng(1014);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.range(1, 6);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    if (determinant(m) != naive_determinant(m)) return false;
    BigInt signed_det = determinant(m);
    if (n % 2 == 1) signed_det = -signed_det;
    if (characteristic_polynomial(m).evaluate(0) != signed_det) return false;
  }
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word(rng, rng.range(2, 5), 8);
    if (pure_power_sum(w) != direct_power_matrix(w)) return false;
  }
  return true;
}

bool rewriting_invariance() {
  Rng rng(1015);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = random_word(rng, rng.range(2, 5), 8);
    const BraidWord r = random_equivalent(w, rng.range(0, 25), rng.next());
    if (crossing_matrix(r) != crossing_matrix(w)) return false;
    if (!reports_agree(invariant_report(w), invariant_report(r))) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"golden crossing matrices of four short words", golden_crossing_matrices},
      {"golden permutation reindexing example", golden_reindexing_example},
      {"five-strand worked example (order, sum matrix, P)",
       worked_example_five_strands},
      {"half-twist closed form for 2..8 strands", half_twist_closed_form},
      {"P-pair of a third-order word and its cube", p_pair_example},
      {"Q values on a conjugate pair", q_values_on_conjugates},
      {"trace equality of P on 1000 products", trace_equality_of_p},
      {"conjugation invariance of P, PP, key on 500 pairs",
       conjugation_invariance},
      {"product decomposition on 500 pairs", product_decomposition},
      {"pure realization round-trip on 200 matrices",
       pure_realization_round_trip},
      {"generator conjugation on 200 pure words",
       generator_conjugation_of_pure_words},
      {"Q stabilization on 500 words", q_stabilization},
      {"layered multiplicativity on 200 pure pairs", layered_multiplicativity},
      {"oracle equivalence (determinant, power trace, charpoly)",
       oracle_equivalence},
      {"rewriting invariance on 500 words", rewriting_invariance},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::cout << "FAIL " << (i + 1) << "  " << criteria[i].first
                << "  (exception: " << e.what() << ")\n";
      ++failures;
      continue;
    }
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << "  "
              << criteria[i].first << '\n';
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL")
            << " (" << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria)\n";
  return failures;
}
