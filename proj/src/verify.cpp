#include "braidinv/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "braidinv/crossing.hpp"
#include "braidinv/invariants.hpp"
#include "braidinv/oracles.hpp"

namespace braidinv {

std::uint64_t Rng::below(std::uint64_t bound) {
  // plain reduction: bias is irrelevant for test generation, while
  // byte-stable output across standard libraries is required
  return engine_() % bound;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

BraidWord random_word(Rng& rng, int n, int max_len) {
  if (n < 2) return BraidWord(n);
  const int len = rng.range(0, max_len);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (int i = 0; i < len; ++i)
    letters.push_back(Letter{rng.range(1, n - 1), rng.below(2) == 0 ? +1 : -1});
  return BraidWord(n, std::move(letters));
}

IntMatrix random_zero_diag_symmetric(Rng& rng, int n, int lo, int hi) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = rng.range(lo, hi);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

IntMatrix random_matrix(Rng& rng, int n, int lo, int hi) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.range(lo, hi);
  return m;
}

BraidWord random_pure_word(Rng& rng, int n, int max_entry) {
  return realize_pure(random_zero_diag_symmetric(rng, n, -max_entry, max_entry));
}

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(images[i], images[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(images));
}

// ---- property suite -------------------------------------------------

namespace {

using CheckFn = std::function<std::optional<std::string>(int, Rng&, const VerifyOptions&)>;

struct Property {
  std::string name;
  int fixed_trials;  // 0 = fully randomized, use the requested count
  CheckFn check;
};

std::string show(const BraidWord& w) { return '"' + render_word(w) + '"'; }

std::string show(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j).get_str();
    }
  }
  return out + "]";
}

int word_strands(Rng& rng, const VerifyOptions& o) {
  return rng.range(2, std::max(2, o.n));
}

std::vector<Property> make_properties() {
  std::vector<Property> props;
  const auto add = [&props](std::string name, int fixed, CheckFn fn) {
    props.push_back(Property{std::move(name), fixed, std::move(fn)});
  };

  add("parse/render round-trip", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        if (parse_word(render_word(w), w.strands()) != w)
          return "w=" + show(w);
        return std::nullopt;
      });

  add("permutation of product and inverse", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = word_strands(rng, o);
        const BraidWord w1 = random_word(rng, n, o.max_len);
        const BraidWord w2 = random_word(rng, n, o.max_len);
        if (permutation_of(concat(w1, w2)) !=
            permutation_of(w1).then(permutation_of(w2)))
          return "w1=" + show(w1) + " w2=" + show(w2);
        if (permutation_of(inverse(w1)) != permutation_of(w1).inverse())
          return "w=" + show(w1);
        return std::nullopt;
      });

  add("rewriting preserves the permutation", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        const BraidWord r = random_equivalent(w, rng.range(0, 20), rng.next());
        if (permutation_of(r) != permutation_of(w))
          return "w=" + show(w) + " rewritten=" + show(r);
        return std::nullopt;
      });

  add("permutation order", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, o.n));
        const Permutation p = random_permutation(rng, n);
        const std::uint64_t r = perm_order(p, o.max_order);
        if (!p.power(r).is_identity()) return "order not annihilating, n=" + std::to_string(n);
        for (std::uint64_t l = 1; l < r; ++l)
          if (p.power(l).is_identity())
            return "smaller power is identity, n=" + std::to_string(n);
        BigInt factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        if (factorial % BigInt(static_cast<unsigned long>(r)) != 0)
          return "order does not divide n!";
        return std::nullopt;
      });

  add("direct sum keeps layers disjoint", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w1 = random_word(rng, rng.range(1, std::max(1, o.n)), o.max_len);
        const BraidWord w2 = random_word(rng, rng.range(1, std::max(1, o.n)), o.max_len);
        const BraidWord sum = direct_sum(w1, w2);
        if (sum.strands() != w1.strands() + w2.strands())
          return "w1=" + show(w1) + " w2=" + show(w2);
        for (const Letter& l : sum.letters())
          if (l.index == w1.strands())
            return "w1=" + show(w1) + " w2=" + show(w2);
        return std::nullopt;
      });

  add("crossing matrix of a product", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = word_strands(rng, o);
        const BraidWord w1 = random_word(rng, n, o.max_len);
        const BraidWord w2 = random_word(rng, n, o.max_len);
        // the strand entering the second factor at position a is the
        // first factor's strand rho1^{-1}(a), so the second factor's
        // entries are relabeled by the inverse permutation
        const CrossingMatrix expected =
            crossing_matrix(w1) +
            apply_perm_to_matrix(permutation_of(w1).inverse(),
                                 crossing_matrix(w2));
        if (crossing_matrix(concat(w1, w2)) != expected)
          return "w1=" + show(w1) + " w2=" + show(w2);
        return std::nullopt;
      });

  add("rewriting preserves the crossing matrix", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        const BraidWord r = random_equivalent(w, rng.range(0, 20), rng.next());
        if (crossing_matrix(r) != crossing_matrix(w))
          return "w=" + show(w) + " rewritten=" + show(r);
        return std::nullopt;
      });

  add("pure words have symmetric crossing matrices", 0,
      [](int t, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        BraidWord w(1);
        if (t % 2 == 0) {
          const BraidWord v = random_word(rng, word_strands(rng, o), o.max_len);
          w = concat(v, inverse(v));
        } else {
          w = random_pure_word(rng, rng.range(1, std::max(1, o.n)), 2);
        }
        if (!permutation_of(w).is_identity()) return "not pure: " + show(w);
        if (!crossing_matrix(w).is_symmetric()) return "w=" + show(w);
        return std::nullopt;
      });

  add("pure realization round-trip", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::min(std::max(1, o.n), 6));
        const IntMatrix m = random_zero_diag_symmetric(rng, n, -3, 3);
        const BraidWord w = realize_pure(m);
        if (!permutation_of(w).is_identity()) return "m=" + show(m);
        if (crossing_matrix(w) != m) return "m=" + show(m);
        return std::nullopt;
      });

  add("generator conjugation of a pure word", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(2, std::max(2, o.n));
        const BraidWord w = random_pure_word(rng, n, 2);
        const int i = rng.range(1, n - 1);
        const int eps = rng.below(2) == 0 ? +1 : -1;
        // sigma_i^eps w sigma_i^{-eps} is conjugation by a = sigma_i^{-eps}
        const BraidWord a(n, {Letter{i, -eps}});
        const CrossingMatrix got = crossing_matrix(conjugate(w, a));
        const CrossingMatrix expected =
            apply_perm_to_matrix(transposition(n, i), crossing_matrix(w));
        if (got != expected)
          return "w=" + show(w) + " i=" + std::to_string(i) +
                 " eps=" + std::to_string(eps);
        return std::nullopt;
      });

  add("pure power sum matches direct tracing", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        if (pure_power_sum(w, o.max_order) != direct_power_matrix(w))
          return "w=" + show(w);
        return std::nullopt;
      });

  add("inverse cancels the crossing matrix", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        const BraidWord prod = concat(w, inverse(w));
        if (!crossing_matrix(prod).is_zero()) return "w=" + show(w);
        if (!permutation_of(prod).is_identity()) return "w=" + show(w);
        return std::nullopt;
      });

  add("determinant is similarity-invariant", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, o.n));
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        const Permutation p = random_permutation(rng, n);
        if (determinant(apply_perm_to_matrix(p, m)) != determinant(m))
          return "m=" + show(m);
        return std::nullopt;
      });

  add("charpoly is similarity-invariant", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, o.n));
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        const Permutation p = random_permutation(rng, n);
        if (characteristic_polynomial(apply_perm_to_matrix(p, m)) !=
            characteristic_polynomial(m))
          return "m=" + show(m);
        return std::nullopt;
      });

  add("charpoly at zero matches the determinant", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, o.n));
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        BigInt expected = determinant(m);
        if (n % 2 == 1) expected = -expected;
        if (characteristic_polynomial(m).evaluate(0) != expected)
          return "m=" + show(m);
        return std::nullopt;
      });

  add("determinant matches the cofactor oracle", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::min(std::max(1, o.n), 6));
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        if (determinant(m) != naive_determinant(m)) return "m=" + show(m);
        return std::nullopt;
      });

  add("similarity witness always verifies", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, o.n));
        const IntMatrix m = random_matrix(rng, n, -9, 9);
        const Permutation p = random_permutation(rng, n);
        if (!similarity_witness_check(p, m)) return "m=" + show(m);
        return std::nullopt;
      });

  add("P of a product is trace-equal", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = rng.range(2, std::max(2, std::min(o.n, 5)));
        const BraidWord w1 = random_word(rng, n, std::min(o.max_len, 8));
        const BraidWord w2 = random_word(rng, n, std::min(o.max_len, 8));
        if (purified_determinant(concat(w1, w2), o.max_order) !=
            purified_determinant(concat(w2, w1), o.max_order))
          return "w1=" + show(w1) + " w2=" + show(w2);
        return std::nullopt;
      });

  add("P, PP and the key are conjugation-invariant", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = word_strands(rng, o);
        const BraidWord w = random_word(rng, n, o.max_len);
        const BraidWord a = random_word(rng, n, o.max_len);
        const BraidWord c = conjugate(w, a);
        if (purified_determinant(w, o.max_order) !=
            purified_determinant(c, o.max_order))
          return "P differs: w=" + show(w) + " a=" + show(a);
        if (!(p_pair(w, o.max_order) == p_pair(c, o.max_order)))
          return "PP differs: w=" + show(w) + " a=" + show(a);
        if (!(conjugacy_key(w, o.max_order) == conjugacy_key(c, o.max_order)))
          return "key differs: w=" + show(w) + " a=" + show(a);
        return std::nullopt;
      });

  add("rewriting preserves the full report", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        const BraidWord r = random_equivalent(w, rng.range(0, 20), rng.next());
        if (!reports_agree(invariant_report(w, o.max_order),
                           invariant_report(r, o.max_order)))
          return "w=" + show(w) + " rewritten=" + show(r);
        return std::nullopt;
      });

  add("half-twist closed form", 7,
      [](int t, Rng&, const VerifyOptions& o) -> std::optional<std::string> {
        const int n = 2 + (t % 7);
        const BraidWord delta = fundamental_braid(n);
        BigInt expected = n - 1;
        if (n % 2 == 0) expected = -expected;  // -(-1)^n (n-1)
        if (purified_determinant(delta, o.max_order) != expected)
          return "n=" + std::to_string(n);
        IntMatrix ones_off(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j) ones_off.at(i, j) = 1;
        if (pure_power_sum(delta, o.max_order) != ones_off)
          return "sum matrix differs, n=" + std::to_string(n);
        return std::nullopt;
      });

  add("P is multiplicative on layered pure words", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const int cap = std::max(1, std::min(o.n, 4));
        const BraidWord w1 = random_pure_word(rng, rng.range(1, cap), 2);
        const BraidWord w2 = random_pure_word(rng, rng.range(1, cap), 2);
        if (purified_determinant(direct_sum(w1, w2), o.max_order) !=
            purified_determinant(w1, o.max_order) *
                purified_determinant(w2, o.max_order))
          return "w1=" + show(w1) + " w2=" + show(w2);
        return std::nullopt;
      });

  add("Q survives stabilization", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, rng.range(1, std::max(1, o.n)), o.max_len);
        const int sign = rng.below(2) == 0 ? +1 : -1;
        if (q_determinant(stabilize(w, sign)) != q_determinant(w))
          return "w=" + show(w) + " sign=" + std::to_string(sign);
        return std::nullopt;
      });

  add("Q separates a conjugate pair", 1,
      [](int, Rng&, const VerifyOptions&) -> std::optional<std::string> {
        const BraidWord w1 = parse_word("-2 -2 -2 1", 3);
        const BraidWord w2 = parse_word("-2 -2 1 -2", 3);
        // same braid up to conjugation by sigma_2^{-1}
        if (crossing_matrix(conjugate(w1, parse_word("-2", 3))) !=
            crossing_matrix(w2))
          return std::string("pair is not conjugate");
        if (q_determinant(w1) != -1) return std::string("Q(w1) != -1");
        if (q_determinant(w2) != 1) return std::string("Q(w2) != 1");
        return std::nullopt;
      });

  add("pure power matrix is symmetric", 0,
      [](int, Rng& rng, const VerifyOptions& o) -> std::optional<std::string> {
        const BraidWord w = random_word(rng, word_strands(rng, o), o.max_len);
        const CrossingMatrix m = pure_power_sum(w, o.max_order);
        if (!m.is_symmetric() || !m.has_zero_diagonal()) return "w=" + show(w);
        return std::nullopt;
      });

  return props;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const VerifyOptions& opts) {
  std::vector<PropertyResult> results;
  const std::vector<Property> props = make_properties();
  for (std::size_t idx = 0; idx < props.size(); ++idx) {
    const Property& prop = props[idx];
    Rng rng(opts.seed * 0x9E3779B97F4A7C15ull + idx);
    const int trials = prop.fixed_trials > 0
                           ? std::min(opts.trials, prop.fixed_trials)
                           : opts.trials;
    PropertyResult row{prop.name, trials, 0, {}};
    for (int t = 0; t < trials; ++t) {
      if (auto fail = prop.check(t, rng, opts)) {
        ++row.failures;
        if (row.first_failure.empty()) row.first_failure = *fail;
      }
    }
    results.push_back(std::move(row));
  }
  return results;
}

std::string property_results_to_text(const std::vector<PropertyResult>& results) {
  std::size_t name_width = 8;
  for (const PropertyResult& r : results)
    name_width = std::max(name_width, r.name.size());

  std::ostringstream out;
  long total_checks = 0, total_failures = 0;
  for (const PropertyResult& r : results) {
    out << r.name << std::string(name_width - r.name.size(), ' ') << "  trials="
        << r.trials << "  failures=" << r.failures << '\n';
    if (r.failures > 0) out << "    counterexample: " << r.first_failure << '\n';
    total_checks += r.trials;
    total_failures += r.failures;
  }
  out << (total_failures == 0 ? "RESULT: PASS" : "RESULT: FAIL") << " ("
      << results.size() << " properties, " << total_checks << " checks, "
      << total_failures << " failures)\n";
  return out.str();
}

}  // namespace braidinv
