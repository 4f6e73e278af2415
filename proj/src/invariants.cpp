#include "braidinv/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace braidinv {

std::string ConjugacyKey::canonical() const {
  std::string out = "(" + std::to_string(order) + "|";
  const auto& cs = charpoly.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += cs[i].get_str();
  }
  out += ')';
  return out;
}

bool operator<(const ConjugacyKey& a, const ConjugacyKey& b) {
  if (a.order != b.order) return a.order < b.order;
  return std::lexicographical_compare(
      a.charpoly.coeffs().begin(), a.charpoly.coeffs().end(),
      b.charpoly.coeffs().begin(), b.charpoly.coeffs().end());
}

BigInt purified_determinant(const BraidWord& w, std::uint64_t max_order) {
  return determinant(pure_power_sum(w, max_order));
}

PPair p_pair(const BraidWord& w, std::uint64_t max_order) {
  return PPair{perm_order(permutation_of(w), max_order),
               purified_determinant(w, max_order)};
}

BigInt q_determinant(const BraidWord& w) {
  IntMatrix m = crossing_matrix(w);
  m += IntMatrix::identity(m.dim());
  return determinant(m);
}

ConjugacyKey conjugacy_key(const BraidWord& w, std::uint64_t max_order) {
  return ConjugacyKey{perm_order(permutation_of(w), max_order),
                      characteristic_polynomial(pure_power_sum(w, max_order))};
}

InvariantReport invariant_report(const BraidWord& w, std::uint64_t max_order) {
  const Permutation rho = permutation_of(w);
  const std::uint64_t order = perm_order(rho, max_order);
  CrossingMatrix c = crossing_matrix(w);
  CrossingMatrix pure = c;
  {
    CrossingMatrix term = c;
    for (std::uint64_t k = 1; k < order; ++k) {
      term = apply_perm_to_matrix(rho, term);
      pure += term;
    }
  }
  const BigInt p = determinant(pure);
  return InvariantReport{
      w.strands(),
      render_word(w),
      rho,
      order,
      c,
      pure,
      p,
      PPair{order, p},
      q_determinant(w),
      characteristic_polynomial(pure),
      rank(pure),
      rho.is_identity(),
  };
}

bool reports_agree(const InvariantReport& a, const InvariantReport& b) {
  return a.n == b.n && a.permutation == b.permutation && a.order == b.order &&
         a.matrix == b.matrix && a.pure_matrix == b.pure_matrix && a.p == b.p &&
         a.pp == b.pp && a.q == b.q && a.charpoly == b.charpoly &&
         a.rank == b.rank && a.is_pure == b.is_pure;
}

namespace {

nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json poly_to_json(const IntPolynomial& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

void append_matrix(std::ostringstream& out, const IntMatrix& m) {
  std::size_t width = 1;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      width = std::max(width, m.at(i, j).get_str().size());
  for (int i = 0; i < m.dim(); ++i) {
    out << " ";
    for (int j = 0; j < m.dim(); ++j) {
      const std::string s = m.at(i, j).get_str();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
}

}  // namespace

nlohmann::ordered_json report_to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["word"] = r.word;
  j["permutation"] = r.permutation.one_based();
  j["order"] = r.order;
  j["matrix"] = matrix_to_json(r.matrix);
  j["pure_matrix"] = matrix_to_json(r.pure_matrix);
  j["p"] = r.p.get_str();
  j["pp"] = nlohmann::ordered_json::array({r.pp.order, r.pp.p_value.get_str()});
  j["q"] = r.q.get_str();
  j["charpoly"] = poly_to_json(r.charpoly);
  j["rank"] = r.rank;
  j["is_pure"] = r.is_pure;
  return j;
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "n            " << r.n << '\n';
  out << "word         \"" << r.word << "\"\n";
  out << "permutation ";
  for (int v : r.permutation.one_based()) out << ' ' << v;
  out << '\n';
  out << "order        " << r.order << '\n';
  out << "is_pure      " << (r.is_pure ? "true" : "false") << '\n';
  out << "crossing matrix:\n";
  append_matrix(out, r.matrix);
  out << "pure power matrix:\n";
  append_matrix(out, r.pure_matrix);
  out << "P            " << r.p.get_str() << '\n';
  out << "PP           (" << r.pp.order << ", " << r.pp.p_value.get_str() << ")\n";
  out << "Q            " << r.q.get_str() << '\n';
  out << "charpoly     " << r.charpoly.to_string() << '\n';
  out << "rank         " << r.rank << '\n';
  return out.str();
}

}  // namespace braidinv
