#pragma once

// Recovers Laplace terms of C(W, x) symbolically in the edge length l and the
// cant a by evaluating at several parameter points, the x-part being x_r for
// row r <= d. Shared by the unit tests and the acceptance binary.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isocanted/geometry.hpp"

namespace oracle {

using namespace isocanted;

inline std::vector<Rational> term_constants(int d, const Rational& ell, const Rational& a,
                                            const VertexLabel& w, const IndexSet& rows) {
  const TropMatrix c = isocanted_vni(IsocantedSpec(d, ell, a));
  const RationalPoint origin{std::vector<Rational>(static_cast<std::size_t>(d))};
  const TropMatrix m = generator_matrix(c, w, origin);
  IndexSet cols;
  for (int k = 1; k <= w.length() + 1; ++k) cols.push_back(static_cast<std::size_t>(k));
  std::vector<Rational> out;
  for (const TropScalar& t : laplace_terms(m, rows, cols, cols.back())) out.push_back(t.value());
  return out;
}

inline std::string render_term(int d, std::size_t row, const Rational& l_coef,
                               const Rational& a_coef, const Rational& rest) {
  std::string out;
  if (row <= static_cast<std::size_t>(d)) out += "x" + std::to_string(row);
  auto part = [&out](const Rational& coef, const std::string& sym) {
    if (coef == 0) return;
    out += coef > 0 ? "+" : "-";
    const Rational mag = abs(coef);
    if (mag != 1 || sym.empty()) out += to_string(mag);
    out += sym;
  };
  part(l_coef, "l");
  part(a_coef, "a");
  part(rest, "");
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out.empty() ? "0" : out;
}

/// Throws std::logic_error when a term is not affine in (l, a).
inline std::multiset<std::string> symbolic_terms(int d, const VertexLabel& w,
                                                 const IndexSet& rows) {
  const auto at51 = term_constants(d, 5, 1, w, rows);
  const auto at71 = term_constants(d, 7, 1, w, rows);
  const auto at52 = term_constants(d, 5, 2, w, rows);
  const auto check = term_constants(d, 11, 3, w, rows);
  std::multiset<std::string> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational l_coef = (at71[i] - at51[i]) / 2;
    const Rational a_coef = at52[i] - at51[i];
    const Rational rest = at51[i] - 5 * l_coef - a_coef;
    if (check[i] != 11 * l_coef + 3 * a_coef + rest) {
      throw std::logic_error("Laplace term is not affine in (l, a)");
    }
    out.insert(render_term(d, rows[i], l_coef, a_coef, rest));
  }
  return out;
}

}  // namespace oracle
