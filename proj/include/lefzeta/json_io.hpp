#pragma once

// JSON wire formats. Scalars serialize as exact "p/q" strings (plain "p" for
// integers), polynomials as coefficient arrays lowest-degree-first, Laurent
// polynomials as {low, coefficients}. Field order follows the formats
// documented in the README, so output is byte-stable.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lefzeta/alexander.hpp"
#include "lefzeta/duality.hpp"
#include "lefzeta/graded_action.hpp"
#include "lefzeta/laurent.hpp"
#include "lefzeta/matrix.hpp"
#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"
#include "lefzeta/rational_function.hpp"
#include "lefzeta/zeta.hpp"

namespace lefzeta::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

inline json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& entry : j) c.push_back(rational_from_json(entry));
  return Poly(std::move(c));
}

inline json to_json(const LaurentPoly& l) {
  json coeffs = json::array();
  for (int e = l.low(); e <= l.high() && !l.is_zero(); ++e)
    coeffs.push_back(to_json(l.coeff(e)));
  return json{{"low", l.low()}, {"coefficients", std::move(coeffs)}};
}

inline LaurentPoly laurent_from_json(const json& j) {
  return LaurentPoly(j.at("low").get<int>(), poly_from_json(j.at("coefficients")));
}

inline json to_json(const RationalFunction& r) {
  return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline RationalFunction ratfunc_from_json(const json& j) {
  return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix as array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(row.at(c));
  }
  return m;
}

inline json to_json(const GradedAction& a) {
  json maps = json::array();
  for (int i = 0; i <= a.dim(); ++i) {
    const std::size_t degree = static_cast<std::size_t>(i);
    if (a.betti(degree) == 0) continue;
    maps.push_back(json{{"degree", i}, {"matrix", to_json(a.map(degree))}});
  }
  return json{{"dim", a.dim()}, {"maps", std::move(maps)}};
}

inline GradedAction action_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 0) throw std::invalid_argument("dim must be nonnegative");
  std::vector<RatMatrix> maps(static_cast<std::size_t>(dim) + 1);
  std::vector<bool> seen(maps.size(), false);
  for (const json& entry : j.at("maps")) {
    const int degree = entry.at("degree").get<int>();
    if (degree < 0 || degree > dim)
      throw std::invalid_argument("map degree outside [0, dim]");
    if (seen[static_cast<std::size_t>(degree)])
      throw std::invalid_argument("duplicate map degree");
    seen[static_cast<std::size_t>(degree)] = true;
    RatMatrix m = matrix_from_json(entry.at("matrix"));
    m.require_square();
    maps[static_cast<std::size_t>(degree)] = std::move(m);
  }
  return GradedAction(std::move(maps));
}

inline json to_json(const ZetaFunction& z) { return to_json(z.value); }

inline ZetaFunction zeta_from_json(const json& j) {
  return ZetaFunction(ratfunc_from_json(j));
}

inline json to_json(const PairingTriple& t) {
  return json{{"f", to_json(t.f)},
              {"g", to_json(t.g)},
              {"P", to_json(t.P)},
              {"lambda", to_json(t.lambda)}};
}

inline PairingTriple triple_from_json(const json& j) {
  PairingTriple t{matrix_from_json(j.at("f")), matrix_from_json(j.at("g")),
                  matrix_from_json(j.at("P")), rational_from_json(j.at("lambda"))};
  if (!t.shapes_ok())
    throw std::invalid_argument("pairing triple matrices must be square and same size");
  return t;
}

inline json to_json(const AlexanderPoly& d) {
  return json{{"coefficients", to_json(d.poly())}, {"b1", d.b1()}};
}

inline AlexanderPoly alexander_from_json(const json& j) {
  AlexanderPoly d(poly_from_json(j.at("coefficients")));
  if (j.contains("b1") && j.at("b1").get<int>() != d.b1())
    throw std::invalid_argument("b1 does not match polynomial degree");
  return d;
}

inline json to_json(const FunctionalEquationReport& r) {
  json j{{"holds", r.holds},
         {"lhs", to_json(r.lhs)},
         {"rhs", to_json(r.rhs)},
         {"lambda", to_json(r.lambda)},
         {"chi", r.chi}};
  if (r.sign) j["sign"] = *r.sign;
  return j;
}

inline json series_to_json(const std::vector<Rational>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

}  // namespace lefzeta::io
