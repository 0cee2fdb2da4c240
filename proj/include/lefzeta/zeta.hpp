#pragma once

// Lefschetz numbers and zeta functions of graded actions.
//
// The zeta function of an action is carried both ways: as the alternating
// product of characteristic factors det(id - z A_i)^((-1)^(i+1)) and as the
// exponential of the Lefschetz-number generating series. Both are exact and
// the test suite holds them equal; the functional-equation verifiers compare
// canonical rational functions structurally.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lefzeta/graded_action.hpp"
#include "lefzeta/poly_matrix.hpp"
#include "lefzeta/rational_function.hpp"

namespace lefzeta {

struct ZetaFunction {
  RationalFunction value;
  // det(id - z A_i) together with its exponent +1/-1, when the factored
  // form is known. value equals the reduced product of these factors.
  std::optional<std::vector<std::pair<Poly, int>>> factors;

  ZetaFunction() : value(1) {}
  explicit ZetaFunction(RationalFunction v,
                        std::optional<std::vector<std::pair<Poly, int>>> f =
                            std::nullopt)
      : value(std::move(v)), factors(std::move(f)) {
    if (factors) {
      RationalFunction prod(1);
      for (const auto& [poly, exponent] : *factors) {
        if (exponent == 1)
          prod *= RationalFunction(poly);
        else if (exponent == -1)
          prod /= RationalFunction(poly);
        else
          throw std::invalid_argument("factor exponent must be +1 or -1");
      }
      if (prod != value)
        throw std::invalid_argument("zeta factors do not multiply to value");
    }
  }
};

struct FunctionalEquationReport {
  bool holds = false;
  RationalFunction lhs;
  RationalFunction rhs;
  Rational lambda;
  int chi = 0;
  std::optional<int> sign;  // closed case only; +1 or -1 when determined
};

// Alternating sum of traces of the k-th powers.
inline Rational lefschetz_number(const GradedAction& a, int k) {
  if (k <= 0) throw std::invalid_argument("iterate count must be positive");
  Rational acc(0);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(a.dim()); ++i) {
    const Rational t = a.map(i).pow(static_cast<unsigned>(k)).trace();
    acc += (i % 2 == 0) ? t : -t;
  }
  return acc;
}

inline ZetaFunction zeta_from_action(const GradedAction& a) {
  std::vector<std::pair<Poly, int>> factors;
  RationalFunction value(1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(a.dim()); ++i) {
    Poly f = poly_det(id_minus_z(a.map(i)));
    const int exponent = (i % 2 == 0) ? -1 : 1;
    if (exponent == 1)
      value *= RationalFunction(f);
    else
      value /= RationalFunction(f);
    factors.emplace_back(std::move(f), exponent);
  }
  return ZetaFunction(std::move(value), std::move(factors));
}

// Taylor coefficients of exp(sum_k Lambda(f^k) z^k / k), by the standard
// recurrence for the exponential of a series with zero constant term:
// m*e_m = sum_{j=1..m} Lambda_j e_{m-j}.
inline std::vector<Rational> zeta_series_from_action(const GradedAction& a, int n) {
  if (n <= 0) throw std::invalid_argument("series length must be positive");
  std::vector<Rational> lambda(static_cast<std::size_t>(n), Rational(0));
  for (int k = 1; k < n; ++k)
    lambda[static_cast<std::size_t>(k)] = lefschetz_number(a, k);
  std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
  e[0] = Rational(1);
  for (std::size_t m = 1; m < e.size(); ++m) {
    Rational acc(0);
    for (std::size_t j = 1; j <= m; ++j) acc += lambda[j] * e[m - j];
    e[m] = acc / Rational(static_cast<int>(m));
  }
  return e;
}

// Lambda(f^1)..Lambda(f^N), read off the logarithmic derivative:
// z (d/dz) log zeta = z (num' den - num den') / (num den).
inline std::vector<Rational> zeta_to_lefschetz_numbers(const ZetaFunction& zeta,
                                                       int n) {
  if (n <= 0) throw std::invalid_argument("series length must be positive");
  const RationalFunction& v = zeta.value;
  if (v.den().constant().is_zero() || !v.value_at_zero().is_one())
    throw std::domain_error("not a normalized zeta");
  RationalFunction logderiv(
      Poly::monomial(1) * (v.num().derivative() * v.den() - v.num() * v.den().derivative()),
      v.num() * v.den());
  std::vector<Rational> c = series_expand(logderiv, n + 1);
  return std::vector<Rational>(c.begin() + 1, c.end());
}

// Recovers the relative zeta from the total and restricted ones.
inline ZetaFunction zeta_multiplicativity(const ZetaFunction& total,
                                          const ZetaFunction& restricted) {
  if (restricted.value.is_zero())
    throw std::domain_error("division by zero rational function");
  return ZetaFunction(total.value / restricted.value);
}

// Boundary form: zeta_f(1/lz)^2 / zeta_b(1/lz)  ==  l^chi z^(2chi) zeta_f(z)^2 / zeta_b(z).
inline FunctionalEquationReport verify_functional_equation(
    const ZetaFunction& zeta_f, const ZetaFunction& zeta_boundary,
    const Rational& lambda, int chi) {
  if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
  if (zeta_boundary.value.is_zero())
    throw std::domain_error("boundary zeta must be nonzero");
  FunctionalEquationReport report;
  report.lambda = lambda;
  report.chi = chi;
  const RationalFunction f_sub = recip_substitute(zeta_f.value, lambda);
  const RationalFunction b_sub = recip_substitute(zeta_boundary.value, lambda);
  report.lhs = f_sub * f_sub / b_sub;
  report.rhs = RationalFunction(pow(lambda, chi)) * RationalFunction::z_power(2 * chi) *
               zeta_f.value * zeta_f.value / zeta_boundary.value;
  report.holds = report.lhs == report.rhs;
  return report;
}

// Closed form: zeta_f(1/lz) == +/- l^(chi/2) z^chi zeta_f(z). When l^(chi/2)
// is rational both signs are tried and the matching one recorded; otherwise
// the squared identity is tested and the sign left undetermined.
inline FunctionalEquationReport verify_closed_functional_equation(
    const ZetaFunction& zeta_f, const Rational& lambda, int chi) {
  if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
  FunctionalEquationReport report;
  report.lambda = lambda;
  report.chi = chi;

  std::optional<Rational> half_power;
  if (chi % 2 == 0) {
    half_power = pow(lambda, chi / 2);
  } else if (auto root = sqrt_exact(lambda)) {
    half_power = pow(*root, chi);
  }

  const RationalFunction substituted = recip_substitute(zeta_f.value, lambda);
  if (half_power) {
    const RationalFunction base = RationalFunction(*half_power) *
                                  RationalFunction::z_power(chi) * zeta_f.value;
    report.lhs = substituted;
    if (substituted == base) {
      report.holds = true;
      report.sign = 1;
      report.rhs = base;
    } else if (substituted == -base) {
      report.holds = true;
      report.sign = -1;
      report.rhs = -base;
    } else {
      report.rhs = base;
    }
    return report;
  }

  // lambda^(chi/2) is irrational: compare squares.
  report.lhs = substituted * substituted;
  report.rhs = RationalFunction(pow(lambda, chi)) * RationalFunction::z_power(2 * chi) *
               zeta_f.value * zeta_f.value;
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace lefzeta
