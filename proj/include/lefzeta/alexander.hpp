#pragma once

// Alexander polynomials of braid closures and their zeta-function side.
//
// The polynomial is computed from the reduced Burau matrix B of the braid as
// det(id - B) * (1 - t) / (1 - t^n), then normalized by a unit +-t^k so the
// constant term is nonzero and positive. The associated zeta function of the
// covering translation is (1/a_n) z^b1 Delta(1/z) / (1 - z), which reduces to
// Delta(z) / (Delta(0)(1 - z)) exactly when Delta is reciprocal.

#include <stdexcept>
#include <vector>

#include "lefzeta/braid.hpp"
#include "lefzeta/poly_matrix.hpp"
#include "lefzeta/zeta.hpp"

namespace lefzeta {

class AlexanderPoly {
  Poly p_;  // constant and leading coefficients nonzero; p(1) = +-1

 public:
  explicit AlexanderPoly(Poly p) : p_(std::move(p)) {
    if (p_.is_zero() || p_.constant().is_zero())
      throw std::invalid_argument("Alexander polynomial needs a nonzero constant term");
    const Rational at_one = p_(Rational(1));
    if (at_one != Rational(1) && at_one != Rational(-1))
      throw std::invalid_argument("Alexander polynomial must evaluate to +-1 at 1");
  }

  const Poly& poly() const { return p_; }
  int b1() const { return p_.degree(); }
};

inline AlexanderPoly alexander_from_braid(const BraidWord& b) {
  validate_braid(b);
  if (!closure_is_knot(b))
    throw std::invalid_argument("closure is a link, not a knot");

  const Matrix<LaurentPoly> burau = burau_reduced(b);
  const std::size_t size = burau.rows();
  Matrix<LaurentPoly> id_minus(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      id_minus(i, j) = -burau(i, j);
      if (i == j) id_minus(i, j) += LaurentPoly(1);
    }

  const LaurentPoly d = laurent_det(id_minus);
  if (d.is_zero())
    throw std::domain_error("vanishing Burau determinant");

  // (1 - t^n) / (1 - t) = 1 + t + ... + t^(n-1)
  std::vector<Rational> ones(static_cast<std::size_t>(b.strands), Rational(1));
  Poly delta = d.unit_part().divexact(Poly(std::move(ones)));
  if (delta.constant().is_negative()) delta = -delta;
  return AlexanderPoly(std::move(delta));
}

// Palindromic coefficient sequence: a_i = a_{n-i}.
inline bool is_reciprocal(const AlexanderPoly& d) {
  const Poly& p = d.poly();
  const std::size_t n = static_cast<std::size_t>(p.degree());
  for (std::size_t i = 0; 2 * i <= n; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

// (1/a_n) z^b1 Delta(1/z) / (1 - z), in canonical form; value at 0 is 1.
inline ZetaFunction zeta_from_alexander(const AlexanderPoly& d) {
  const Poly reversed = d.poly().reversed(static_cast<std::size_t>(d.b1()));
  const Poly num = reversed / d.poly().leading();
  return ZetaFunction(RationalFunction(num, Poly({Rational(1), Rational(-1)})));
}

// Lambda(t^k) = 1 - p_k, where p_k are the power sums of the roots of the
// monic normalization of Delta, via Newton's identities.
inline std::vector<Rational> knot_lefschetz_numbers(const AlexanderPoly& d, int n) {
  if (n <= 0) throw std::invalid_argument("sequence length must be positive");
  const Poly monic = d.poly().monic();
  const int deg = monic.degree();
  // e[i] = i-th elementary symmetric function of the roots.
  std::vector<Rational> e(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (int i = 0; i <= deg; ++i) {
    const Rational c = monic.coeff(static_cast<std::size_t>(deg - i));
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : -c;
  }
  std::vector<Rational> power(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int i = 1; i < k && i <= deg; ++i) {
      const Rational term = e[static_cast<std::size_t>(i)] *
                            power[static_cast<std::size_t>(k - i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (k <= deg) {
      const Rational tail = e[static_cast<std::size_t>(k)] * Rational(k);
      acc += (k % 2 == 1) ? tail : -tail;
    }
    power[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<Rational> lambda(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    lambda[static_cast<std::size_t>(k - 1)] =
        Rational(1) - power[static_cast<std::size_t>(k)];
  return lambda;
}

// Applies the boundary-form functional equation with the covering data of a
// knot: trivial boundary zeta, degree 1, and chi = 1 - b1. Holds exactly when
// Delta is reciprocal.
inline FunctionalEquationReport verify_knot_functional_equation(const AlexanderPoly& d) {
  return verify_functional_equation(zeta_from_alexander(d), ZetaFunction(),
                                    Rational(1), 1 - d.b1());
}

}  // namespace lefzeta
