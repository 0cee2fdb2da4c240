#pragma once

// Duality pairings: endomorphisms f, g of paired spaces with
// <f(x), g(y)> = lambda <x, y>, realized by Gram matrices. Provides the
// adjoint construction g = lambda P^-1 (f^T)^-1 P and the two determinant
// identities it satisfies, plus a fixture builder for closed middle-degree
// pairings.

#include <stdexcept>

#include "lefzeta/graded_action.hpp"
#include "lefzeta/matrix.hpp"
#include "lefzeta/poly_matrix.hpp"
#include "lefzeta/zeta.hpp"

namespace lefzeta {

struct PairingTriple {
  RatMatrix f;
  RatMatrix g;
  RatMatrix P;  // Gram matrix of the pairing <x,y> = x^T P y
  Rational lambda;

  std::size_t n() const { return f.rows(); }

  bool shapes_ok() const {
    return f.is_square() && g.is_square() && P.is_square() &&
           f.rows() == g.rows() && f.rows() == P.rows();
  }

  // det P != 0 and f^T P g = lambda P.
  bool is_valid() const {
    if (!shapes_ok() || lambda.is_zero()) return false;
    if (det(P).is_zero()) return false;
    return f.transpose() * P * g == P * lambda;
  }
};

inline RatMatrix pairing_adjoint(const RatMatrix& f, const RatMatrix& p,
                                 const Rational& lambda) {
  if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
  f.require_square();
  p.require_square();
  if (f.rows() != p.rows()) throw std::invalid_argument("matrix shape mismatch");
  auto p_inv = inverse(p);
  if (!p_inv) throw std::domain_error("degenerate pairing");
  auto ft_inv = inverse(f.transpose());
  if (!ft_inv) throw std::domain_error("f must be invertible when lambda is nonzero");
  return (*p_inv * *ft_inv * p) * lambda;
}

// (det f)(det g) = lambda^n
inline bool check_det_product(const PairingTriple& t) {
  return det(t.f) * det(t.g) == pow(t.lambda, static_cast<int>(t.n()));
}

// det(id - g t) det f = (-1)^n lambda^n t^n det(id - f / (lambda t)),
// compared after clearing t^n:  t^n det(id - f/(lambda t)) = det(t id - f/lambda).
inline bool check_char_identity(const PairingTriple& t) {
  const int n = static_cast<int>(t.n());
  const Poly lhs = poly_det(id_minus_z(t.g)) * det(t.f);
  Poly rhs = poly_det(z_id_minus(t.f * t.lambda.reciprocal())) * pow(t.lambda, n);
  if (n % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

// Wraps a middle-degree lambda-isometry A (A^T J A = lambda J, det J != 0)
// into the 2-dimensional graded action (id, A, [lambda]).
inline GradedAction build_closed_duality_action(const RatMatrix& a,
                                                const RatMatrix& j,
                                                const Rational& lambda) {
  a.require_square();
  j.require_square();
  if (a.rows() != j.rows()) throw std::invalid_argument("matrix shape mismatch");
  if (det(j).is_zero()) throw std::domain_error("degenerate pairing");
  if (a.transpose() * j * a != j * lambda)
    throw std::domain_error("not a lambda-isometry");
  RatMatrix top(1, 1);
  top(0, 0) = lambda;
  return GradedAction({RatMatrix::identity(1), a, top});
}

}  // namespace lefzeta
