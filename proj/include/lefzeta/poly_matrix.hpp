#pragma once

// Determinants of matrices with polynomial and Laurent-polynomial entries.
// Small sizes go through cofactor expansion; larger ones use fraction-free
// Bareiss elimination, whose divisions stay exact in the polynomial ring.

#include <stdexcept>

#include "lefzeta/laurent.hpp"
#include "lefzeta/matrix.hpp"
#include "lefzeta/polynomial.hpp"

namespace lefzeta {

using PolyMatrix = Matrix<Poly>;

namespace detail {

inline Poly bareiss_det(PolyMatrix a) {
  const std::size_t n = a.rows();
  bool negate = false;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divexact(prev);
      a(i, k) = Poly();
    }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace detail

inline Poly poly_det(const PolyMatrix& m) {
  m.require_square();
  if (m.rows() <= 4) return cofactor_det(m);
  return detail::bareiss_det(m);
}

// id - z*A
inline PolyMatrix id_minus_z(const RatMatrix& a) {
  a.require_square();
  const std::size_t n = a.rows();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Poly::monomial(1, -a(i, j));
      if (i == j) m(i, j) += Poly(1);
    }
  return m;
}

// z*id - A
inline PolyMatrix z_id_minus(const RatMatrix& a) {
  a.require_square();
  const std::size_t n = a.rows();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Poly(-a(i, j));
      if (i == j) m(i, j) += Poly::monomial(1);
    }
  return m;
}

// Determinant of a Laurent-polynomial matrix: each row is shifted into the
// plain polynomial ring, and the accumulated monomial factor is restored at
// the end (scaling row i by z^s scales the determinant by z^s).
inline LaurentPoly laurent_det(const Matrix<LaurentPoly>& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  PolyMatrix p(n, n);
  int total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_low = 0;
    bool seen = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      row_low = seen ? std::min(row_low, m(i, j).low()) : m(i, j).low();
      seen = true;
    }
    if (!seen) return {};  // zero row
    total_shift += row_low;
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = m(i, j).shifted(-row_low).as_poly();
  }
  return LaurentPoly(total_shift, poly_det(p));
}

}  // namespace lefzeta
