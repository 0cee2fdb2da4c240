#pragma once

// Dense univariate polynomials over a field. The coefficient at index i is
// the coefficient of z^i; the highest-index coefficient is nonzero, and the
// zero polynomial is the empty sequence (degree -1).

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lefzeta/rational.hpp"

namespace lefzeta {

template <class T>
class Polynomial {
  std::vector<T> c_;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

 public:
  Polynomial() = default;
  Polynomial(const T& c0) : c_{c0} { trim(); }
  Polynomial(int c0) : Polynomial(T(c0)) {}
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t k, const T& c = T(1)) {
    if (c.is_zero()) return {};
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T constant() const { return coeff(0); }
  T leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<T> v(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
  }

  Polynomial operator*(const T& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
  }
  Polynomial operator/(const T& s) const { return *this * (T(1) / s); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

  // Euclidean division: returns (quotient, remainder) with
  // *this = q * divisor + r and deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q, r = *this;
    const T lead = divisor.leading();
    const int d = divisor.degree();
    while (!r.is_zero() && r.degree() >= d) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d);
      const T factor = r.leading() / lead;
      q += monomial(shift, factor);
      r -= divisor * monomial(shift, factor);
    }
    return {q, r};
  }

  Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
  Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }

  // Exact quotient; throws if the division leaves a remainder.
  Polynomial divexact(const Polynomial& o) const {
    auto [q, r] = divmod(o);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this / leading();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(v));
  }

  // z^d * p(1/z) for d >= deg p: coefficient reversal padded to degree d.
  Polynomial reversed(std::size_t d) const {
    if (static_cast<int>(d) < degree())
      throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<T> v(d + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[d - i] = c_[i];
    return Polynomial(std::move(v));
  }
};

template <class T>
Polynomial<T> operator*(const T& s, const Polynomial<T>& p) {
  return p * s;
}

// Monic Euclidean gcd; gcd(0, 0) = 0.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    const T c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os;
}

using Poly = Polynomial<Rational>;

}  // namespace lefzeta
