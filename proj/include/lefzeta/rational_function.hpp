#pragma once

// Reduced quotients of rational polynomials. Canonical form: numerator and
// denominator coprime, denominator monic. Equality of canonical forms is the
// equality test used by every functional-equation check.

#include <ostream>
#include <stdexcept>
#include <vector>

#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"

namespace lefzeta {

class RationalFunction {
  Poly num_;
  Poly den_;  // monic, coprime with num_

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = gcd(num_, den_);
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
    const Rational lead = den_.leading();
    num_ = num_ / lead;
    den_ = den_ / lead;
  }

 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(int c) : num_(Rational(c)), den_(1) {}
  RationalFunction(Poly num, Poly den = Poly(1))
      : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  // z^k for any integer k, negative exponents going to the denominator.
  static RationalFunction z_power(int k) {
    if (k >= 0) return RationalFunction(Poly::monomial(static_cast<std::size_t>(k)));
    return RationalFunction(Poly(1), Poly::monomial(static_cast<std::size_t>(-k)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Evaluation at z = 0; requires the function to be regular there.
  Rational value_at_zero() const {
    if (den_.constant().is_zero()) throw std::domain_error("pole at origin");
    return num_.constant() / den_.constant();
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator-(const RationalFunction& o) const {
    return *this + (-o);
  }
  RationalFunction operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
  }

  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
};

inline RationalFunction pow(const RationalFunction& base, int k) {
  if (k < 0) return pow(RationalFunction(1) / base, -k);
  RationalFunction acc(1), b = base;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

// R(1/(lambda z)): coefficient reversal of numerator and denominator with
// lambda-power weights, then denominator clearing back to canonical form.
inline RationalFunction recip_substitute(const RationalFunction& r,
                                         const Rational& lambda) {
  if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
  const std::size_t d =
      static_cast<std::size_t>(std::max({r.num().degree(), r.den().degree(), 0}));
  auto weighted_reversal = [&](const Poly& p) {
    if (p.is_zero()) return Poly();
    std::vector<Rational> v(d + 1, Rational(0));
    Rational w(1);  // lambda^{-i}
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
      v[d - i] = p.coeff(i) * w;
      w /= lambda;
    }
    return Poly(std::move(v));
  };
  return RationalFunction(weighted_reversal(r.num()), weighted_reversal(r.den()));
}

// First N Taylor coefficients at the origin, exact.
inline std::vector<Rational> series_expand(const RationalFunction& r, int n) {
  if (n <= 0) throw std::invalid_argument("series length must be positive");
  const Rational d0 = r.den().constant();
  if (d0.is_zero()) throw std::domain_error("pole at origin");
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    Rational acc = r.num().coeff(k);
    for (std::size_t j = 1; j <= k; ++j)
      acc -= r.den().coeff(j) * c[k - j];
    c[k] = acc / d0;
  }
  return c;
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  return os << "[" << r.num() << "] / [" << r.den() << "]";
}

}  // namespace lefzeta
