#pragma once

// Laurent polynomials over the rationals: a dense coefficient run together
// with its lowest exponent, which may be negative. Stored so that the first
// and last coefficients are nonzero (zero has low = 0 and no coefficients).

#include <ostream>
#include <stdexcept>
#include <utility>

#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"

namespace lefzeta {

class LaurentPoly {
  int low_ = 0;
  Poly p_;  // value = z^low_ * p_, with p_.constant() != 0 unless zero

  void normalize() {
    if (p_.is_zero()) {
      low_ = 0;
      return;
    }
    std::size_t v = 0;
    while (p_.coeff(v).is_zero()) ++v;
    if (v > 0) {
      std::vector<Rational> c(p_.coefficients().begin() + static_cast<long>(v),
                              p_.coefficients().end());
      p_ = Poly(std::move(c));
      low_ += static_cast<int>(v);
    }
  }

 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) : p_(c) {}
  LaurentPoly(int c) : p_(Rational(c)) {}
  LaurentPoly(const Poly& p) : p_(p) { normalize(); }
  LaurentPoly(int low, Poly p) : low_(low), p_(std::move(p)) { normalize(); }

  static LaurentPoly monomial(int k, const Rational& c = Rational(1)) {
    return LaurentPoly(k, Poly(c));
  }

  bool is_zero() const { return p_.is_zero(); }
  bool is_one() const { return low_ == 0 && p_.is_one(); }
  int low() const { return low_; }
  int high() const { return low_ + p_.degree(); }

  Rational coeff(int e) const {
    if (e < low_) return Rational(0);
    return p_.coeff(static_cast<std::size_t>(e - low_));
  }

  // The unit-free part: p with p(0) != 0, so that *this = z^low * p.
  const Poly& unit_part() const { return p_; }

  LaurentPoly shifted(int k) const {
    if (is_zero()) return {};
    return LaurentPoly(low_ + k, p_);
  }

  // Requires no negative exponents.
  Poly as_poly() const {
    if (is_zero()) return {};
    if (low_ < 0) throw std::domain_error("Laurent polynomial has negative exponents");
    return p_ * Poly::monomial(static_cast<std::size_t>(low_));
  }

  LaurentPoly operator-() const { return LaurentPoly(low_, -p_); }

  LaurentPoly operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const int lo = std::min(low_, o.low_);
    Poly a = p_ * Poly::monomial(static_cast<std::size_t>(low_ - lo));
    Poly b = o.p_ * Poly::monomial(static_cast<std::size_t>(o.low_ - lo));
    return LaurentPoly(lo, a + b);
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    return LaurentPoly(low_ + o.low_, p_ * o.p_);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && p_ == o.p_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& l) {
  if (l.is_zero()) return os << "0";
  return os << "z^(" << l.low() << ")*[" << l.unit_part() << "]";
}

}  // namespace lefzeta
