#pragma once

// Exact rational scalar over arbitrary-precision integers. Always stored in
// lowest terms with a positive denominator; zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lefzeta {

using Int = boost::multiprecision::cpp_int;

class Rational {
  Int num_;  // carries the sign
  Int den_;  // > 0

  void reduce() {
    if (den_ == 0) throw std::domain_error("division by zero");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational pow(const Rational& base, int k) {
  if (k < 0) return pow(base.reciprocal(), -k);
  Rational acc(1), b = base;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

// Exact square root, when one exists in the rationals.
inline std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r.is_negative()) return std::nullopt;
  Int sn = boost::multiprecision::sqrt(r.num());
  Int sd = boost::multiprecision::sqrt(r.den());
  if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
  return Rational(sn, sd);
}

// Accepts an optionally signed integer, optionally followed by "/" and a
// nonzero integer. Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational literal: \"" +
                                std::string(text) + "\"");
  };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) fail();

  auto parse_int = [&](std::string_view v) -> Int {
    std::size_t i = 0;
    if (v[i] == '+' || v[i] == '-') ++i;
    if (i == v.size()) fail();
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) fail();
    return Int(std::string(v));
  };

  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  if (slash + 1 >= s.size()) fail();
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) fail();
  return Rational(n, d);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace lefzeta
