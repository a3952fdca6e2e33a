#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace orbitkit {

// Exact rational arithmetic on 64-bit numerator/denominator.
// Intermediates are computed in 128-bit; results that do not fit back
// into 64 bits throw std::overflow_error rather than silently wrapping.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    normalize_(nn, dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128_(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128_(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128_((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from128_((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r; r.num_ = -num_; r.den_ = den_; return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Renders as "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "p", "p/q", optional leading sign, surrounding whitespace.
  static Rational parse(const std::string& text);

private:
  std::int64_t num_;
  std::int64_t den_;

  static Rational from128_(__int128 n, __int128 d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    r.normalize_(n, d);
    return r;
  }

  void normalize_(__int128 n, __int128 d) {
    if (n == 0) { num_ = 0; den_ = 1; return; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    n /= a; d /= a;
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    num_ = (std::int64_t)n;
    den_ = (std::int64_t)d;
  }
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace orbitkit
