#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Values are normalized eagerly: gcd(|num|, den) == 1, den > 0, and zero is
// always 0/1. Equality is therefore plain field-wise equality.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace irrat {

using BigInt = boost::multiprecision::cpp_int;

inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(x);
}

inline std::optional<BigInt> exact_isqrt(const BigInt& x) {
  if (x < 0) return std::nullopt;
  BigInt r = isqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n) : num_(n), den_(1) {}   // NOLINT
  Rational(int n) : num_(n), den_(1) {}            // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return {x.num_ - y.num_, x.den_};
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {x.num_ * y.num_, x.den_ * y.den_};
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return {x.num_ * y.den_, x.den_ * y.num_};
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const BigInt lhs = x.num_ * y.den_;
    const BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return {den_, num_};
  }

  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  // Always "p/q", also for integers, so serialized fractions have one shape.
  std::string str() const { return num_.str() + "/" + den_.str(); }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt d = parse_bigint(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
    return {parse_bigint(text.substr(0, slash)), std::move(d)};
  }

  // Conversion for display and rendering only.
  double to_double() const {
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational square(const Rational& x) { return x * x; }

inline std::string to_string(const Rational& x) { return x.str(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

// Square root when x is the square of a rational, nullopt otherwise.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto n = exact_isqrt(x.num());
  auto d = exact_isqrt(x.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace irrat
