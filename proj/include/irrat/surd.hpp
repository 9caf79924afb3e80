#pragma once

// Exact quadratic surds rat + coef * sqrt(radicand) for a square-free
// radicand. Signs and comparisons are decided with integer arithmetic only.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "irrat/number_theory.hpp"
#include "irrat/rational.hpp"

namespace irrat {

class Surd {
 public:
  Surd() = default;
  Surd(Rational rat, Rational coef, std::uint64_t radicand)
      : rat_(std::move(rat)), coef_(std::move(coef)), radicand_(radicand) {
    if (radicand_ == 0 || !is_squarefree(radicand_))
      throw std::invalid_argument("surd radicand must be square-free: " + std::to_string(radicand_));
    // sqrt(1) is rational; keep one representation for it.
    if (radicand_ == 1 && !coef_.is_zero()) {
      rat_ += coef_;
      coef_ = Rational();
    }
  }

  static Surd rational(Rational value, std::uint64_t radicand) {
    return {std::move(value), Rational(), radicand};
  }

  // sqrt(n) for any n >= 1, reduced through n = m1 * m2^2. Perfect squares
  // come back as a rational surd with radicand 1.
  static Surd sqrt_of(std::uint64_t n) {
    const auto d = squarefree_decompose(n);
    return {Rational(), Rational(BigInt(d.m2)), d.m1};
  }

  const Rational& rat() const noexcept { return rat_; }
  const Rational& coef() const noexcept { return coef_; }
  std::uint64_t radicand() const noexcept { return radicand_; }
  bool is_rational() const { return coef_.is_zero(); }

  // Exact sign of rat + coef*sqrt(N): if the two terms disagree in sign,
  // compare rat^2 against coef^2 * N.
  int sign() const {
    const int sr = rat_.sign();
    const int sc = coef_.sign();
    if (sc == 0) return sr;
    if (sr == 0 || sr == sc) return sc;
    const auto lhs = square(rat_);
    const auto rhs = square(coef_) * Rational(BigInt(radicand_));
    if (lhs > rhs) return sr;
    if (lhs < rhs) return sc;
    return 0;
  }

  Surd operator-() const { return raw(-rat_, -coef_, radicand_); }

  friend Surd operator+(const Surd& x, const Surd& y) {
    return raw(x.rat_ + y.rat_, x.coef_ + y.coef_, common_radicand(x, y));
  }
  friend Surd operator-(const Surd& x, const Surd& y) {
    return raw(x.rat_ - y.rat_, x.coef_ - y.coef_, common_radicand(x, y));
  }
  friend Surd operator*(const Surd& x, const Surd& y) {
    const auto n = common_radicand(x, y);
    return raw(x.rat_ * y.rat_ + x.coef_ * y.coef_ * Rational(BigInt(n)),
               x.rat_ * y.coef_ + x.coef_ * y.rat_, n);
  }
  // Rationalizes with the conjugate: 1/(p + q r) = (p - q r)/(p^2 - q^2 N).
  friend Surd operator/(const Surd& x, const Surd& y) {
    const auto n = common_radicand(x, y);
    const Rational norm = square(y.rat_) - square(y.coef_) * Rational(BigInt(n));
    if (norm.is_zero()) throw std::domain_error("surd division by zero");
    const Surd conj = raw(y.rat_ / norm, -y.coef_ / norm, n);
    return x * conj;
  }

  friend Surd operator*(const Surd& x, const Rational& k) {
    return raw(x.rat_ * k, x.coef_ * k, x.radicand_);
  }
  friend Surd operator*(const Rational& k, const Surd& x) { return x * k; }
  friend Surd operator+(const Surd& x, const Rational& k) {
    return raw(x.rat_ + k, x.coef_, x.radicand_);
  }
  friend Surd operator-(const Surd& x, const Rational& k) {
    return raw(x.rat_ - k, x.coef_, x.radicand_);
  }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.rat_ == y.rat_ && x.coef_ == y.coef_ &&
           (x.coef_.is_zero() || x.radicand_ == y.radicand_);
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (coef_.is_zero()) return rat_.str();
    return rat_.str() + " + " + coef_.str() + "*sqrt(" + std::to_string(radicand_) + ")";
  }

 private:
  // Skips the square-free check for radicands already validated.
  static Surd raw(Rational rat, Rational coef, std::uint64_t radicand) {
    Surd s;
    s.rat_ = std::move(rat);
    s.coef_ = std::move(coef);
    s.radicand_ = radicand;
    return s;
  }

  // A surd with zero coefficient is rational and combines with any radicand.
  static std::uint64_t common_radicand(const Surd& x, const Surd& y) {
    if (x.coef_.is_zero()) return y.radicand_;
    if (y.coef_.is_zero()) return x.radicand_;
    if (x.radicand_ != y.radicand_)
      throw std::invalid_argument("surds with different radicands: " + std::to_string(x.radicand_) +
                                  " vs " + std::to_string(y.radicand_));
    return x.radicand_;
  }

  Rational rat_;
  Rational coef_;
  std::uint64_t radicand_ = 1;
};

inline int surd_sign(const Surd& x) { return x.sign(); }

inline Surd abs(const Surd& x) { return x.sign() < 0 ? -x : x; }

}  // namespace irrat
