#pragma once

// Bivariate polynomials in the formal symbols a and b with rational
// coefficients. Used to expand descent maps and prove identities
// coefficient-wise instead of sampling them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "irrat/number_theory.hpp"
#include "irrat/rational.hpp"

namespace irrat {

class BiForm {
 public:
  static constexpr unsigned max_degree = 4;

  // (power of a, power of b)
  using Monomial = std::pair<unsigned, unsigned>;

  BiForm() = default;

  static BiForm constant(const Rational& c) { return monomial(c, 0, 0); }
  static BiForm a() { return monomial(Rational(1), 1, 0); }
  static BiForm b() { return monomial(Rational(1), 0, 1); }

  static BiForm monomial(const Rational& c, unsigned pa, unsigned pb) {
    BiForm f;
    f.add_term({pa, pb}, c);
    return f;
  }

  // c_a * a + c_b * b
  static BiForm linear(const Rational& ca, const Rational& cb) {
    BiForm f;
    f.add_term({1, 0}, ca);
    f.add_term({0, 1}, cb);
    return f;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(unsigned pa, unsigned pb) const {
    auto it = terms_.find({pa, pb});
    return it == terms_.end() ? Rational() : it->second;
  }

  unsigned degree_in_a() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
  }

  friend BiForm operator+(BiForm x, const BiForm& y) {
    for (const auto& [m, c] : y.terms_) x.add_term(m, c);
    return x;
  }
  friend BiForm operator-(BiForm x, const BiForm& y) {
    for (const auto& [m, c] : y.terms_) x.add_term(m, -c);
    return x;
  }
  BiForm operator-() const { return BiForm() - *this; }

  friend BiForm operator*(const BiForm& x, const BiForm& y) {
    BiForm out;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_)
        out.add_term({mx.first + my.first, mx.second + my.second}, cx * cy);
    return out;
  }
  friend BiForm operator*(const Rational& k, const BiForm& x) {
    BiForm out;
    if (k.is_zero()) return out;
    for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, k * c);
    return out;
  }

  friend bool operator==(const BiForm&, const BiForm&) = default;

  Rational evaluate(const Rational& va, const Rational& vb) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (unsigned i = 0; i < m.first; ++i) term *= va;
      for (unsigned i = 0; i < m.second; ++i) term *= vb;
      sum += term;
    }
    return sum;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest a-power first reads like the hand expansion.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (m.first > 0) out += "*a^" + std::to_string(m.first);
      if (m.second > 0) out += "*b^" + std::to_string(m.second);
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (m.first + m.second > max_degree)
      throw std::logic_error("BiForm degree cap exceeded: a^" + std::to_string(m.first) + " b^" +
                             std::to_string(m.second));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline BiForm pow2(const BiForm& x) { return x * x; }

// Rewrites every a^2 as N b^2 until the form is at most linear in a.
inline BiForm reduce_modulo_square(const BiForm& p, const Rational& N) {
  BiForm out;
  for (const auto& [m, c] : p.terms()) {
    unsigned pa = m.first;
    unsigned pb = m.second;
    Rational k = c;
    while (pa >= 2) {
      pa -= 2;
      pb += 2;
      k *= N;
    }
    out = out + BiForm::monomial(k, pa, pb);
  }
  return out;
}

// Reduction modulo a^2 = T_n b^2.
inline BiForm biform_reduce(const BiForm& p, std::uint64_t n) {
  return reduce_modulo_square(p, Rational(triangular_number(n)));
}

// The defect a^2 - N b^2.
inline BiForm defect_form(const Rational& N) {
  return pow2(BiForm::a()) - N * pow2(BiForm::b());
}

}  // namespace irrat
