#pragma once

// Descent maps (a, b) -> (a', b') for the four proof families, with the
// symbolic checks that each one preserves the ratio sqrt(N) and the exact
// range analysis deciding where it strictly shrinks a solution.
//
// Integers cannot satisfy a^2 = N b^2, so the maps are exercised through the
// defect E = a^2 - N b^2, which every map scales by a fixed multiplier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrat/biform.hpp"
#include "irrat/errors.hpp"
#include "irrat/number_theory.hpp"
#include "irrat/rational.hpp"
#include "irrat/surd.hpp"

namespace irrat {

enum class FamilyKind { sqrt2, hex6, triangular_even, triangular_odd };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::sqrt2: return "sqrt2";
    case FamilyKind::hex6: return "hex6";
    case FamilyKind::triangular_even: return "triangular_even";
    case FamilyKind::triangular_odd: return "triangular_odd";
  }
  return "?";
}

// c_a * a + c_b * b with integer coefficients.
struct LinearForm {
  BigInt ca;
  BigInt cb;

  BigInt operator()(const BigInt& a, const BigInt& b) const { return ca * a + cb * b; }
  BiForm symbolic() const { return BiForm::linear(Rational(ca), Rational(cb)); }
  // Value under a = root * b, as a multiple of b.
  Surd at_root(const Surd& root) const { return root * Rational(ca) + Rational(cb); }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

class DescentFamily {
 public:
  // Largest triangular index accepted; keeps T_n inside 64 bits.
  static constexpr std::uint64_t max_index = 4'000'000'000ULL;

  static DescentFamily sqrt2() { return {FamilyKind::sqrt2, 0, 2, {-1, 2}, {1, -1}}; }

  static DescentFamily hex6() { return {FamilyKind::hex6, 0, 6, {3, -6}, {-1, 3}}; }

  // (a, b) -> ((n/2)(2a - (n+1)b), nb - a), n even.
  static DescentFamily triangular_even(std::uint64_t n) {
    check_index(n);
    if (n % 2 != 0) throw bad_parity("triangular_even needs even n, got " + std::to_string(n));
    const BigInt h = n / 2;
    return {FamilyKind::triangular_even, n, t_radicand(n), {BigInt(n), -h * (n + 1)},
            {-1, BigInt(n)}};
  }

  // (a, b) -> (((n+1)/2)(nb - a), a - ((n+1)/2) b), n odd.
  static DescentFamily triangular_odd(std::uint64_t n) {
    check_index(n);
    if (n % 2 != 1) throw bad_parity("triangular_odd needs odd n, got " + std::to_string(n));
    const BigInt h = (n + 1) / 2;
    return {FamilyKind::triangular_odd, n, t_radicand(n), {-h, h * n}, {1, -h}};
  }

  static DescentFamily triangular(std::uint64_t n) {
    check_index(n);
    return n % 2 == 0 ? triangular_even(n) : triangular_odd(n);
  }

  FamilyKind kind() const noexcept { return kind_; }
  // Triangular index; 0 for sqrt2 and hex6.
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t radicand() const noexcept { return radicand_; }
  const LinearForm& numerator_form() const noexcept { return num_; }
  const LinearForm& denominator_form() const noexcept { return den_; }
  bool is_triangular() const {
    return kind_ == FamilyKind::triangular_even || kind_ == FamilyKind::triangular_odd;
  }

  std::string name() const {
    return is_triangular() ? to_string(kind_) + "(" + std::to_string(n_) + ")" : to_string(kind_);
  }

  friend bool operator==(const DescentFamily&, const DescentFamily&) = default;

 private:
  DescentFamily(FamilyKind kind, std::uint64_t n, std::uint64_t radicand, LinearForm num,
                LinearForm den)
      : kind_(kind), n_(n), radicand_(radicand), num_(std::move(num)), den_(std::move(den)) {}

  static void check_index(std::uint64_t n) {
    if (n < 2) throw bad_index("triangular index must be >= 2, got " + std::to_string(n));
    if (n > max_index) throw bad_index("triangular index too large: " + std::to_string(n));
  }
  static std::uint64_t t_radicand(std::uint64_t n) {
    return triangular_number(n).convert_to<std::uint64_t>();
  }

  FamilyKind kind_;
  std::uint64_t n_;
  std::uint64_t radicand_;
  LinearForm num_;
  LinearForm den_;
};

inline BigInt defect(const BigInt& a, const BigInt& b, std::uint64_t N) {
  return a * a - BigInt(N) * b * b;
}

struct DescentStep {
  BigInt a, b;
  BigInt a_next, b_next;
  BigInt defect_in;   // a^2 - N b^2
  BigInt defect_out;  // a'^2 - N b'^2
  Rational multiplier;
  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

// Symbolic multiplier m with a'^2 - N b'^2 = m (a^2 - N b^2) identically.
// Proven by expanding both sides as BiForms and matching every coefficient.
inline Rational defect_multiplier(const DescentFamily& f) {
  const Rational N(BigInt(f.radicand()));
  const BiForm image = pow2(f.numerator_form().symbolic()) - N * pow2(f.denominator_form().symbolic());
  const BiForm base = defect_form(N);
  const Rational m = image.coefficient(2, 0);
  if (image != m * base)
    throw std::logic_error("defect of " + f.name() + " is not a multiple of a^2 - N b^2: " +
                           image.str());
  return m;
}

// Applies the map without requiring the image to be positive or smaller.
inline DescentStep descent_step(const DescentFamily& f, const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("descent_step needs a, b >= 1");
  DescentStep s;
  s.a = a;
  s.b = b;
  s.a_next = f.numerator_form()(a, b);
  s.b_next = f.denominator_form()(a, b);
  s.defect_in = defect(a, b, f.radicand());
  s.defect_out = defect(s.a_next, s.b_next, f.radicand());
  s.multiplier = defect_multiplier(f);
  if (Rational(s.defect_out) != s.multiplier * Rational(s.defect_in))
    throw std::logic_error("defect relation broken for " + f.name());
  return s;
}

struct Eq1Certificate {
  std::uint64_t n = 0;
  bool holds = false;
  BiForm difference;  // LHS - RHS, expanded
  Rational cofactor;  // 1 - n
  BiForm relation;    // a^2 - T_n b^2
};

// (n+1)(nb - a)^2 - (n/2)(2a - (n+1)b)^2 == (1 - n)(a^2 - T_n b^2)
// as polynomials, so the area balance holds exactly on a^2 = T_n b^2.
inline Eq1Certificate verify_eq1(std::uint64_t n) {
  if (n < 2) throw bad_index("verify_eq1 needs n >= 2, got " + std::to_string(n));
  const Rational rn(BigInt{n});
  const BiForm overlap = BiForm::linear(Rational(-1), rn);              // nb - a
  const BiForm blank = BiForm::linear(Rational(2), -(rn + Rational(1)));  // 2a - (n+1)b
  const BiForm lhs = (rn + Rational(1)) * pow2(overlap);
  const BiForm rhs = (rn / Rational(2)) * pow2(blank);
  Eq1Certificate c;
  c.n = n;
  c.difference = lhs - rhs;
  c.cofactor = Rational(1) - rn;
  c.relation = defect_form(Rational(triangular_number(n)));
  c.holds = (c.difference - c.cofactor * c.relation).is_zero() &&
            biform_reduce(c.difference, n).is_zero();
  return c;
}

struct RatioCheck {
  bool holds = false;
  Surd a_coef;  // a' = a_coef * b under a = sqrt(N) b
  Surd b_coef;  // b' = b_coef * b
};

// Core of symbolic_ratio_check, exposed for forms outside the four families.
inline RatioCheck ratio_check_forms(std::uint64_t N, const LinearForm& num, const LinearForm& den) {
  const Surd root = Surd::sqrt_of(N);
  RatioCheck r;
  r.a_coef = num.at_root(root);
  r.b_coef = den.at_root(root);
  if (r.b_coef.sign() == 0)
    throw degenerate_denominator("b' vanishes identically under a = sqrt(" + std::to_string(N) +
                                 ") b");
  r.holds = (r.a_coef == root * r.b_coef);
  return r;
}

// Substitutes a = sqrt(N) b and confirms a'/b' = sqrt(N) exactly.
inline RatioCheck symbolic_ratio_check(const DescentFamily& f) {
  return ratio_check_forms(f.radicand(), f.numerator_form(), f.denominator_form());
}

struct SurdInequality {
  std::string name;  // e.g. "b' < b"
  Surd slack;        // must be > 0 for the inequality to hold
  bool holds = false;
};

struct RangeCheck {
  bool works = false;
  std::vector<SurdInequality> witness;
};

// Decides 0 < a' < a and 0 < b' < b under a = sqrt(N) b.
inline RangeCheck range_check(const DescentFamily& f) {
  const Surd root = Surd::sqrt_of(f.radicand());
  const auto ratio = symbolic_ratio_check(f);
  RangeCheck r;
  auto add = [&r](std::string name, Surd slack) {
    const bool ok = slack.sign() > 0;
    r.witness.push_back({std::move(name), std::move(slack), ok});
  };
  add("a' > 0", ratio.a_coef);
  add("a' < a", root - ratio.a_coef);
  add("b' > 0", ratio.b_coef);
  add("b' < b", Surd::rational(Rational(1), 1) - ratio.b_coef);
  r.works = ratio.holds;
  for (const auto& w : r.witness) r.works = r.works && w.holds;
  return r;
}

// Closed-form upper bound on n for which the triangular family of n's parity
// shrinks: (5 + sqrt 17)/2 for even n, 2 + sqrt 13 for odd n.
inline Surd triangular_bound(bool even) {
  if (even) return Surd(Rational(5, 2), Rational(1, 2), 17);
  return Surd(Rational(2), Rational(1), 13);
}

enum class StopReason { max_steps, non_positive, no_decrease };

inline std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::max_steps: return "max_steps";
    case StopReason::non_positive: return "non_positive";
    case StopReason::no_decrease: return "no_decrease";
  }
  return "?";
}

struct DescentChain {
  std::vector<DescentStep> steps;     // accepted steps, each strictly shrinking b
  std::optional<DescentStep> rejected;  // the step that ended the chain, if any
  StopReason reason = StopReason::max_steps;
};

inline DescentChain descent_chain(const DescentFamily& f, BigInt a, BigInt b,
                                  std::size_t max_steps) {
  DescentChain chain;
  for (std::size_t i = 0; i < max_steps; ++i) {
    DescentStep s = descent_step(f, a, b);
    if (s.a_next <= 0 || s.b_next <= 0) {
      chain.reason = StopReason::non_positive;
      chain.rejected = std::move(s);
      return chain;
    }
    if (s.b_next >= s.b) {
      chain.reason = StopReason::no_decrease;
      chain.rejected = std::move(s);
      return chain;
    }
    a = s.a_next;
    b = s.b_next;
    chain.steps.push_back(std::move(s));
  }
  chain.reason = StopReason::max_steps;
  return chain;
}

}  // namespace irrat
