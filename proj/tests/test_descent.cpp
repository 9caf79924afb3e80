#include <random>

#include <gtest/gtest.h>

#include "irrat/descent.hpp"

namespace irrat {
namespace {

struct StepCase {
  DescentFamily family;
  BigInt a, b, a_next, b_next, e_in, e_out;
};

TEST(DescentStep, Examples) {
  const std::vector<StepCase> cases{
      {DescentFamily::sqrt2(), 7, 5, 3, 2, -1, 1},
      {DescentFamily::hex6(), 5, 2, 3, 1, 1, 3},
      {DescentFamily::triangular_odd(3), 5, 2, 2, 1, 1, -2},
      {DescentFamily::triangular_even(4), 19, 6, 16, 5, 1, 6},
  };
  for (const auto& c : cases) {
    const auto s = descent_step(c.family, c.a, c.b);
    EXPECT_EQ(s.a_next, c.a_next) << c.family.name();
    EXPECT_EQ(s.b_next, c.b_next) << c.family.name();
    EXPECT_EQ(s.defect_in, c.e_in) << c.family.name();
    EXPECT_EQ(s.defect_out, c.e_out) << c.family.name();
  }
}

TEST(DescentStep, Errors) {
  EXPECT_THROW(DescentFamily::triangular_even(5), bad_parity);
  EXPECT_THROW(DescentFamily::triangular_odd(4), bad_parity);
  EXPECT_THROW(DescentFamily::triangular(1), bad_index);
  EXPECT_THROW(DescentFamily::triangular_even(0), bad_index);
  EXPECT_THROW(descent_step(DescentFamily::sqrt2(), 0, 3), std::invalid_argument);
}

TEST(DescentStep, AcceptsNonCoprimeAndOutOfWindowInputs) {
  const auto s = descent_step(DescentFamily::hex6(), 44, 18);
  EXPECT_EQ(s.a_next, 24);
  EXPECT_EQ(s.b_next, 10);
  const auto wild = descent_step(DescentFamily::sqrt2(), 1, 100);
  EXPECT_EQ(wild.b_next, -99);
}

TEST(DefectMultiplier, Examples) {
  EXPECT_EQ(defect_multiplier(DescentFamily::sqrt2()), Rational(-1));
  EXPECT_EQ(defect_multiplier(DescentFamily::hex6()), Rational(3));
  EXPECT_EQ(defect_multiplier(DescentFamily::triangular_odd(5)), Rational(-6));
  EXPECT_EQ(defect_multiplier(DescentFamily::triangular_even(2)), Rational(1));
  EXPECT_EQ(defect_multiplier(DescentFamily::triangular_even(4)), Rational(6));
  EXPECT_EQ(defect_multiplier(DescentFamily::triangular_odd(3)), Rational(-2));
}

std::vector<DescentFamily> families_up_to(std::uint64_t n_max) {
  std::vector<DescentFamily> out{DescentFamily::sqrt2(), DescentFamily::hex6()};
  for (std::uint64_t n = 2; n <= n_max; ++n) out.push_back(DescentFamily::triangular(n));
  return out;
}

// Plain integer arithmetic on random pairs, independent of the BiForm proof.
TEST(DefectMultiplier, HoldsOnRandomIntegerPairs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> side(1, 1'000'000'000);
  for (const auto& f : families_up_to(20)) {
    const Rational m = defect_multiplier(f);
    ASSERT_TRUE(m.is_integer());
    for (int i = 0; i < 500; ++i) {
      const BigInt a = side(rng), b = side(rng);
      const BigInt a2 = f.numerator_form()(a, b), b2 = f.denominator_form()(a, b);
      const BigInt N = f.radicand();
      ASSERT_EQ(a2 * a2 - N * b2 * b2, m.num() * (a * a - N * b * b)) << f.name();
    }
  }
}

TEST(DefectMultiplier, UnitOnlyForSqrt2AndEvenTwo) {
  for (const auto& f : families_up_to(20)) {
    const bool unit = abs(defect_multiplier(f)) == Rational(1);
    const bool expected = f.kind() == FamilyKind::sqrt2 ||
                          (f.kind() == FamilyKind::triangular_even && f.n() == 2);
    EXPECT_EQ(unit, expected) << f.name();
  }
}

TEST(AreaBalance, Examples) {
  const auto two = verify_eq1(2);
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.cofactor, Rational(-1));
  EXPECT_EQ(two.difference, Rational(-1) * defect_form(Rational(3)));
  const auto five = verify_eq1(5);
  EXPECT_TRUE(five.holds);
  EXPECT_EQ(five.difference, Rational(-4) * defect_form(Rational(15)));
  EXPECT_TRUE(verify_eq1(8).holds);
  EXPECT_THROW(verify_eq1(1), bad_index);
}

// A quadratic form in (a, b) vanishing on more than enough generic integer
// points is identically zero; evaluated with plain integers.
TEST(AreaBalance, AgreesWithPointEvaluation) {
  for (std::int64_t n = 2; n <= 50; ++n) {
    ASSERT_TRUE(verify_eq1(static_cast<std::uint64_t>(n)).holds);
    for (std::int64_t a = -3; a <= 3; ++a) {
      for (std::int64_t b = -3; b <= 3; ++b) {
        const BigInt A = a, B = b, nn = n;
        // 2 * (LHS - RHS) to keep n/2 integral.
        const BigInt lhs2 = 2 * (nn + 1) * (nn * B - A) * (nn * B - A) -
                            nn * (2 * A - (nn + 1) * B) * (2 * A - (nn + 1) * B);
        const BigInt expected2 = 2 * (1 - nn) * (A * A - nn * (nn + 1) / 2 * B * B);
        ASSERT_EQ(lhs2, expected2) << "n=" << n;
      }
    }
  }
}

TEST(SymbolicRatio, Examples) {
  const auto s2 = symbolic_ratio_check(DescentFamily::sqrt2());
  EXPECT_TRUE(s2.holds);
  EXPECT_EQ(s2.a_coef, Surd(2, -1, 2));
  EXPECT_EQ(s2.b_coef, Surd(-1, 1, 2));
  const auto h6 = symbolic_ratio_check(DescentFamily::hex6());
  EXPECT_TRUE(h6.holds);
  EXPECT_EQ(h6.b_coef, Surd(3, -1, 6));
  EXPECT_TRUE(symbolic_ratio_check(DescentFamily::triangular_even(4)).holds);
  for (const auto& f : families_up_to(60)) EXPECT_TRUE(symbolic_ratio_check(f).holds) << f.name();
}

TEST(SymbolicRatio, DegenerateDenominator) {
  // b' = a - 2b vanishes identically when sqrt(N) = 2.
  EXPECT_THROW(ratio_check_forms(4, {1, 0}, {1, -2}), degenerate_denominator);
}

TEST(RangeCheck, Examples) {
  EXPECT_TRUE(range_check(DescentFamily::triangular_even(4)).works);
  const auto six = range_check(DescentFamily::triangular_even(6));
  EXPECT_FALSE(six.works);
  // Both decrease conditions fail at sqrt 21; positivity survives.
  for (const auto& w : six.witness) {
    if (w.name == "a' < a") {
      EXPECT_FALSE(w.holds);
      EXPECT_EQ(w.slack, Surd(21, -5, 21));
    } else if (w.name == "b' < b") {
      EXPECT_FALSE(w.holds);
      EXPECT_EQ(w.slack, Surd(-5, 1, 21));
    } else {
      EXPECT_TRUE(w.holds) << w.name;
    }
  }
  EXPECT_FALSE(range_check(DescentFamily::triangular_odd(7)).works);
  EXPECT_TRUE(range_check(DescentFamily::sqrt2()).works);
  EXPECT_TRUE(range_check(DescentFamily::hex6()).works);
}

TEST(RangeCheck, TriangularWindowIsTwoThroughFive) {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    const bool works = range_check(DescentFamily::triangular(n)).works;
    EXPECT_EQ(works, n <= 5) << n;
    const bool below = Surd::rational(Rational(BigInt(n)), 1) < triangular_bound(n % 2 == 0);
    EXPECT_EQ(works, below) << n;
  }
}

TEST(DescentChain, Sqrt2Ladder) {
  const auto chain = descent_chain(DescentFamily::sqrt2(), 17, 12, 20);
  ASSERT_EQ(chain.steps.size(), 3u);
  EXPECT_EQ(chain.steps[0].a_next, 7);
  EXPECT_EQ(chain.steps[1].a_next, 3);
  EXPECT_EQ(chain.steps[2].a_next, 1);
  EXPECT_EQ(chain.steps[2].b_next, 1);
  EXPECT_EQ(chain.reason, StopReason::non_positive);
  ASSERT_TRUE(chain.rejected.has_value());
  EXPECT_EQ(chain.rejected->b_next, 0);
}

TEST(DescentChain, Hex6StrictlyDecreases) {
  const auto chain = descent_chain(DescentFamily::hex6(), 22, 9, 20);
  ASSERT_FALSE(chain.steps.empty());
  EXPECT_EQ(chain.steps[0].a_next, 12);
  EXPECT_EQ(chain.steps[0].b_next, 5);
  BigInt prev = 9;
  for (const auto& s : chain.steps) {
    EXPECT_LT(s.b_next, prev);
    prev = s.b_next;
  }
}

TEST(DescentChain, TriangularSixFailsImmediately) {
  const auto c = convergents(21, 6).back();
  const auto chain = descent_chain(DescentFamily::triangular_even(6), c.p, c.q, 10);
  EXPECT_TRUE(chain.steps.empty());
  EXPECT_EQ(chain.reason, StopReason::no_decrease);
}

TEST(DescentChain, MaxSteps) {
  const auto c = convergents(2, 30).back();
  const auto chain = descent_chain(DescentFamily::sqrt2(), c.p, c.q, 5);
  EXPECT_EQ(chain.steps.size(), 5u);
  EXPECT_EQ(chain.reason, StopReason::max_steps);
}

// Working families shrink convergent near-solutions strictly.
TEST(DescentStep, StrictDecreaseOnConvergents) {
  for (const auto& f : families_up_to(5)) {
    ASSERT_TRUE(range_check(f).works);
    const auto cs = convergents(f.radicand(), 25);
    for (std::size_t k = 2; k < cs.size(); ++k) {
      const auto s = descent_step(f, cs[k].p, cs[k].q);
      EXPECT_GT(s.b_next, 0) << f.name() << " k=" << k;
      EXPECT_LT(s.b_next, cs[k].q) << f.name() << " k=" << k;
      EXPECT_GT(s.a_next, 0) << f.name() << " k=" << k;
      EXPECT_LT(s.a_next, cs[k].p) << f.name() << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace irrat
