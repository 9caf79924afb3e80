#include <random>

#include <gtest/gtest.h>

#include "irrat/descent.hpp"
#include "irrat/geometry.hpp"
#include "oracles.hpp"

namespace irrat {
namespace {

LatticePolygon square(Basis basis, std::int64_t x0, std::int64_t y0, std::int64_t side) {
  return {basis, {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}}};
}

TEST(LatticePolygon, CalibrationAreas) {
  EXPECT_EQ(upward_triangle({0, 0}, 1).lattice_area(), Rational(1, 2));
  EXPECT_EQ(regular_hexagon({0, 0}, 1).lattice_area(), Rational(3));
  EXPECT_EQ(regular_hexagon({0, 0}, 1).edge_length_sq(0), Rational(1));
  EXPECT_EQ(square(Basis::orthogonal, 0, 0, 3).lattice_area(), Rational(9));
}

TEST(LatticePolygon, RejectsNonConvexOrClockwise) {
  EXPECT_THROW(LatticePolygon(Basis::orthogonal, {{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(LatticePolygon(Basis::orthogonal, {{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(LatticePolygon(Basis::orthogonal, {{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}),
               std::invalid_argument);
  EXPECT_THROW(LatticePolygon(Basis::orthogonal, {{0, 0}, {1, 0}}), std::invalid_argument);
}

TEST(ConvexIntersection, Examples) {
  const auto P = square(Basis::orthogonal, 0, 0, 2);
  const auto Q = square(Basis::orthogonal, 1, 1, 2);
  EXPECT_EQ(convex_intersection(P, Q), square(Basis::orthogonal, 1, 1, 1));
  EXPECT_EQ(convex_intersection(P, P), P);
  const auto T1 = upward_triangle({0, 0}, 2);
  const auto T2 = upward_triangle({2, 0}, 2);  // shares only the vertex (2,0)
  EXPECT_FALSE(convex_intersection(T1, T2).has_value());
  const LatticePolygon below(Basis::triangular, {{0, 0}, {2, -2}, {2, 0}});  // shares edge
  EXPECT_FALSE(convex_intersection(T1, below).has_value());
  EXPECT_FALSE(convex_intersection(P, square(Basis::orthogonal, 5, 5, 1)).has_value());
}

TEST(ConvexIntersection, BasisMismatch) {
  EXPECT_THROW(convex_intersection(square(Basis::orthogonal, 0, 0, 1),
                                   square(Basis::triangular, 0, 0, 1)),
               basis_mismatch);
}

TEST(ConvexIntersection, CommutativeAndMonotoneOnRandomInputs) {
  std::mt19937_64 rng(5);
  int nonempty = 0;
  for (int i = 0; i < 400; ++i) {
    const auto pv = oracle::random_convex(rng, 8, 10);
    const auto qv = oracle::random_convex(rng, 8, 10);
    if (pv.size() < 3 || qv.size() < 3) continue;
    const LatticePolygon P(Basis::orthogonal, pv), Q(Basis::orthogonal, qv);
    const auto pq = convex_intersection(P, Q);
    const auto qp = convex_intersection(Q, P);
    ASSERT_EQ(pq.has_value(), qp.has_value());
    if (!pq) continue;
    ++nonempty;
    EXPECT_EQ(*pq, *qp);
    EXPECT_TRUE(P.contains(*pq));
    EXPECT_TRUE(Q.contains(*pq));
    EXPECT_LE(pq->lattice_area(), std::min(P.lattice_area(), Q.lattice_area()));
    EXPECT_EQ(convex_intersection(*pq, P), *pq);
  }
  EXPECT_GT(nonempty, 100);
}

TEST(BuildTennenbaum, Examples) {
  const auto A = build_tennenbaum(7, 5);
  ASSERT_EQ(A.smalls.size(), 2u);
  const auto overlap = convex_intersection(A.smalls[0], A.smalls[1]);
  ASSERT_TRUE(overlap);
  EXPECT_EQ(overlap->lattice_area(), Rational(9));
  EXPECT_NO_THROW(build_tennenbaum(3, 2));
  try {
    build_tennenbaum(4, 2);
    FAIL() << "expected out_of_window";
  } catch (const out_of_window& e) {
    EXPECT_EQ(e.violated(), "a < 2b");
  }
  EXPECT_THROW(build_tennenbaum(5, 5), out_of_window);
}

TEST(BuildHexagon6, Examples) {
  const auto A = build_hexagon6(5, 2);
  ASSERT_EQ(A.smalls.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto corner = Rational(5) * hexagon_directions()[i];
    const auto& v = A.smalls[i].vertices();
    EXPECT_EQ(std::count(v.begin(), v.end(), corner), 1) << i;
  }
  EXPECT_NO_THROW(build_hexagon6(22, 9));
  EXPECT_THROW(build_hexagon6(7, 2), out_of_window);
  EXPECT_THROW(build_hexagon6(4, 2), out_of_window);
}

TEST(BuildTriangular, Examples) {
  const auto two = build_triangular(2, 7, 4);
  EXPECT_EQ(triangular_overlap_side(2, 7, 4), Rational(1));
  EXPECT_EQ(triangular_blank_side(2, 7, 4), Rational(2));
  ASSERT_EQ(two.smalls.size(), 3u);
  const auto& apex = two.smalls[0].vertices();
  EXPECT_EQ(std::count(apex.begin(), apex.end(), LatticePoint{0, 7}), 1);

  const auto five = build_triangular(5, 27, 7);
  ASSERT_EQ(five.smalls.size(), 15u);
  // Bottom row sits on v = 0 and spans the whole base.
  for (std::size_t k = 10; k < 15; ++k) EXPECT_EQ(five.smalls[k].bounds().lo.v, Rational(0));
  EXPECT_EQ(five.smalls[10].bounds().lo.u, Rational(0));
  EXPECT_EQ(five.smalls[14].bounds().hi.u, Rational(27));

  EXPECT_THROW(build_triangular(3, 12, 4), out_of_window);
  EXPECT_THROW(build_triangular(3, 8, 4), out_of_window);
  EXPECT_THROW(build_triangular(1, 8, 4), bad_index);
}

TEST(CoverageCensus, TennenbaumSevenFive) {
  const auto C = coverage_census(build_tennenbaum(7, 5));
  EXPECT_EQ(C.big_area, Rational(49));
  EXPECT_EQ(C.total_small_area, Rational(50));
  EXPECT_EQ(C.union_area, Rational(41));
  EXPECT_EQ(C.exactly2_area, Rational(9));
  EXPECT_EQ(C.exactly3_area, Rational(0));
  EXPECT_EQ(C.blank_area, Rational(8));
  EXPECT_EQ(C.max_depth, 2);
}

TEST(CoverageCensus, HexagonFiveTwo) {
  const auto C = coverage_census(build_hexagon6(5, 2));
  EXPECT_EQ(C.big_area, Rational(75));
  EXPECT_EQ(C.total_small_area, Rational(72));
  EXPECT_EQ(C.pairwise_regions.size(), 6u);
  EXPECT_EQ(C.union_area, Rational(66));
  EXPECT_EQ(C.blank_area, Rational(9));
  EXPECT_EQ(C.exactly2_area, Rational(6));
  EXPECT_EQ(C.exactly3_area, Rational(0));
}

TEST(CoverageCensus, TriangularTwoSevenFour) {
  const auto C = coverage_census(build_triangular(2, 7, 4));
  EXPECT_EQ(C.total_small_area, Rational(24));
  EXPECT_EQ(C.big_area, Rational(49, 2));
  EXPECT_EQ(C.exactly2_area, Rational(3, 2));
  EXPECT_EQ(C.exactly3_area, Rational(0));
  EXPECT_EQ(C.blank_area, Rational(2));
}

TEST(CoverageCensus, DepthExceeded) {
  Arrangement A{FigureKind::triangular, 2, 4, 2, upward_triangle({0, 0}, 4),
                std::vector<LatticePolygon>(4, upward_triangle({0, 0}, 2))};
  EXPECT_THROW(coverage_census(A), depth_exceeded);
}

// Exact cell-classification oracle against inclusion-exclusion.
TEST(CoverageCensus, MatchesCellOracle) {
  const std::vector<Arrangement> figures{
      build_tennenbaum(7, 5),       build_tennenbaum(17, 12),   build_hexagon6(5, 2),
      build_hexagon6(22, 9),        build_triangular(2, 7, 4),  build_triangular(3, 5, 2),
      build_triangular(4, 19, 6),   build_triangular(5, 27, 7), build_triangular(6, 32, 7),
      build_triangular(7, 30, 6),
  };
  for (const auto& A : figures) {
    const auto C = coverage_census(A);
    auto cells = oracle::cell_census(A).area_by_depth;
    EXPECT_EQ(C.blank_area, cells[0]) << to_string(A.kind) << " " << A.a;
    EXPECT_EQ(C.exactly2_area, cells[2]) << to_string(A.kind) << " " << A.a;
    EXPECT_EQ(C.exactly3_area, cells[3]) << to_string(A.kind) << " " << A.a;
    EXPECT_EQ(C.union_area, cells[1] + cells[2] + cells[3]);
    EXPECT_EQ(cells.count(4), 0u);
    EXPECT_EQ(C.big_area, C.union_area + C.blank_area);
    EXPECT_EQ(C.total_small_area, C.union_area + C.excess_area());
  }
}

TEST(VerifyFigure, BalanceExamples) {
  const auto H = build_hexagon6(5, 2);
  const auto CH = coverage_census(H);
  EXPECT_TRUE(verify_figure(H, CH).passed());
  EXPECT_EQ(CH.excess_area() - CH.blank_area, Rational(-3));

  const auto T = build_triangular(2, 7, 4);
  const auto CT = coverage_census(T);
  EXPECT_TRUE(verify_figure(T, CT).passed());
  EXPECT_EQ(CT.excess_area() - CT.blank_area, Rational(-1, 2));
}

TEST(VerifyFigure, TriangularFiveCounts) {
  const auto A = build_triangular(5, 27, 7);
  const auto C = coverage_census(A);
  const auto report = verify_figure(A, C);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(C.pairwise_regions.size(), 12u);
  EXPECT_EQ(C.triple_regions.size(), 6u);
  EXPECT_EQ(triangular_overlap_side(5, 27, 7), Rational(2));
  EXPECT_EQ(triangular_blank_side(5, 27, 7), Rational(3));
  // 10 blank triangles of side 3, lattice area 9/2 each.
  EXPECT_EQ(C.blank_area, Rational(45));
}

TEST(VerifyFigure, ReportsMismatches) {
  const auto A = build_triangular(5, 27, 7);
  auto C = coverage_census(A);
  C.blank_area += Rational(1);
  const auto report = verify_figure(A, C);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.failures().empty());
  EXPECT_THROW(report.ensure(), mismatch_report);
  try {
    report.ensure();
  } catch (const mismatch_report& e) {
    EXPECT_EQ(e.failed().front().name, "big = union + blank");
  }
}

TEST(CensusToDescent, Examples) {
  const auto T = build_tennenbaum(7, 5);
  EXPECT_EQ(census_to_descent(T, coverage_census(T)), std::make_pair(BigInt(3), BigInt(2)));
  const auto H = build_hexagon6(22, 9);
  EXPECT_EQ(census_to_descent(H, coverage_census(H)), std::make_pair(BigInt(12), BigInt(5)));
  const auto R = build_triangular(3, 5, 2);
  EXPECT_EQ(census_to_descent(R, coverage_census(R)), std::make_pair(BigInt(2), BigInt(1)));
}

TEST(CensusToDescent, MismatchOnCorruptCensus) {
  const auto T = build_tennenbaum(7, 5);
  auto C = coverage_census(T);
  C.blank_area = Rational(7);  // 7/2 is not a square
  EXPECT_THROW(census_to_descent(T, C), mismatch_report);
}

struct FamilyCase {
  FigureKind kind;
  std::uint64_t n;
};

// Geometry and algebra agree on 50 convergent-driven arrangements per family.
TEST(CensusToDescent, AgreesWithAlgebraOnConvergents) {
  const std::vector<FamilyCase> cases{{FigureKind::tennenbaum, 0}, {FigureKind::hex6, 0},
                                      {FigureKind::triangular, 2}, {FigureKind::triangular, 3},
                                      {FigureKind::triangular, 4}, {FigureKind::triangular, 5}};
  for (const auto& fc : cases) {
    const auto family = fc.kind == FigureKind::tennenbaum ? DescentFamily::sqrt2()
                        : fc.kind == FigureKind::hex6     ? DescentFamily::hex6()
                                                          : DescentFamily::triangular(fc.n);
    auto build = [&](const BigInt& a, const BigInt& b) {
      return fc.kind == FigureKind::tennenbaum ? build_tennenbaum(a, b)
             : fc.kind == FigureKind::hex6     ? build_hexagon6(a, b)
                                               : build_triangular(fc.n, a, b);
    };
    int tested = 0;
    for (const auto& c : convergents(family.radicand(), 56)) {
      std::optional<Arrangement> built;
      try {
        built = build(c.p, c.q);
      } catch (const out_of_window&) {
        continue;
      }
      const auto& A = *built;
      const auto C = coverage_census(A);
      ASSERT_TRUE(verify_figure(A, C).passed()) << family.name() << " k=" << c.index;
      const auto step = descent_step(family, c.p, c.q);
      EXPECT_EQ(census_to_descent(A, C), std::make_pair(step.a_next, step.b_next))
          << family.name() << " k=" << c.index;
      if (++tested == 50) break;
    }
    EXPECT_EQ(tested, 50) << family.name();
  }
}

}  // namespace
}  // namespace irrat
