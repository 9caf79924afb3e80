#pragma once

// Exact reconstruction of the square, hexagon and triangle arrangements.
//
// Triangular mode uses coordinates (u, v) in the 60-degree basis
// e1 = (1, 0), e2 = (1/2, sqrt(3)/2), so every vertex is rational. Areas are
// kept in lattice units; the true area is lattice area times sqrt(3)/2, a
// factor that cancels in every identity checked here. Orthogonal mode is
// the plain Cartesian basis and is used for the square construction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irrat/descent.hpp"
#include "irrat/errors.hpp"
#include "irrat/number_theory.hpp"
#include "irrat/rational.hpp"

namespace irrat {

enum class Basis { triangular, orthogonal };

inline std::string to_string(Basis b) {
  return b == Basis::triangular ? "triangular" : "orthogonal";
}

struct LatticePoint {
  Rational u;
  Rational v;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint& x, const LatticePoint& y) {
    if (auto c = x.u <=> y.u; c != 0) return c;
    return x.v <=> y.v;
  }
  friend LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) {
    return {p.u + q.u, p.v + q.v};
  }
  friend LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) {
    return {p.u - q.u, p.v - q.v};
  }
  friend LatticePoint operator*(const Rational& k, const LatticePoint& p) {
    return {k * p.u, k * p.v};
  }
};

// Twice the signed area of (o, p, q); positive for a left turn. Orientation
// is basis independent since the basis change has positive determinant.
inline Rational cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  return (p.u - o.u) * (q.v - o.v) - (p.v - o.v) * (q.u - o.u);
}

// Squared Euclidean length of a lattice vector, in units of the basis vector.
inline Rational squared_length(Basis basis, const LatticePoint& d) {
  if (basis == Basis::triangular) return d.u * d.u + d.u * d.v + d.v * d.v;
  return d.u * d.u + d.v * d.v;
}

struct BoundingBox {
  LatticePoint lo;
  LatticePoint hi;
  // Open overlap: boxes that only touch do not count.
  bool overlaps(const BoundingBox& o) const {
    return lo.u < o.hi.u && o.lo.u < hi.u && lo.v < o.hi.v && o.lo.v < hi.v;
  }
};

// Strictly convex, counter-clockwise polygon. Vertices are rotated to start
// at the lexicographically smallest one, so equal polygons compare equal.
class LatticePolygon {
 public:
  LatticePolygon(Basis basis, std::vector<LatticePoint> vertices)
      : basis_(basis), vertices_(std::move(vertices)) {
    const std::size_t k = vertices_.size();
    if (k < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < k; ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % k];
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || j == (i + 1) % k) continue;
        if (cross(p, q, vertices_[j]).sign() <= 0)
          throw std::invalid_argument("polygon is not strictly convex and counter-clockwise");
      }
    }
    std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()),
                vertices_.end());
  }

  Basis basis() const noexcept { return basis_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  Rational lattice_area() const {
    Rational twice;
    const std::size_t k = vertices_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % k];
      twice += p.u * q.v - q.u * p.v;
    }
    return twice / Rational(2);
  }

  // Squared length of edge i (from vertex i to i+1).
  Rational edge_length_sq(std::size_t i) const {
    return squared_length(basis_, vertices_[(i + 1) % size()] - vertices_[i]);
  }

  // Closed containment.
  bool contains(const LatticePoint& x) const {
    const std::size_t k = vertices_.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (cross(vertices_[i], vertices_[(i + 1) % k], x).sign() < 0) return false;
    }
    return true;
  }

  bool contains(const LatticePolygon& other) const {
    return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                       [this](const LatticePoint& x) { return contains(x); });
  }

  BoundingBox bounds() const {
    BoundingBox box{vertices_.front(), vertices_.front()};
    for (const auto& p : vertices_) {
      box.lo.u = std::min(box.lo.u, p.u);
      box.lo.v = std::min(box.lo.v, p.v);
      box.hi.u = std::max(box.hi.u, p.u);
      box.hi.v = std::max(box.hi.v, p.v);
    }
    return box;
  }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  Basis basis_;
  std::vector<LatticePoint> vertices_;
};

// Convex intersection by clipping P against each closed half-plane of Q.
// Zero-area contacts (shared edges or vertices) return nullopt.
inline std::optional<LatticePolygon> convex_intersection(const LatticePolygon& P,
                                                         const LatticePolygon& Q) {
  if (P.basis() != Q.basis())
    throw basis_mismatch("cannot intersect " + to_string(P.basis()) + " and " +
                         to_string(Q.basis()) + " polygons");
  std::vector<LatticePoint> poly = P.vertices();
  const auto& clip = Q.vertices();
  for (std::size_t e = 0; e < clip.size() && !poly.empty(); ++e) {
    const auto& c0 = clip[e];
    const auto& c1 = clip[(e + 1) % clip.size()];
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& cur = poly[i];
      const auto& nxt = poly[(i + 1) % poly.size()];
      const Rational sc = cross(c0, c1, cur);
      const Rational sn = cross(c0, c1, nxt);
      if (sc.sign() >= 0) out.push_back(cur);
      if (sc.sign() * sn.sign() < 0) out.push_back(cur + (sc / (sc - sn)) * (nxt - cur));
    }
    poly = std::move(out);
  }

  // Drop repeated and collinear vertices left behind by clipping.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& prev = poly[(i + poly.size() - 1) % poly.size()];
      const auto& next = poly[(i + 1) % poly.size()];
      if (poly[i] == next || cross(prev, poly[i], next).sign() == 0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) return std::nullopt;
  return LatticePolygon(P.basis(), std::move(poly));
}

enum class FigureKind { tennenbaum, hex6, triangular };

inline std::string to_string(FigureKind k) {
  switch (k) {
    case FigureKind::tennenbaum: return "tennenbaum";
    case FigureKind::hex6: return "hex6";
    case FigureKind::triangular: return "triangular";
  }
  return "?";
}

struct Arrangement {
  FigureKind kind = FigureKind::tennenbaum;
  std::uint64_t n = 0;  // triangular only
  BigInt a;
  BigInt b;
  LatticePolygon big;
  std::vector<LatticePolygon> smalls;
};

namespace detail {

inline void require_inside(const Arrangement& A) {
  for (std::size_t i = 0; i < A.smalls.size(); ++i) {
    if (!A.big.contains(A.smalls[i]))
      throw std::logic_error("small polygon " + std::to_string(i) + " escapes the big polygon");
  }
}

inline void require_positive(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("side lengths must be positive integers");
}

}  // namespace detail

// Big square [0,a]^2 with b-squares in two opposite corners.
inline Arrangement build_tennenbaum(const BigInt& a, const BigInt& b) {
  detail::require_positive(a, b);
  if (!(b < a)) throw out_of_window("b < a");
  if (!(a < 2 * b)) throw out_of_window("a < 2b");
  const Rational ra(a), rb(b), zero;
  auto square = [](const Rational& x0, const Rational& y0, const Rational& side) {
    return LatticePolygon(Basis::orthogonal, {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side},
                                              {x0, y0 + side}});
  };
  Arrangement A{FigureKind::tennenbaum, 0, a, b, square(zero, zero, ra),
                {square(zero, zero, rb), square(ra - rb, ra - rb, rb)}};
  detail::require_inside(A);
  return A;
}

// The six unit hexagon directions in lattice coordinates, counter-clockwise.
inline const std::vector<LatticePoint>& hexagon_directions() {
  static const std::vector<LatticePoint> dirs{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return dirs;
}

inline LatticePolygon regular_hexagon(const LatticePoint& center, const Rational& side) {
  std::vector<LatticePoint> verts;
  for (const auto& d : hexagon_directions()) verts.push_back(center + side * d);
  return {Basis::triangular, std::move(verts)};
}

// Side-a hexagon with a side-b hexagon tucked into each corner.
inline Arrangement build_hexagon6(const BigInt& a, const BigInt& b) {
  detail::require_positive(a, b);
  if (!(2 * b < a)) throw out_of_window("2b < a");
  if (!(a < 3 * b)) throw out_of_window("a < 3b");
  const Rational ra(a), rb(b);
  Arrangement A{FigureKind::hex6, 0, a, b, regular_hexagon({0, 0}, ra), {}};
  for (const auto& d : hexagon_directions()) A.smalls.push_back(regular_hexagon((ra - rb) * d, rb));
  detail::require_inside(A);
  return A;
}

inline LatticePolygon upward_triangle(const LatticePoint& corner, const Rational& side) {
  return {Basis::triangular, {corner, corner + LatticePoint{side, 0}, corner + LatticePoint{0, side}}};
}

// Overlap side t = (nb - a)/(n - 1).
inline Rational triangular_overlap_side(std::uint64_t n, const BigInt& a, const BigInt& b) {
  return Rational(BigInt(n) * b - a, BigInt(n - 1));
}

// Blank side s = b - 2t = (2a - (n+1)b)/(n - 1).
inline Rational triangular_blank_side(std::uint64_t n, const BigInt& a, const BigInt& b) {
  return Rational(2 * a - BigInt(n + 1) * b, BigInt(n - 1));
}

// n rows of side-b triangles inside the side-a triangle (0,0),(a,0),(0,a).
// Row i (1 = top) holds i triangles; consecutive ones are b - t apart.
inline Arrangement build_triangular(std::uint64_t n, const BigInt& a, const BigInt& b) {
  if (n < 2) throw bad_index("triangular arrangement needs n >= 2, got " + std::to_string(n));
  detail::require_positive(a, b);
  if (!(BigInt(n + 1) * b < 2 * a)) throw out_of_window("(n+1)b/2 < a");
  if (!(a < BigInt(n) * b)) throw out_of_window("a < nb");
  const Rational ra(a), rb(b);
  const Rational step = rb - triangular_overlap_side(n, a, b);
  Arrangement A{FigureKind::triangular, n, a, b, upward_triangle({0, 0}, ra), {}};
  A.smalls.reserve(n * (n + 1) / 2);
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j) {
      const LatticePoint corner{Rational(BigInt(j - 1)) * step,
                                (ra - rb) - Rational(BigInt(i - 1)) * step};
      A.smalls.push_back(upward_triangle(corner, rb));
    }
  }
  detail::require_inside(A);
  return A;
}

struct Region {
  std::vector<std::size_t> members;  // indices into Arrangement::smalls, ascending
  LatticePolygon polygon;
};

struct CoverageCensus {
  Rational big_area;
  Rational total_small_area;
  Rational union_area;
  Rational blank_area;
  Rational exactly2_area;
  Rational exactly3_area;
  std::vector<Region> pair_intersections;  // every nonempty P_i & P_j
  std::vector<Region> pairwise_regions;    // pair intersections not inside any triple
  std::vector<Region> triple_regions;
  int max_depth = 0;

  Rational excess_area() const { return total_small_area - union_area; }
};

// Inclusion-exclusion truncated at depth three. Every 4-wise intersection is
// computed and must be empty.
inline CoverageCensus coverage_census(const Arrangement& A) {
  const auto& P = A.smalls;
  const std::size_t k = P.size();
  std::vector<BoundingBox> boxes;
  boxes.reserve(k);
  for (const auto& p : P) boxes.push_back(p.bounds());

  CoverageCensus C;
  C.big_area = A.big.lattice_area();
  for (const auto& p : P) C.total_small_area += p.lattice_area();
  if (k > 0) C.max_depth = 1;

  Rational pair_sum, triple_sum;
  std::set<std::pair<std::size_t, std::size_t>> pairs_in_triples;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      auto ij = convex_intersection(P[i], P[j]);
      if (!ij) continue;
      pair_sum += ij->lattice_area();
      C.max_depth = std::max(C.max_depth, 2);
      const BoundingBox ij_box = ij->bounds();
      for (std::size_t l = j + 1; l < k; ++l) {
        if (!ij_box.overlaps(boxes[l])) continue;
        auto ijl = convex_intersection(*ij, P[l]);
        if (!ijl) continue;
        triple_sum += ijl->lattice_area();
        C.max_depth = 3;
        pairs_in_triples.insert({i, j});
        pairs_in_triples.insert({i, l});
        pairs_in_triples.insert({j, l});
        const BoundingBox ijl_box = ijl->bounds();
        for (std::size_t m = l + 1; m < k; ++m) {
          if (!ijl_box.overlaps(boxes[m])) continue;
          if (convex_intersection(*ijl, P[m]))
            throw depth_exceeded("polygons " + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(l) + "," + std::to_string(m) +
                                 " share a region of positive area");
        }
        C.triple_regions.push_back({{i, j, l}, std::move(*ijl)});
      }
      C.pair_intersections.push_back({{i, j}, std::move(*ij)});
    }
  }
  for (const auto& r : C.pair_intersections) {
    if (!pairs_in_triples.contains({r.members[0], r.members[1]})) C.pairwise_regions.push_back(r);
  }

  C.exactly3_area = triple_sum;
  C.exactly2_area = pair_sum - Rational(3) * triple_sum;
  C.union_area = C.total_small_area - pair_sum + triple_sum;
  C.blank_area = C.big_area - C.union_area;
  return C;
}

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

class mismatch_report : public error {
 public:
  explicit mismatch_report(std::vector<IdentityCheck> failed)
      : error(describe(failed)), failed_(std::move(failed)) {}
  const std::vector<IdentityCheck>& failed() const noexcept { return failed_; }

 private:
  static std::string describe(const std::vector<IdentityCheck>& failed) {
    std::string msg = "figure identities failed:";
    for (const auto& c : failed) msg += "\n  " + c.name + ": " + c.lhs + " != " + c.rhs;
    return msg;
  }
  std::vector<IdentityCheck> failed_;
};

struct FigureReport {
  std::vector<IdentityCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  std::vector<IdentityCheck> failures() const {
    std::vector<IdentityCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [](const auto& c) { return !c.pass; });
    return out;
  }
  void ensure() const {
    if (!passed()) throw mismatch_report(failures());
  }
};

// (total small area) - (big area) = factor * (a^2 - N b^2).
inline Rational family_area_factor(FigureKind kind) {
  switch (kind) {
    case FigureKind::tennenbaum: return Rational(-1);
    case FigureKind::hex6: return Rational(-3);
    case FigureKind::triangular: return Rational(-1, 2);
  }
  return Rational();
}

inline std::uint64_t figure_radicand(const Arrangement& A) {
  switch (A.kind) {
    case FigureKind::tennenbaum: return 2;
    case FigureKind::hex6: return 6;
    case FigureKind::triangular: return triangular_number(A.n).convert_to<std::uint64_t>();
  }
  return 0;
}

namespace detail {

inline bool all_sides_equal(const LatticePolygon& p, const Rational& side_sq) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.edge_length_sq(i) != side_sq) return false;
  }
  return true;
}

inline bool is_equilateral_triangle(const LatticePolygon& p, const Rational& side) {
  return p.size() == 3 && all_sides_equal(p, square(side));
}

// Four equal sides and a diagonal equal to the side: two equilateral
// triangles glued along that diagonal.
inline bool is_sixty_degree_rhombus(const LatticePolygon& p, const Rational& side) {
  if (p.size() != 4 || !all_sides_equal(p, square(side))) return false;
  const auto& v = p.vertices();
  return squared_length(p.basis(), v[2] - v[0]) == square(side) ||
         squared_length(p.basis(), v[3] - v[1]) == square(side);
}

inline bool is_square(const LatticePolygon& p, const Rational& side) {
  if (p.size() != 4 || !all_sides_equal(p, square(side))) return false;
  const auto& v = p.vertices();
  const Rational diag = Rational(2) * square(side);
  return squared_length(p.basis(), v[2] - v[0]) == diag &&
         squared_length(p.basis(), v[3] - v[1]) == diag;
}

}  // namespace detail

// Checks the census against the closed forms of the construction: region
// counts and shapes, excess and blank areas, and the area balance against
// the defect a^2 - N b^2.
inline FigureReport verify_figure(const Arrangement& A, const CoverageCensus& C) {
  FigureReport report;
  auto check = [&report](std::string name, const auto& lhs, const auto& rhs) {
    report.checks.push_back({std::move(name), to_string(lhs), to_string(rhs), lhs == rhs});
  };
  auto check_flag = [&report](std::string name, bool ok) {
    report.checks.push_back({std::move(name), ok ? "true" : "false", "true", ok});
  };
  auto count = [](std::size_t x) { return BigInt(x); };

  const Rational ra(A.a), rb(A.b);
  const Rational excess = C.exactly2_area + Rational(2) * C.exactly3_area;

  check("big = union + blank", C.big_area, C.union_area + C.blank_area);
  check("total = union + excess", C.total_small_area, C.union_area + excess);
  check_flag("blank >= 0", C.blank_area.sign() >= 0);
  check_flag("max_depth <= 3", C.max_depth <= 3);
  bool inside = true;
  for (const auto& s : A.smalls) inside = inside && A.big.contains(s);
  check_flag("smalls inside big", inside);

  switch (A.kind) {
    case FigureKind::tennenbaum: {
      const Rational overlap = Rational(2) * rb - ra;
      const Rational blank_side = ra - rb;
      check("pairwise region count", count(C.pairwise_regions.size()), count(1));
      check("triple region count", count(C.triple_regions.size()), count(0));
      bool shapes = true;
      for (const auto& r : C.pair_intersections) shapes = shapes && detail::is_square(r.polygon, overlap);
      check_flag("overlap is a square of side 2b-a", shapes);
      check("excess = (2b-a)^2", excess, square(overlap));
      check("blank = 2(a-b)^2", C.blank_area, Rational(2) * square(blank_side));
      break;
    }
    case FigureKind::hex6: {
      const Rational orange = Rational(3) * rb - ra;
      const Rational white = ra - Rational(2) * rb;
      check("pairwise region count", count(C.pairwise_regions.size()), count(6));
      check("triple region count", count(C.triple_regions.size()), count(0));
      bool shapes = true;
      for (const auto& r : C.pair_intersections)
        shapes = shapes && detail::is_sixty_degree_rhombus(r.polygon, orange);
      check_flag("overlaps are rhombi of two equilateral triangles of side 3b-a", shapes);
      check("excess = 12 * orange triangle", excess, Rational(12) * square(orange) / Rational(2));
      check("blank = 18 * white triangle", C.blank_area, Rational(18) * square(white) / Rational(2));
      break;
    }
    case FigureKind::triangular: {
      const std::uint64_t n = A.n;
      const Rational t = triangular_overlap_side(n, A.a, A.b);
      const Rational s = triangular_blank_side(n, A.a, A.b);
      const BigInt doubly = 3 * BigInt(n - 1);
      const BigInt triply = BigInt(n - 2) * (n - 1) / 2;
      std::set<std::vector<LatticePoint>> distinct;
      bool shapes = true;
      for (const auto& r : C.pair_intersections) {
        shapes = shapes && detail::is_equilateral_triangle(r.polygon, t);
        distinct.insert(r.polygon.vertices());
      }
      for (const auto& r : C.triple_regions) {
        shapes = shapes && detail::is_equilateral_triangle(r.polygon, t);
        distinct.insert(r.polygon.vertices());
      }
      check_flag("every overlap is equilateral with side t", shapes);
      check("distinct overlap triangles", count(distinct.size()), BigInt(doubly + triply));
      check("pairwise region count", count(C.pairwise_regions.size()), doubly);
      check("triple region count", count(C.triple_regions.size()), triply);
      check("excess = (n-1)(n+1) t^2/2", excess,
            Rational(BigInt(BigInt(n - 1) * (n + 1))) * square(t) / Rational(2));
      check("blank = (n(n-1)/2) s^2/2", C.blank_area,
            Rational(BigInt(BigInt(n) * (n - 1) / 2)) * square(s) / Rational(2));
      break;
    }
  }

  const Rational E(defect(A.a, A.b, figure_radicand(A)));
  check("excess - blank = total - big", excess - C.blank_area, C.total_small_area - C.big_area);
  check("total - big = factor * E", C.total_small_area - C.big_area,
        family_area_factor(A.kind) * E);
  return report;
}

namespace detail {

inline Rational measured_sqrt(const Rational& x, const std::string& what) {
  auto r = exact_sqrt(x);
  if (!r) throw mismatch_report({{what + " is a perfect square", x.str(), "square", false}});
  return *r;
}

inline Rational measured_side(const CoverageCensus& C) {
  if (C.pair_intersections.empty())
    throw mismatch_report({{"overlap region present", "0", ">=1", false}});
  return measured_sqrt(C.pair_intersections.front().polygon.edge_length_sq(0), "overlap side^2");
}

inline BigInt as_integer(const Rational& x, const std::string& what) {
  if (!x.is_integer()) throw mismatch_report({{what + " is an integer", x.str(), "integer", false}});
  return x.num();
}

}  // namespace detail

// Next descent pair read from measured overlap and blank sizes.
inline std::pair<BigInt, BigInt> census_to_descent(const Arrangement& A, const CoverageCensus& C) {
  const Rational t = detail::measured_side(C);
  Rational a_next, b_next;
  switch (A.kind) {
    case FigureKind::tennenbaum: {
      const Rational w = detail::measured_sqrt(C.blank_area / Rational(2), "blank square side^2");
      a_next = t;
      b_next = w;
      break;
    }
    case FigureKind::hex6: {
      const Rational s = detail::measured_sqrt(C.blank_area / Rational(9), "white triangle side^2");
      a_next = Rational(3) * s;
      b_next = t;
      break;
    }
    case FigureKind::triangular: {
      const std::uint64_t n = A.n;
      const Rational blanks(BigInt(BigInt(n) * (n - 1) / 2));
      const Rational s =
          detail::measured_sqrt(Rational(2) * C.blank_area / blanks, "blank triangle side^2");
      const Rational rn1(BigInt(n - 1));
      if (n % 2 == 0) {
        a_next = Rational(BigInt(n / 2)) * rn1 * s;
        b_next = rn1 * t;
      } else {
        a_next = Rational(BigInt((n + 1) / 2)) * rn1 * t;
        b_next = rn1 * s / Rational(2);
      }
      break;
    }
  }
  return {detail::as_integer(a_next, "a'"), detail::as_integer(b_next, "b'")};
}

}  // namespace irrat
