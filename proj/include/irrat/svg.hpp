#pragma once

// SVG reproductions of the arrangements. This is the only place where exact
// coordinates become floating point, and only for drawing.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "irrat/errors.hpp"
#include "irrat/geometry.hpp"

namespace irrat {

struct SvgPolygon {
  std::vector<std::pair<double, double>> points;
  int depth = 0;  // 0 blank, 1 single cover, 2 double, 3 triple
};

struct SvgScene {
  double min_x = 0, min_y = 0, width = 0, height = 0;
  std::vector<SvgPolygon> polygons;  // drawn in order
};

inline const char* depth_fill(int depth) {
  switch (depth) {
    case 0: return "white";
    case 1: return "lightblue";
    case 2: return "orange";
    default: return "red";
  }
}

namespace detail {

inline constexpr double render_size = 400.0;
inline constexpr double half_sqrt3 = 0.8660254;

// Lattice point scaled by 1/a, then mapped to screen space with y down.
inline std::pair<double, double> to_screen(Basis basis, const LatticePoint& p, const Rational& a) {
  const double u = (p.u / a).to_double();
  const double v = (p.v / a).to_double();
  const double x = basis == Basis::triangular ? u + v / 2 : u;
  const double y = basis == Basis::triangular ? v * half_sqrt3 : v;
  return {x * render_size, -y * render_size};
}

inline SvgPolygon scene_polygon(const LatticePolygon& poly, const Rational& a, int depth) {
  SvgPolygon out;
  out.depth = depth;
  for (const auto& p : poly.vertices()) out.points.push_back(to_screen(poly.basis(), p, a));
  return out;
}

inline std::string fixed6(double x) {
  if (x == 0) x = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

// Big polygon in white, covers in light blue, then the exactly-double and
// triple regions on top. Blank area shows through as white.
inline SvgScene build_scene(const Arrangement& A, const CoverageCensus& C) {
  const Rational a(A.a);
  SvgScene scene;
  scene.polygons.push_back(detail::scene_polygon(A.big, a, 0));
  for (const auto& s : A.smalls) scene.polygons.push_back(detail::scene_polygon(s, a, 1));
  for (const auto& r : C.pairwise_regions)
    scene.polygons.push_back(detail::scene_polygon(r.polygon, a, 2));
  for (const auto& r : C.triple_regions)
    scene.polygons.push_back(detail::scene_polygon(r.polygon, a, 3));

  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool first = true;
  for (const auto& [x, y] : scene.polygons.front().points) {
    if (first || x < lo_x) lo_x = x;
    if (first || y < lo_y) lo_y = y;
    if (first || x > hi_x) hi_x = x;
    if (first || y > hi_y) hi_y = y;
    first = false;
  }
  constexpr double margin = 10;
  scene.min_x = lo_x - margin;
  scene.min_y = lo_y - margin;
  scene.width = hi_x - lo_x + 2 * margin;
  scene.height = hi_y - lo_y + 2 * margin;
  return scene;
}

inline std::string render_svg(const SvgScene& scene) {
  using detail::fixed6;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fixed6(scene.width) + "\" height=\"" + fixed6(scene.height) + "\" viewBox=\"" +
         fixed6(scene.min_x) + " " + fixed6(scene.min_y) + " " + fixed6(scene.width) + " " +
         fixed6(scene.height) + "\">\n";
  for (const auto& poly : scene.polygons) {
    out += "  <polygon data-depth=\"" + std::to_string(poly.depth) + "\" fill=\"" +
           depth_fill(poly.depth) + "\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
      if (i > 0) out += " ";
      out += fixed6(poly.points[i].first) + "," + fixed6(poly.points[i].second);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

inline void emit_svg(const SvgScene& scene, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw error("cannot open " + path.string() + " for writing");
  file << render_svg(scene);
  file.close();
  if (!file) throw error("failed writing " + path.string());
}

}  // namespace irrat
