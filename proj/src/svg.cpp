/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/svg.hpp"

#include <sstream>

#include "pentaspace/polygon.hpp"

namespace pentaspace {

std::string decimal_string(const Rational& r, unsigned places) {
  Int num = numerator(r);
  Int den = denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  std::string text = sign + Int(num / den).str();
  Int rem = num % den;
  std::string frac;
  for (unsigned k = 0; k < places && rem != 0; ++k) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<int>(Int(rem / den)));
    rem %= den;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) text += "." + frac;
  return text;
}

namespace {

constexpr int kScale = 40;   // user units per lattice step
constexpr int kMargin = 40;  // one lattice step of padding
constexpr int kDotRadius = 4;

}  // namespace

std::string render_polytope_svg(const MomentPolytope& mp) {
  const Rational& x0 = mp.d1_min;
  const Rational& y1 = mp.d2_max;
  auto map_x = [&](const Rational& x) { return (x - x0) * kScale + kMargin; };
  auto map_y = [&](const Rational& y) { return (y1 - y) * kScale + kMargin; };
  const Rational width = (mp.d1_max - mp.d1_min) * kScale + 2 * kMargin;
  const Rational height = (mp.d2_max - mp.d2_min) * kScale + 2 * kMargin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << decimal_string(width) << "\" height=\"" << decimal_string(height)
      << "\" viewBox=\"0 0 " << decimal_string(width) << " " << decimal_string(height)
      << "\">\n";

  svg << "  <path d=\"";
  const auto& vertices = mp.polygon.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    svg << (i == 0 ? "M " : " L ") << decimal_string(map_x(vertices[i].x)) << " "
        << decimal_string(map_y(vertices[i].y));
  }
  svg << " Z\" fill=\"#e8f0fe\" stroke=\"#1a56c4\" stroke-width=\"2\"/>\n";

  for (const auto& [px, py] : lattice_points(mp.polygon)) {
    svg << "  <circle cx=\"" << decimal_string(map_x(Rational(px))) << "\" cy=\""
        << decimal_string(map_y(Rational(py))) << "\" r=\"" << kDotRadius
        << "\" fill=\"#1a2633\"/>\n";
  }

  for (CutCorner corner : mp.cut_corners) {
    Rational cx, cy;
    int dx = 0, dy = 0;
    const char* anchor = "start";
    switch (corner) {
      case CutCorner::low_low:
        cx = mp.d1_min;
        cy = mp.d2_min;
        dx = 6;
        dy = -6;
        break;
      case CutCorner::high_low:
        cx = mp.d1_max;
        cy = mp.d2_min;
        dx = -6;
        dy = -6;
        anchor = "end";
        break;
      case CutCorner::low_high:
        cx = mp.d1_min;
        cy = mp.d2_max;
        dx = 6;
        dy = 14;
        break;
    }
    svg << "  <text x=\"" << decimal_string(map_x(cx) + dx) << "\" y=\""
        << decimal_string(map_y(cy) + dy) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#a33\">cut: "
        << cut_corner_name(corner) << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pentaspace
