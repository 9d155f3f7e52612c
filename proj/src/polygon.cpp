/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/polygon.hpp"

#include <algorithm>
#include <tuple>

namespace pentaspace {

namespace {

// Integer form A*x + B*y >= C of a half-plane, scaled to primitive
// coefficients. Keeps the hot paths (pairwise intersection, containment,
// column scans) in pure integer arithmetic.
struct IntPlane {
  Int a;
  Int b;
  Int c;
};

IntPlane to_int_plane(const HalfPlane& plane) {
  Int scale = boost::multiprecision::lcm(
      boost::multiprecision::lcm(denominator(plane.a), denominator(plane.b)),
      denominator(plane.c));
  Int a = numerator(plane.a) * (scale / denominator(plane.a));
  Int b = numerator(plane.b) * (scale / denominator(plane.b));
  Int c = numerator(plane.c) * (scale / denominator(plane.c));
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return {a, b, c};
}

// Homogeneous point (x, y, w) with w > 0 representing (x/w, y/w).
struct HomPoint {
  Int x;
  Int y;
  Int w;
};

void make_primitive(HomPoint& p) {
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(p.x), abs(p.y)), p.w);
  if (g > 1) {
    p.x /= g;
    p.y /= g;
    p.w /= g;
  }
}

// Primitive direction of a plane normal, for the boundedness test.
std::pair<Int, Int> primitive_normal(const IntPlane& p) {
  Int g = boost::multiprecision::gcd(abs(p.a), abs(p.b));
  return {p.a / g, p.b / g};
}

int upper_half(const Int& x, const Int& y) {
  // 0 for angle in [0, pi), 1 for [pi, 2*pi).
  return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
}

// True when u precedes v counterclockwise starting from direction (1, 0).
bool angle_less(const std::pair<Int, Int>& u, const std::pair<Int, Int>& v) {
  int hu = upper_half(u.first, u.second);
  int hv = upper_half(v.first, v.second);
  if (hu != hv) return hu < hv;
  Int cross = u.first * v.second - v.first * u.second;
  return cross > 0;
}

// The region is bounded iff the constraint normals positively span the
// plane, i.e. sorted by angle every consecutive gap is strictly below pi.
bool normals_span_plane(const std::vector<IntPlane>& planes) {
  std::vector<std::pair<Int, Int>> dirs;
  dirs.reserve(planes.size());
  for (const auto& p : planes) dirs.push_back(primitive_normal(p));
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  if (dirs.size() < 3) return false;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& u = dirs[i];
    const auto& v = dirs[(i + 1) % dirs.size()];
    Int cross = u.first * v.second - v.first * u.second;
    if (cross <= 0) return false;  // gap of pi or more
  }
  return true;
}

Rational shoelace_twice(const std::vector<Vec2Q>& vs) {
  Rational sum = 0;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2Q& p = vs[i];
    const Vec2Q& q = vs[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

}  // namespace

HalfPlane::HalfPlane(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::invalid_argument, "half-plane normal must be nonzero");
  }
}

bool HalfPlane::contains(const Vec2Q& point) const {
  return a * point.x + b * point.y >= c;
}

ConvexLatticePolygon::ConvexLatticePolygon(std::vector<Vec2Q> ccw_vertices)
    : vertices_(std::move(ccw_vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorCode::invalid_argument, "polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2Q& a = vertices_[i];
    const Vec2Q& b = vertices_[(i + 1) % n];
    const Vec2Q& c = vertices_[(i + 2) % n];
    Rational cross = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    if (cross <= 0) {
      throw Error(ErrorCode::invalid_argument,
                  "polygon must be strictly convex and counterclockwise");
    }
  }
}

bool ConvexLatticePolygon::is_lattice() const {
  for (const Vec2Q& v : vertices_) {
    if (!is_integer(v.x) || !is_integer(v.y)) return false;
  }
  return true;
}

ConvexLatticePolygon intersect_half_planes(const std::vector<HalfPlane>& planes) {
  if (planes.size() < 3) {
    throw Error(ErrorCode::empty_or_unbounded,
                "fewer than 3 half-planes cannot bound a polygon");
  }
  std::vector<IntPlane> ip;
  ip.reserve(planes.size());
  for (const auto& p : planes) ip.push_back(to_int_plane(p));

  if (!normals_span_plane(ip)) {
    throw Error(ErrorCode::empty_or_unbounded, "half-plane intersection is unbounded");
  }

  const std::size_t n = ip.size();
  std::vector<HomPoint> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Int det = ip[i].a * ip[j].b - ip[j].a * ip[i].b;
      if (det == 0) continue;
      HomPoint pt{ip[i].c * ip[j].b - ip[j].c * ip[i].b,
                  ip[i].a * ip[j].c - ip[j].a * ip[i].c, det};
      if (pt.w < 0) {
        pt.x = -pt.x;
        pt.y = -pt.y;
        pt.w = -pt.w;
      }
      bool inside = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (ip[k].a * pt.x + ip[k].b * pt.y - ip[k].c * pt.w < 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        make_primitive(pt);
        candidates.push_back(std::move(pt));
      }
    }
  }

  auto tie = [](const HomPoint& p) { return std::tie(p.x, p.y, p.w); };
  std::sort(candidates.begin(), candidates.end(),
            [&](const HomPoint& p, const HomPoint& q) { return tie(p) < tie(q); });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [&](const HomPoint& p, const HomPoint& q) {
                                 return tie(p) == tie(q);
                               }),
                   candidates.end());

  if (candidates.size() < 3) {
    throw Error(ErrorCode::empty_or_unbounded, "half-plane intersection has empty interior");
  }

  std::vector<Vec2Q> points;
  points.reserve(candidates.size());
  for (const auto& c : candidates) {
    points.push_back({Rational(c.x, c.w), Rational(c.y, c.w)});
  }

  // CCW order around the centroid (interior, since the points are the corner
  // set of a bounded convex region).
  Rational cx = 0, cy = 0;
  for (const auto& p : points) {
    cx += p.x;
    cy += p.y;
  }
  cx /= int(points.size());
  cy /= int(points.size());
  auto half = [&](const Vec2Q& p) {
    Rational dx = p.x - cx, dy = p.y - cy;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(points.begin(), points.end(), [&](const Vec2Q& p, const Vec2Q& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    Rational cross = (p.x - cx) * (q.y - cy) - (q.x - cx) * (p.y - cy);
    return cross > 0;
  });

  // Merge consecutive collinear points (wraparound included).
  std::vector<Vec2Q> corners;
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2Q& a = points[(i + m - 1) % m];
    const Vec2Q& b = points[i];
    const Vec2Q& c = points[(i + 1) % m];
    Rational cross = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    if (cross != 0) corners.push_back(b);
  }
  if (corners.size() < 3) {
    throw Error(ErrorCode::empty_or_unbounded, "half-plane intersection has empty interior");
  }

  auto lowest = std::min_element(corners.begin(), corners.end(),
                                 [](const Vec2Q& p, const Vec2Q& q) {
                                   return std::tie(p.x, p.y) < std::tie(q.x, q.y);
                                 });
  std::rotate(corners.begin(), lowest, corners.end());

  return ConvexLatticePolygon(std::move(corners));
}

Rational area(const ConvexLatticePolygon& polygon) {
  return shoelace_twice(polygon.vertices()) / 2;
}

std::vector<HalfPlane> edge_half_planes(const ConvexLatticePolygon& polygon) {
  const auto& vs = polygon.vertices();
  std::vector<HalfPlane> planes;
  planes.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vec2Q& p = vs[i];
    const Vec2Q& q = vs[(i + 1) % vs.size()];
    Rational a = p.y - q.y;
    Rational b = q.x - p.x;
    planes.emplace_back(a, b, a * p.x + b * p.y);
  }
  return planes;
}

Int boundary_lattice_count(const ConvexLatticePolygon& polygon) {
  if (!polygon.is_lattice()) {
    throw Error(ErrorCode::non_lattice_polygon,
                "boundary lattice count requires integral vertices");
  }
  const auto& vs = polygon.vertices();
  Int total = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vec2Q& p = vs[i];
    const Vec2Q& q = vs[(i + 1) % vs.size()];
    Int dx = abs(numerator(q.x) - numerator(p.x));
    Int dy = abs(numerator(q.y) - numerator(p.y));
    total += boost::multiprecision::gcd(dx, dy);
  }
  return total;
}

namespace {

// Shared column scan: for each integer x in the bounding range, derive the
// exact integer y-interval from the edge half-planes and either count it or
// emit its points.
template <typename ColumnFn>
void scan_columns(const ConvexLatticePolygon& polygon, ColumnFn&& emit) {
  const auto& vs = polygon.vertices();
  std::vector<IntPlane> planes;
  planes.reserve(vs.size());
  for (const HalfPlane& hp : edge_half_planes(polygon)) planes.push_back(to_int_plane(hp));

  Rational xmin = vs[0].x, xmax = vs[0].x;
  for (const auto& v : vs) {
    if (v.x < xmin) xmin = v.x;
    if (v.x > xmax) xmax = v.x;
  }
  const Int x_lo = ceil_rational(xmin);
  const Int x_hi = floor_rational(xmax);

  for (Int x = x_lo; x <= x_hi; ++x) {
    bool feasible = true;
    Int y_lo, y_hi;
    bool has_lo = false, has_hi = false;
    for (const auto& pl : planes) {
      Int rhs = pl.c - pl.a * x;
      if (pl.b == 0) {
        if (rhs > 0) {
          feasible = false;
          break;
        }
      } else if (pl.b > 0) {
        Int bound = ceil_div(rhs, pl.b);
        if (!has_lo || bound > y_lo) {
          y_lo = bound;
          has_lo = true;
        }
      } else {
        Int bound = floor_div(rhs, pl.b);
        if (!has_hi || bound < y_hi) {
          y_hi = bound;
          has_hi = true;
        }
      }
    }
    if (!feasible || !has_lo || !has_hi || y_hi < y_lo) continue;
    emit(x, y_lo, y_hi);
  }
}

}  // namespace

Int lattice_count_brute(const ConvexLatticePolygon& polygon) {
  Int total = 0;
  scan_columns(polygon, [&](const Int&, const Int& y_lo, const Int& y_hi) {
    total += y_hi - y_lo + 1;
  });
  return total;
}

std::vector<std::pair<Int, Int>> lattice_points(const ConvexLatticePolygon& polygon) {
  std::vector<std::pair<Int, Int>> points;
  scan_columns(polygon, [&](const Int& x, const Int& y_lo, const Int& y_hi) {
    for (Int y = y_lo; y <= y_hi; ++y) points.emplace_back(x, y);
  });
  return points;
}

Int pick_count(const ConvexLatticePolygon& polygon) {
  const Rational total = area(polygon) + Rational(boundary_lattice_count(polygon), 2) + 1;
  if (!is_integer(total)) {
    throw Error(ErrorCode::internal_error,
                "Pick sum is not an integer: " + to_string(total));
  }
  return numerator(total);
}

}  // namespace pentaspace
