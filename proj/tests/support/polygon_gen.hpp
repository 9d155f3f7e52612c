// Test support: convex lattice polygons as hulls of random integer points,
// built with a monotone-chain hull that is independent of the library's
// half-plane machinery.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pentaspace/polygon.hpp"

namespace pentaspace::testsupport {

using IntPoint = std::pair<long long, long long>;

inline long long cross(const IntPoint& o, const IntPoint& a, const IntPoint& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (b.first - o.first) * (a.second - o.second);
}

// Strict convex hull (collinear points dropped), counterclockwise; nullopt
// when the hull degenerates to fewer than 3 corners.
inline std::optional<ConvexLatticePolygon> hull_polygon(std::vector<IntPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n < 3) return std::nullopt;

  std::vector<IntPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point equals the first
  if (hull.size() < 3) return std::nullopt;

  std::vector<Vec2Q> vertices;
  vertices.reserve(hull.size());
  for (const IntPoint& p : hull) vertices.push_back({Rational(p.first), Rational(p.second)});
  return ConvexLatticePolygon(std::move(vertices));
}

inline std::vector<IntPoint> random_points(std::mt19937_64& rng, std::size_t count,
                                           long long lo, long long hi) {
  const auto range = static_cast<unsigned long long>(hi - lo + 1);
  std::vector<IntPoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long long x = lo + static_cast<long long>(rng() % range);
    const long long y = lo + static_cast<long long>(rng() % range);
    points.emplace_back(x, y);
  }
  return points;
}

}  // namespace pentaspace::testsupport
