/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <utility>
#include <vector>

#include "pentaspace/rational.hpp"

namespace pentaspace {

/// Closed half-plane a*x + b*y >= c with (a, b) != (0, 0).
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  HalfPlane(Rational a_, Rational b_, Rational c_);

  bool contains(const Vec2Q& point) const;
};

/// Strictly convex polygon with rational vertices in counterclockwise order.
///
/// "Lattice polygon" (all vertices integral) is a queryable property, not a
/// construction requirement; the lattice-counting operations that need it
/// check it explicitly.
class ConvexLatticePolygon {
 public:
  /// Validates: >= 3 vertices, counterclockwise, strictly convex (every
  /// consecutive vertex triple turns strictly left). Throws
  /// Error(invalid_argument) otherwise.
  explicit ConvexLatticePolygon(std::vector<Vec2Q> ccw_vertices);

  const std::vector<Vec2Q>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  bool is_lattice() const;

  bool operator==(const ConvexLatticePolygon& other) const = default;

 private:
  std::vector<Vec2Q> vertices_;
};

/// Intersect closed half-planes into a bounded convex polygon.
///
/// Pairwise line intersection followed by containment filtering; candidate
/// vertices are deduplicated, ordered counterclockwise and rotated so the
/// lexicographically smallest vertex comes first. Redundant planes contribute
/// no vertices and are dropped implicitly. Throws Error(empty_or_unbounded)
/// when the region is unbounded or has empty interior.
ConvexLatticePolygon intersect_half_planes(const std::vector<HalfPlane>& planes);

/// Exact shoelace area (positive for the CCW polygons this class admits).
Rational area(const ConvexLatticePolygon& polygon);

/// Inward edge half-planes of the polygon: the point set of the polygon is
/// exactly the set satisfying all of them.
std::vector<HalfPlane> edge_half_planes(const ConvexLatticePolygon& polygon);

/// Lattice points on the boundary: sum of gcd(|dx|, |dy|) over edges.
/// Throws Error(non_lattice_polygon) when a vertex is non-integral.
Int boundary_lattice_count(const ConvexLatticePolygon& polygon);

/// Independent lattice-count oracle: scan integer columns of the bounding
/// box and count points satisfying every edge half-plane exactly, boundary
/// included. Valid for arbitrary rational vertices.
Int lattice_count_brute(const ConvexLatticePolygon& polygon);

/// All lattice points of the closed polygon, column by column, y ascending.
std::vector<std::pair<Int, Int>> lattice_points(const ConvexLatticePolygon& polygon);

/// Pick's theorem count: area + (boundary points)/2 + 1 = total lattice
/// points including the boundary. Throws Error(non_lattice_polygon) for
/// non-integral vertices and Error(internal_error) if the sum fails to be an
/// integer.
Int pick_count(const ConvexLatticePolygon& polygon);

}  // namespace pentaspace
