/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/pentagon.hpp"

#include <algorithm>
#include <utility>

#include "pentaspace/error.hpp"

namespace pentaspace {

EdgeLengths::EdgeLengths(std::array<Rational, 5> values) : values_(std::move(values)) {
  for (const Rational& v : values_) {
    if (v <= 0) {
      throw Error(ErrorCode::invalid_argument, "edge lengths must be strictly positive");
    }
  }
}

EdgeLengths::EdgeLengths(Rational a1, Rational a2, Rational a3, Rational a4, Rational a5)
    : EdgeLengths(std::array<Rational, 5>{std::move(a1), std::move(a2), std::move(a3),
                                          std::move(a4), std::move(a5)}) {}

EdgeLengths EdgeLengths::from_strings(const std::array<std::string, 5>& texts) {
  std::array<Rational, 5> values;
  for (std::size_t i = 0; i < 5; ++i) values[i] = rational_from_string(texts[i]);
  return EdgeLengths(std::move(values));
}

Rational EdgeLengths::sum() const {
  Rational s = 0;
  for (const Rational& v : values_) s += v;
  return s;
}

Rational EdgeLengths::sum_of_squares() const {
  Rational s = 0;
  for (const Rational& v : values_) s += v * v;
  return s;
}

bool EdgeLengths::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return is_integer(v); });
}

bool is_smooth(const EdgeLengths& a) {
  const Rational total = a.sum();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      // a_i + a_j == rest  <=>  2*(a_i + a_j) == total
      if (2 * (a[i] + a[j]) == total) return false;
    }
  }
  return true;
}

bool is_nearly_regular(const EdgeLengths& a) {
  const Rational total = a.sum();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (2 * (a[i] + a[j]) >= total) return false;
    }
  }
  return true;
}

bool is_toric_generic(const EdgeLengths& a) { return a[0] != a[1] && a[3] != a[4]; }

std::string_view cut_corner_name(CutCorner corner) {
  switch (corner) {
    case CutCorner::low_low:
      return "low-low";
    case CutCorner::high_low:
      return "high-low";
    case CutCorner::low_high:
      return "low-high";
  }
  return "unknown";
}

MomentPolytope moment_polytope(const EdgeLengths& a) {
  if (!is_nearly_regular(a)) {
    throw Error(ErrorCode::not_nearly_regular,
                "moment polytope requires nearly-regular edge lengths");
  }
  if (!is_toric_generic(a)) {
    throw Error(ErrorCode::not_toric_generic,
                "moment polytope requires a1 != a2 and a4 != a5");
  }

  const bool swap12 = a[0] < a[1];
  const bool swap45 = a[3] < a[4];
  const Rational& a1 = swap12 ? a[1] : a[0];
  const Rational& a2 = swap12 ? a[0] : a[1];
  const Rational& a3 = a[2];
  const Rational& a4 = swap45 ? a[4] : a[3];
  const Rational& a5 = swap45 ? a[3] : a[4];

  const Rational d1_min = a1 - a2;
  const Rational d1_max = a1 + a2;
  const Rational d2_min = a4 - a5;
  const Rational d2_max = a4 + a5;

  // d1 range, d2 range, and the triangle inequalities among d1, d2, a3.
  std::vector<HalfPlane> planes;
  planes.reserve(7);
  planes.emplace_back(1, 0, d1_min);
  planes.emplace_back(-1, 0, -d1_max);
  planes.emplace_back(0, 1, d2_min);
  planes.emplace_back(0, -1, -d2_max);
  planes.emplace_back(1, 1, a3);
  planes.emplace_back(1, -1, -a3);
  planes.emplace_back(-1, 1, -a3);

  ConvexLatticePolygon polygon = intersect_half_planes(planes);

  std::vector<CutCorner> cuts;
  if (d1_min + d2_min < a3) cuts.push_back(CutCorner::low_low);
  if (d1_max - d2_min > a3) cuts.push_back(CutCorner::high_low);
  if (d2_max - d1_min > a3) cuts.push_back(CutCorner::low_high);

  if (polygon.size() != 7 || cuts.size() != 3) {
    throw Error(ErrorCode::shape_assertion,
                "expected a rectangle with exactly three corners cut (7 vertices), got " +
                    std::to_string(polygon.size()) + " vertices and " +
                    std::to_string(cuts.size()) + " cuts");
  }

  return MomentPolytope{std::move(polygon), std::move(cuts), swap12, swap45,
                        d1_min,             d1_max,          d2_min, d2_max};
}

}  // namespace pentaspace
