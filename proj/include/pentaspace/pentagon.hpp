/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pentaspace/polygon.hpp"
#include "pentaspace/rational.hpp"

namespace pentaspace {

// Five positive edge lengths of a pentagon linkage.
class EdgeLengths {
 public:
  explicit EdgeLengths(std::array<Rational, 5> values);
  EdgeLengths(Rational a1, Rational a2, Rational a3, Rational a4, Rational a5);

  static EdgeLengths from_strings(const std::array<std::string, 5>& texts);
  static EdgeLengths regular() { return {1, 1, 1, 1, 1}; }

  // 0-based access: operator[](0) is a1.
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::array<Rational, 5>& values() const { return values_; }

  Rational sum() const;
  Rational sum_of_squares() const;
  bool is_integral() const;

  bool operator==(const EdgeLengths&) const = default;

 private:
  std::array<Rational, 5> values_;
};

// No two edges together have the same total length as the remaining three.
bool is_smooth(const EdgeLengths& a);

// Every pair of edges is strictly shorter than the remaining three combined.
bool is_nearly_regular(const EdgeLengths& a);

// a1 != a2 and a4 != a5, so both diagonal lengths vary over an interval.
bool is_toric_generic(const EdgeLengths& a);

// Corners of the bounding rectangle that get truncated by a diagonal
// constraint; the high-high corner is never cut for nearly-regular lengths.
enum class CutCorner { low_low, high_low, low_high };

std::string_view cut_corner_name(CutCorner corner);

// Image of the two diagonal lengths (d1, d2): a rectangle with up to three
// corners cut off by the triangle inequalities linking d1, d2 and a3.
struct MomentPolytope {
  ConvexLatticePolygon polygon;
  std::vector<CutCorner> cut_corners;
  bool swapped_a1_a2;
  bool swapped_a4_a5;
  Rational d1_min;
  Rational d1_max;
  Rational d2_min;
  Rational d2_max;
};

// Builds the polytope for nearly-regular, toric-generic edge lengths.
// Throws not_nearly_regular / not_toric_generic when the preconditions fail
// and shape_assertion if the result does not have exactly 7 vertices.
MomentPolytope moment_polytope(const EdgeLengths& a);

}  // namespace pentaspace
