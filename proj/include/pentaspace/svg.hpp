/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "pentaspace/pentagon.hpp"
#include "pentaspace/rational.hpp"

namespace pentaspace {

// Decimal rendering of a rational without going through floating point;
// non-terminating expansions are truncated after `places` digits.
std::string decimal_string(const Rational& r, unsigned places = 6);

// SVG 1.1 document: one filled path for the polytope, one dot per enclosed
// lattice point, and a label at each cut corner. 40 user units per lattice
// step, y axis flipped for screen orientation, dot radius 1/10 step.
std::string render_polytope_svg(const MomentPolytope& mp);

}  // namespace pentaspace
