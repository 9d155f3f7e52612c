/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pentaspace/error.hpp"

namespace pentaspace {

// Exact scalar types. Every quantity in the core is an Int or a Rational;
// the core performs no floating-point arithmetic at all. Rationals are kept
// in lowest terms with a positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "p/q" or a terminating decimal ("1.25") into an exact rational.
/// Throws Error(parse_error) on malformed input, Error(zero_denominator) on q=0.
Rational rational_from_string(std::string_view text);

/// Render losslessly as "p" (denominator 1) or "p/q".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Largest integer <= value.
Int floor_rational(const Rational& value);

/// Smallest integer >= value.
Int ceil_rational(const Rational& value);

/// floor(p/q) for integers, q != 0.
Int floor_div(const Int& p, const Int& q);

/// ceil(p/q) for integers, q != 0.
Int ceil_div(const Int& p, const Int& q);

/// Int -> long long with an explicit range check (Error(overflow) otherwise).
long long to_long_long(const Int& value);

struct Vec2Q {
  Rational x;
  Rational y;

  bool operator==(const Vec2Q& other) const = default;
};

}  // namespace pentaspace
