/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/rational.hpp"

#include <cctype>
#include <limits>

namespace pentaspace {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_digits(std::string_view s) {
  return Int(std::string(s));
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::zero_denominator: return "zero_denominator";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::empty_or_unbounded: return "empty_or_unbounded";
    case ErrorCode::non_lattice_polygon: return "non_lattice_polygon";
    case ErrorCode::not_nearly_regular: return "not_nearly_regular";
    case ErrorCode::not_toric_generic: return "not_toric_generic";
    case ErrorCode::shape_assertion: return "shape_assertion";
    case ErrorCode::degenerate_samples: return "degenerate_samples";
    case ErrorCode::inconsistent_samples: return "inconsistent_samples";
    case ErrorCode::bounds_too_small: return "bounds_too_small";
    case ErrorCode::verification_failed: return "verification_failed";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::internal_error: return "internal_error";
  }
  return "unknown";
}

Rational rational_from_string(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = (s.front() == '-');
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorCode::parse_error, "sign without digits: '" + std::string(text) + "'");

  auto slash = s.find('/');
  auto dot = s.find('.');
  Rational value;
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorCode::parse_error, "malformed rational literal: '" + std::string(text) + "'");
    }
    Int q = parse_digits(den);
    if (q == 0) throw Error(ErrorCode::zero_denominator, "zero denominator: '" + std::string(text) + "'");
    value = Rational(parse_digits(num), q);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw Error(ErrorCode::parse_error, "malformed decimal literal: '" + std::string(text) + "'");
    }
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int num = whole.empty() ? Int(0) : parse_digits(whole);
    num *= scale;
    if (!frac.empty()) num += parse_digits(frac);
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) {
      throw Error(ErrorCode::parse_error, "malformed integer literal: '" + std::string(text) + "'");
    }
    value = Rational(parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
  return denominator(value) == 1;
}

Int floor_div(const Int& p, const Int& q) {
  Int t = p / q;
  if (p % q != 0 && ((p < 0) != (q < 0))) --t;
  return t;
}

Int ceil_div(const Int& p, const Int& q) {
  return -floor_div(-p, q);
}

Int floor_rational(const Rational& value) {
  return floor_div(numerator(value), denominator(value));
}

Int ceil_rational(const Rational& value) {
  return ceil_div(numerator(value), denominator(value));
}

long long to_long_long(const Int& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min()) {
    throw Error(ErrorCode::overflow, "integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<long long>();
}

}  // namespace pentaspace
