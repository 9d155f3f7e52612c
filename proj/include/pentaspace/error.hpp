/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace pentaspace {

/// Failure categories shared by the C++ core, the C API and the JSON reports.
enum class ErrorCode {
  parse_error,
  zero_denominator,
  invalid_argument,
  singular_matrix,
  empty_or_unbounded,
  non_lattice_polygon,
  not_nearly_regular,
  not_toric_generic,
  shape_assertion,
  degenerate_samples,
  inconsistent_samples,
  bounds_too_small,
  verification_failed,
  overflow,
  internal_error,
};

/// Stable snake_case name for an error code (used in reports and by the C API).
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pentaspace
