/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "pentaspace/rational.hpp"

namespace pentaspace {

// Piecewise-linear concave profile sampled at the integers 0..L: the
// candidate Duistermaat-Heckman function of a Hamiltonian circle action.
// The minimum level is a sphere of positive integral area (v0 >= 1), the
// function is positive on the interior, and slopes are non-increasing
// integers; the maximum level may be a sphere (vL >= 1) or isolated (vL = 0).
class DHProfile {
 public:
  explicit DHProfile(std::vector<long long> values);

  const std::vector<long long>& values() const { return values_; }
  long long support_length() const {
    return static_cast<long long>(values_.size()) - 1;
  }

  bool operator==(const DHProfile&) const = default;

 private:
  std::vector<long long> values_;
};

// Slopes s_1..s_L with s_k = v_k - v_{k-1}.
std::vector<long long> slopes(const DHProfile& p);

// {0, L} plus every interior integer where the slope changes, ascending.
std::vector<long long> critical_values(const DHProfile& p);

// Number of lattice points (x, y) with 0 <= x <= L and 0 <= y <= v_x.
long long enclosed_lattice_points(const DHProfile& p);

struct DHConstraints {
  long long target_enclosed;     // required enclosed lattice-point count
  long long min_critical_values; // lower bound on |critical_values|
  long long max_support;         // enumeration bound on L
  long long max_value;           // enumeration bound on each v_x
};

// All profiles with enclosed_lattice_points == target and at least the
// requested number of critical values, ordered by (L, values) ascending.
// Bounds of max_support >= target and max_value >= target are exhaustive,
// since every column of the enclosed region contributes at least one point;
// smaller bounds raise bounds_too_small.
std::vector<DHProfile> enumerate_dh(const DHConstraints& c);

// Drops profiles whose maximum is an isolated fixed point (vL = 0) reached
// with final slope of absolute value > 1; the minimum side is exempt because
// v0 >= 1 already forces a non-isolated minimum.
std::vector<DHProfile> karshon_filter(const std::vector<DHProfile>& profiles);

struct CircleActionVerification {
  long long target;          // enclosed-count target driving the search
  Rational rr_regular;       // closed-form count at (1,1,1,1,1)
  int euler_regular;         // fixed-point lower bound for a circle action
  bool target_matches_rr;    // target equals the closed-form value
  bool count_exceeds_rr;     // euler_regular >= rr_regular + 1 (rules out toric)
  std::vector<DHProfile> pre_filter;
  std::vector<DHProfile> post_filter;
  bool passed;               // all of the above hold and post_filter is empty
};

// Mechanized no-circle-action argument for the regular tuple: every concave
// integral profile enclosing rr_closed_form(1,...,1) lattice points with at
// least min_critical critical values is eliminated by the slope filter.
// target_override replaces the closed-form target for sensitivity runs; the
// resulting verification then fails by construction.
CircleActionVerification verify_no_circle_action(
    std::optional<long long> target_override = std::nullopt,
    long long min_critical = 3);

}  // namespace pentaspace
