/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/dh.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "pentaspace/error.hpp"
#include "pentaspace/invariants.hpp"

namespace pentaspace {

DHProfile::DHProfile(std::vector<long long> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument, "profile needs support length >= 1");
  }
  if (values_[0] < 1) {
    throw Error(ErrorCode::invalid_argument, "profile must start at a positive value");
  }
  if (values_.back() < 0) {
    throw Error(ErrorCode::invalid_argument, "profile values must be nonnegative");
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (values_[k] < 1) {
      throw Error(ErrorCode::invalid_argument,
                  "profile must be positive on the interior of its support");
    }
  }
  for (std::size_t k = 2; k < n; ++k) {
    if (values_[k] - values_[k - 1] > values_[k - 1] - values_[k - 2]) {
      throw Error(ErrorCode::invalid_argument, "profile slopes must be non-increasing");
    }
  }
}

std::vector<long long> slopes(const DHProfile& p) {
  const auto& v = p.values();
  std::vector<long long> s;
  s.reserve(v.size() - 1);
  for (std::size_t k = 1; k < v.size(); ++k) s.push_back(v[k] - v[k - 1]);
  return s;
}

std::vector<long long> critical_values(const DHProfile& p) {
  const auto s = slopes(p);
  std::vector<long long> crit;
  crit.push_back(0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] != s[k - 1]) crit.push_back(static_cast<long long>(k));
  }
  crit.push_back(p.support_length());
  return crit;
}

long long enclosed_lattice_points(const DHProfile& p) {
  long long total = 0;
  for (long long v : p.values()) total += v + 1;
  return total;
}

std::vector<DHProfile> enumerate_dh(const DHConstraints& c) {
  if (c.target_enclosed < 1) {
    throw Error(ErrorCode::invalid_argument, "target count must be >= 1");
  }
  if (c.max_support < 1 || c.max_value < 1) {
    throw Error(ErrorCode::invalid_argument, "search bounds must be >= 1");
  }
  if (c.max_support < c.target_enclosed || c.max_value < c.target_enclosed) {
    throw Error(ErrorCode::bounds_too_small,
                "exhaustiveness requires max_support and max_value >= target");
  }

  std::vector<DHProfile> out;
  std::vector<long long> values;

  // Depth-first extension of the value list; column x contributes v_x + 1
  // enclosed points, interior columns need v >= 1, and slopes may only
  // decrease. Counts the interior slope changes at the end.
  auto extend = [&](auto&& self, long long L, long long enclosed) -> void {
    const long long k = static_cast<long long>(values.size());
    if (k == L + 1) {
      if (enclosed != c.target_enclosed) return;
      long long crit = 2;
      for (std::size_t i = 2; i < values.size(); ++i) {
        if (values[i] - values[i - 1] != values[i - 1] - values[i - 2]) ++crit;
      }
      if (crit < c.min_critical_values) return;
      out.emplace_back(DHProfile(values));
      return;
    }
    const long long lo = (k == L) ? 0 : 1;
    long long hi = c.max_value;
    if (k >= 2) {
      const long long slope_cap = values[k - 1] + (values[k - 1] - values[k - 2]);
      hi = std::min(hi, slope_cap);
    }
    // Columns after this one: the interior ones need v >= 1 (2 points each),
    // the final one v >= 0 (1 point).
    const long long columns_after = L - k;
    const long long min_rest = columns_after > 0 ? 2 * columns_after - 1 : 0;
    hi = std::min(hi, c.target_enclosed - enclosed - min_rest - 1);
    for (long long v = lo; v <= hi; ++v) {
      values.push_back(v);
      self(self, L, enclosed + v + 1);
      values.pop_back();
    }
  };

  for (long long L = 1; L <= c.max_support; ++L) {
    // Minimal enclosed count for support L is 2 + 2(L-1) + 1 = 2L + 1.
    if (2 * L + 1 > c.target_enclosed) break;
    for (long long v0 = 1; v0 <= c.max_value; ++v0) {
      values.assign(1, v0);
      extend(extend, L, v0 + 1);
    }
  }
  return out;
}

std::vector<DHProfile> karshon_filter(const std::vector<DHProfile>& profiles) {
  std::vector<DHProfile> kept;
  for (const DHProfile& p : profiles) {
    const auto& v = p.values();
    const long long final_slope = v[v.size() - 1] - v[v.size() - 2];
    const bool isolated_max = v.back() == 0;
    if (isolated_max && std::llabs(final_slope) > 1) continue;
    kept.push_back(p);
  }
  return kept;
}

CircleActionVerification verify_no_circle_action(std::optional<long long> target_override,
                                                 long long min_critical) {
  Rational rr = rr_closed_form(EdgeLengths::regular());
  if (!is_integer(rr)) {
    throw Error(ErrorCode::internal_error, "closed-form count at the regular tuple "
                                           "is not an integer");
  }
  const long long rr_value = to_long_long(numerator(rr));
  const long long target = target_override.value_or(rr_value);
  const int euler = euler_characteristic(EdgeLengths::regular());

  DHConstraints constraints{target, min_critical, target, target};
  std::vector<DHProfile> pre = enumerate_dh(constraints);
  std::vector<DHProfile> post = karshon_filter(pre);

  const bool target_matches_rr = target == rr_value;
  const bool count_exceeds_rr = Rational(euler) >= rr + 1;
  const bool passed = target_matches_rr && count_exceeds_rr && post.empty();
  return CircleActionVerification{target,
                                  std::move(rr),
                                  euler,
                                  target_matches_rr,
                                  count_exceeds_rr,
                                  std::move(pre),
                                  std::move(post),
                                  passed};
}

}  // namespace pentaspace
