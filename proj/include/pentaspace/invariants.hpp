/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pentaspace/pentagon.hpp"
#include "pentaspace/rational.hpp"

namespace pentaspace {

// A polynomial of total degree <= 2 in the five edge lengths. Coefficients
// are indexed constant, then a1..a5, then a1^2..a5^2, then the ten cross
// terms a_i*a_j with i < j in lexicographic order.
class RRPoly {
 public:
  static constexpr std::size_t coefficient_count = 21;

  RRPoly() = default;
  explicit RRPoly(std::array<Rational, coefficient_count> coefficients);

  static std::size_t index_constant() { return 0; }
  static std::size_t index_linear(std::size_t i);   // i in [0,5)
  static std::size_t index_square(std::size_t i);   // i in [0,5)
  static std::size_t index_cross(std::size_t i, std::size_t j);  // i < j in [0,5)

  // Values of the 21 monomials at a point, in coefficient order.
  static std::array<Rational, coefficient_count> monomial_values(const EdgeLengths& a);
  static std::array<std::string, coefficient_count> monomial_names();

  Rational evaluate(const EdgeLengths& a) const;

  // The degree-2 homogeneous part (squares and cross terms only).
  RRPoly quadratic_part() const;

  // Invariant under every permutation of the five variables.
  bool is_symmetric() const;

  const std::array<Rational, coefficient_count>& coefficients() const { return coeffs_; }

  bool operator==(const RRPoly&) const = default;

 private:
  std::array<Rational, coefficient_count> coeffs_{};
};

// (sum a)^2/2 - 2*sum a^2 + (sum a)/2 + 1, evaluated exactly.
Rational rr_closed_form(const EdgeLengths& a);

// The same expression as an expanded coefficient vector.
RRPoly rr_polynomial();

// (sum a)^2/2 - 2*sum a^2: the leading (degree-2) part of rr_closed_form.
Rational symplectic_volume(const EdgeLengths& a);
RRPoly volume_polynomial();

// 7 for every nearly-regular tuple: counted from the polytope vertices when
// toric-generic, otherwise carried over (all such spaces are diffeomorphic).
int euler_characteristic(const EdgeLengths& a);

// (b0, b2, b4) = (1, 5, 1); b2 is vertex count minus 2 when toric-generic.
std::array<int, 3> betti_numbers(const EdgeLengths& a);

struct RRSample {
  EdgeLengths edges;
  Int count;
};

// Interpolates the unique degree-<=2 polynomial through the samples.
// Throws invalid_argument (< 21 samples or non-integral/ineligible tuples),
// degenerate_samples (rank < 21), inconsistent_samples (leftover samples
// disagree with the interpolant).
RRPoly fit_rr_polynomial(const std::vector<RRSample>& samples);

// Deterministic rejection sampler: integral tuples with entries in [lo, hi]
// that are nearly-regular and toric-generic.
std::vector<EdgeLengths> sample_integral_tuples(std::uint64_t seed, std::size_t count,
                                                int lo, int hi);

struct RRExtensionResult {
  std::vector<RRSample> samples;
  RRPoly fitted;
  bool coefficients_match;        // fitted == rr_polynomial()
  bool quadratic_matches_volume;  // fitted.quadratic_part() == volume_polynomial()
  Rational value_at_regular;      // fitted at (1,1,1,1,1); expected 6
  bool passed;
};

// Samples tuples, brute-counts lattice points of their polytopes, fits the
// degree-2 polynomial, and compares it to the closed form.
RRExtensionResult verify_rr_extension(std::uint64_t seed, std::size_t sample_count);

}  // namespace pentaspace
