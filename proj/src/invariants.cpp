/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/invariants.hpp"

#include <limits>
#include <random>
#include <utility>

#include "pentaspace/error.hpp"
#include "pentaspace/linalg.hpp"
#include "pentaspace/polygon.hpp"

namespace pentaspace {

RRPoly::RRPoly(std::array<Rational, coefficient_count> coefficients)
    : coeffs_(std::move(coefficients)) {}

std::size_t RRPoly::index_linear(std::size_t i) {
  if (i >= 5) throw Error(ErrorCode::invalid_argument, "variable index out of range");
  return 1 + i;
}

std::size_t RRPoly::index_square(std::size_t i) {
  if (i >= 5) throw Error(ErrorCode::invalid_argument, "variable index out of range");
  return 6 + i;
}

std::size_t RRPoly::index_cross(std::size_t i, std::size_t j) {
  if (i >= j || j >= 5) {
    throw Error(ErrorCode::invalid_argument, "cross-term indices must satisfy i < j < 5");
  }
  return 11 + i * (9 - i) / 2 + (j - i - 1);
}

std::array<Rational, RRPoly::coefficient_count> RRPoly::monomial_values(
    const EdgeLengths& a) {
  std::array<Rational, coefficient_count> m;
  m[index_constant()] = 1;
  for (std::size_t i = 0; i < 5; ++i) m[index_linear(i)] = a[i];
  for (std::size_t i = 0; i < 5; ++i) m[index_square(i)] = a[i] * a[i];
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) m[index_cross(i, j)] = a[i] * a[j];
  }
  return m;
}

std::array<std::string, RRPoly::coefficient_count> RRPoly::monomial_names() {
  std::array<std::string, coefficient_count> names;
  names[index_constant()] = "1";
  for (std::size_t i = 0; i < 5; ++i) {
    const std::string var = "a" + std::to_string(i + 1);
    names[index_linear(i)] = var;
    names[index_square(i)] = var + "^2";
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      names[index_cross(i, j)] =
          "a" + std::to_string(i + 1) + "*a" + std::to_string(j + 1);
    }
  }
  return names;
}

Rational RRPoly::evaluate(const EdgeLengths& a) const {
  const auto values = monomial_values(a);
  Rational total = 0;
  for (std::size_t k = 0; k < coefficient_count; ++k) total += coeffs_[k] * values[k];
  return total;
}

RRPoly RRPoly::quadratic_part() const {
  auto coeffs = coeffs_;
  for (std::size_t k = 0; k < 6; ++k) coeffs[k] = 0;
  return RRPoly(std::move(coeffs));
}

bool RRPoly::is_symmetric() const {
  for (std::size_t i = 1; i < 5; ++i) {
    if (coeffs_[index_linear(i)] != coeffs_[index_linear(0)]) return false;
    if (coeffs_[index_square(i)] != coeffs_[index_square(0)]) return false;
  }
  const Rational& cross = coeffs_[index_cross(0, 1)];
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (coeffs_[index_cross(i, j)] != cross) return false;
    }
  }
  return true;
}

Rational rr_closed_form(const EdgeLengths& a) {
  const Rational s = a.sum();
  return s * s / 2 - 2 * a.sum_of_squares() + s / 2 + 1;
}

RRPoly rr_polynomial() {
  std::array<Rational, RRPoly::coefficient_count> coeffs{};
  coeffs[RRPoly::index_constant()] = 1;
  for (std::size_t i = 0; i < 5; ++i) {
    coeffs[RRPoly::index_linear(i)] = Rational(1, 2);
    coeffs[RRPoly::index_square(i)] = Rational(-3, 2);
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) coeffs[RRPoly::index_cross(i, j)] = 1;
  }
  return RRPoly(std::move(coeffs));
}

Rational symplectic_volume(const EdgeLengths& a) {
  const Rational s = a.sum();
  return s * s / 2 - 2 * a.sum_of_squares();
}

RRPoly volume_polynomial() {
  std::array<Rational, RRPoly::coefficient_count> coeffs{};
  for (std::size_t i = 0; i < 5; ++i) coeffs[RRPoly::index_square(i)] = Rational(-3, 2);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) coeffs[RRPoly::index_cross(i, j)] = 1;
  }
  return RRPoly(std::move(coeffs));
}

int euler_characteristic(const EdgeLengths& a) {
  if (!is_nearly_regular(a)) {
    throw Error(ErrorCode::not_nearly_regular,
                "Euler characteristic is defined for nearly-regular edge lengths");
  }
  if (is_toric_generic(a)) {
    return static_cast<int>(moment_polytope(a).polygon.size());
  }
  // All nearly-regular spaces are diffeomorphic, so the count carries over
  // from any toric-generic representative.
  return 7;
}

std::array<int, 3> betti_numbers(const EdgeLengths& a) {
  if (!is_nearly_regular(a)) {
    throw Error(ErrorCode::not_nearly_regular,
                "Betti numbers are defined for nearly-regular edge lengths");
  }
  int b2 = 5;
  if (is_toric_generic(a)) {
    b2 = static_cast<int>(moment_polytope(a).polygon.size()) - 2;
  }
  return {1, b2, 1};
}

RRPoly fit_rr_polynomial(const std::vector<RRSample>& samples) {
  constexpr std::size_t n = RRPoly::coefficient_count;
  if (samples.size() < n) {
    throw Error(ErrorCode::invalid_argument,
                "need at least 21 samples to determine 21 coefficients");
  }
  for (const RRSample& s : samples) {
    if (!s.edges.is_integral() || !is_nearly_regular(s.edges) ||
        !is_toric_generic(s.edges)) {
      throw Error(ErrorCode::invalid_argument,
                  "samples must be integral, nearly-regular and toric-generic");
    }
  }

  // Greedy selection of 21 independent rows, tracked by incremental
  // elimination against the rows picked so far.
  std::vector<std::array<Rational, n>> basis;       // reduced rows, pivot normalized to 1
  std::vector<std::size_t> pivots;                  // pivot column of each basis row
  std::vector<std::size_t> selected;                // indices into samples
  for (std::size_t idx = 0; idx < samples.size() && selected.size() < n; ++idx) {
    auto row = RRPoly::monomial_values(samples[idx].edges);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational factor = row[pivots[b]];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < n; ++k) row[k] -= factor * basis[b][k];
    }
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == n) continue;
    const Rational inv = row[pivot];
    for (std::size_t k = 0; k < n; ++k) row[k] /= inv;
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
    selected.push_back(idx);
  }
  if (selected.size() < n) {
    throw Error(ErrorCode::degenerate_samples,
                "sample tuples do not determine a degree-2 polynomial (rank " +
                    std::to_string(selected.size()) + " of 21)");
  }

  MatQ system(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = RRPoly::monomial_values(samples[selected[r]].edges);
    for (std::size_t k = 0; k < n; ++k) system.at(r, k) = row[k];
    rhs[r] = Rational(samples[selected[r]].count);
  }
  const std::vector<Rational> solution = solve_exact(system, rhs);
  std::array<Rational, n> coeffs;
  std::copy(solution.begin(), solution.end(), coeffs.begin());
  RRPoly fitted(std::move(coeffs));

  for (const RRSample& s : samples) {
    if (fitted.evaluate(s.edges) != Rational(s.count)) {
      throw Error(ErrorCode::inconsistent_samples,
                  "samples are not the values of any degree-2 polynomial");
    }
  }
  return fitted;
}

namespace {

// Unbiased uniform draw from [0, range); rejection avoids modulo bias and
// keeps the stream identical across standard libraries.
std::uint64_t bounded_uint64(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % range;
}

}  // namespace

std::vector<EdgeLengths> sample_integral_tuples(std::uint64_t seed, std::size_t count,
                                                int lo, int hi) {
  if (lo < 1 || hi < lo) {
    throw Error(ErrorCode::invalid_argument, "sampling box must satisfy 1 <= lo <= hi");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<EdgeLengths> tuples;
  tuples.reserve(count);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1'000'000 + 10'000 * count;
  while (tuples.size() < count) {
    if (++attempts > max_attempts) {
      throw Error(ErrorCode::invalid_argument,
                  "sampling box contains too few nearly-regular toric-generic tuples");
    }
    std::array<Rational, 5> values;
    for (auto& v : values) {
      v = Rational(lo + static_cast<long long>(bounded_uint64(rng, range)));
    }
    EdgeLengths candidate(std::move(values));
    if (is_nearly_regular(candidate) && is_toric_generic(candidate)) {
      tuples.push_back(std::move(candidate));
    }
  }
  return tuples;
}

RRExtensionResult verify_rr_extension(std::uint64_t seed, std::size_t sample_count) {
  if (sample_count < RRPoly::coefficient_count) {
    throw Error(ErrorCode::invalid_argument,
                "need at least 21 samples to determine 21 coefficients");
  }
  std::vector<RRSample> samples;
  samples.reserve(sample_count);
  for (EdgeLengths& tuple : sample_integral_tuples(seed, sample_count, 2, 9)) {
    Int count = lattice_count_brute(moment_polytope(tuple).polygon);
    samples.push_back(RRSample{std::move(tuple), std::move(count)});
  }
  RRPoly fitted = fit_rr_polynomial(samples);
  const bool coefficients_match = fitted == rr_polynomial();
  const bool quadratic_matches_volume = fitted.quadratic_part() == volume_polynomial();
  Rational value_at_regular = fitted.evaluate(EdgeLengths::regular());
  const bool passed =
      coefficients_match && quadratic_matches_volume && value_at_regular == 6;
  return RRExtensionResult{std::move(samples),          std::move(fitted),
                           coefficients_match,          quadratic_matches_volume,
                           std::move(value_at_regular), passed};
}

}  // namespace pentaspace
