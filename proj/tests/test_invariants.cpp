#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "pentaspace/error.hpp"
#include "pentaspace/invariants.hpp"
#include "pentaspace/polygon.hpp"

using namespace pentaspace;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal_error;
}

std::vector<RRSample> good_samples(std::uint64_t seed, std::size_t count) {
  std::vector<RRSample> samples;
  for (EdgeLengths& t : sample_integral_tuples(seed, count, 2, 9)) {
    Int n = lattice_count_brute(moment_polytope(t).polygon);
    samples.push_back(RRSample{std::move(t), std::move(n)});
  }
  return samples;
}

}  // namespace

TEST_CASE("closed-form count at reference tuples") {
  CHECK(rr_closed_form(EdgeLengths::regular()) == 6);
  CHECK(rr_closed_form(EdgeLengths(3, 2, 3, 3, 2)) == 22);
  CHECK(rr_closed_form(EdgeLengths(2, 3, 3, 2, 3)) == 22);  // permutation
  CHECK(rr_closed_form(EdgeLengths(2, 3, 3, 3, 2)) == 22);  // another permutation
}

TEST_CASE("coefficient layout of the expanded closed form") {
  const RRPoly poly = rr_polynomial();
  const auto& c = poly.coefficients();
  CHECK(c[RRPoly::index_constant()] == 1);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(c[RRPoly::index_linear(i)] == Rational(1, 2));
    CHECK(c[RRPoly::index_square(i)] == Rational(-3, 2));
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(c[RRPoly::index_cross(i, j)] == 1);
  CHECK(poly.is_symmetric());
}

TEST_CASE("monomial indexing is a bijection onto 0..20") {
  std::set<std::size_t> seen;
  seen.insert(RRPoly::index_constant());
  for (std::size_t i = 0; i < 5; ++i) {
    seen.insert(RRPoly::index_linear(i));
    seen.insert(RRPoly::index_square(i));
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) seen.insert(RRPoly::index_cross(i, j));
  CHECK(seen.size() == RRPoly::coefficient_count);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == RRPoly::coefficient_count - 1);
  CHECK_THROWS_AS(RRPoly::index_cross(2, 2), Error);
  CHECK_THROWS_AS(RRPoly::index_cross(3, 2), Error);
  CHECK_THROWS_AS(RRPoly::index_linear(5), Error);
}

TEST_CASE("monomial values and names") {
  const EdgeLengths a(1, 2, 3, 4, 5);
  const auto values = RRPoly::monomial_values(a);
  CHECK(values[RRPoly::index_constant()] == 1);
  CHECK(values[RRPoly::index_linear(2)] == 3);
  CHECK(values[RRPoly::index_square(4)] == 25);
  CHECK(values[RRPoly::index_cross(0, 1)] == 2);
  CHECK(values[RRPoly::index_cross(3, 4)] == 20);
  const auto names = RRPoly::monomial_names();
  CHECK(names[RRPoly::index_constant()] == "1");
  CHECK(names[RRPoly::index_linear(0)] == "a1");
  CHECK(names[RRPoly::index_square(4)] == "a5^2");
  CHECK(names[RRPoly::index_cross(1, 3)] == "a2*a4");
}

TEST_CASE("polynomial evaluation matches the closed form") {
  const RRPoly poly = rr_polynomial();
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int a3 = 1; a3 <= 3; ++a3)
        for (int a4 = 1; a4 <= 3; ++a4)
          for (int a5 = 1; a5 <= 3; ++a5) {
            const EdgeLengths a(a1, a2, a3, a4, a5);
            CHECK(poly.evaluate(a) == rr_closed_form(a));
          }
  const EdgeLengths q(Rational(5, 2), 1, Rational(7, 3), 2, Rational(3, 2));
  CHECK(poly.evaluate(q) == rr_closed_form(q));
}

TEST_CASE("symplectic volume values and homogeneity") {
  CHECK(symplectic_volume(EdgeLengths::regular()) == Rational(5, 2));
  CHECK(symplectic_volume(EdgeLengths(3, 2, 3, 3, 2)) == Rational(29, 2));
  CHECK(symplectic_volume(EdgeLengths(6, 4, 6, 6, 4)) == 58);  // t = 2 scaling
  CHECK(volume_polynomial() == rr_polynomial().quadratic_part());
  CHECK(volume_polynomial().evaluate(EdgeLengths(3, 2, 3, 3, 2)) == Rational(29, 2));
}

TEST_CASE("Euler characteristic and Betti numbers") {
  CHECK(euler_characteristic(EdgeLengths(3, 2, 3, 3, 2)) == 7);
  CHECK(euler_characteristic(EdgeLengths::regular()) == 7);
  CHECK(betti_numbers(EdgeLengths(3, 2, 3, 3, 2)) == std::array<int, 3>{1, 5, 1});
  CHECK(betti_numbers(EdgeLengths::regular()) == std::array<int, 3>{1, 5, 1});
  const auto betti = betti_numbers(EdgeLengths(3, 2, 3, 3, 2));
  CHECK(betti[0] + betti[1] + betti[2] == euler_characteristic(EdgeLengths(3, 2, 3, 3, 2)));
  CHECK(code_of([] { euler_characteristic(EdgeLengths(2, 1, 2, 2, 1)); }) ==
        ErrorCode::not_nearly_regular);
  CHECK(code_of([] { betti_numbers(EdgeLengths(2, 1, 2, 2, 1)); }) ==
        ErrorCode::not_nearly_regular);
}

TEST_CASE("triple oracle: closed form = brute count = Pick count") {
  for (const EdgeLengths& a : sample_integral_tuples(5, 60, 1, 10)) {
    const MomentPolytope mp = moment_polytope(a);
    const Rational rr = rr_closed_form(a);
    CHECK(Rational(lattice_count_brute(mp.polygon)) == rr);
    CHECK(Rational(pick_count(mp.polygon)) == rr);
  }
}

TEST_CASE("sampling is deterministic, in range, and validated") {
  const auto first = sample_integral_tuples(42, 25, 2, 9);
  const auto second = sample_integral_tuples(42, 25, 2, 9);
  CHECK(first == second);
  CHECK(first.size() == 25);
  for (const EdgeLengths& a : first) {
    CHECK(a.is_integral());
    CHECK(is_nearly_regular(a));
    CHECK(is_toric_generic(a));
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(a[i] >= 2);
      CHECK(a[i] <= 9);
    }
  }
  const auto other_seed = sample_integral_tuples(43, 25, 2, 9);
  CHECK(first != other_seed);
  CHECK(code_of([] { sample_integral_tuples(1, 5, 0, 9); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] { sample_integral_tuples(1, 5, 9, 2); }) ==
        ErrorCode::invalid_argument);
  // a single-value box has no toric-generic tuple
  CHECK(code_of([] { sample_integral_tuples(1, 1, 2, 2); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("fitting recovers the closed form from lattice counts") {
  const RRPoly fitted = fit_rr_polynomial(good_samples(7, 30));
  CHECK(fitted == rr_polynomial());
  CHECK(fitted.evaluate(EdgeLengths::regular()) == 6);
}

TEST_CASE("fitting rejects bad sample sets") {
  CHECK(code_of([] { fit_rr_polynomial(good_samples(7, 20)); }) ==
        ErrorCode::invalid_argument);

  // 21 copies of one tuple: rank 1
  std::vector<RRSample> repeated(
      21, RRSample{EdgeLengths(3, 2, 3, 3, 2), Int(22)});
  CHECK(code_of([&] { fit_rr_polynomial(repeated); }) == ErrorCode::degenerate_samples);

  // one corrupted count falsifies the degree-2 hypothesis
  auto corrupted = good_samples(7, 25);
  corrupted[3].count += 1;
  CHECK(code_of([&] { fit_rr_polynomial(corrupted); }) ==
        ErrorCode::inconsistent_samples);

  // ineligible tuples are rejected up front
  std::vector<RRSample> bad = good_samples(7, 21);
  bad[0] = RRSample{EdgeLengths(Rational(5, 2), 2, 3, 3, 2), Int(10)};
  CHECK(code_of([&] { fit_rr_polynomial(bad); }) == ErrorCode::invalid_argument);
  bad[0] = RRSample{EdgeLengths(2, 1, 2, 2, 1), Int(10)};
  CHECK(code_of([&] { fit_rr_polynomial(bad); }) == ErrorCode::invalid_argument);
}

TEST_CASE("end-to-end extension check") {
  const RRExtensionResult result = verify_rr_extension(1, 30);
  CHECK(result.passed);
  CHECK(result.coefficients_match);
  CHECK(result.quadratic_matches_volume);
  CHECK(result.value_at_regular == 6);
  CHECK(result.samples.size() == 30);
  CHECK(code_of([] { verify_rr_extension(1, 5); }) == ErrorCode::invalid_argument);
}
