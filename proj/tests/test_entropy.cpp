// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "brownlab/entropy.hpp"
#include "support/oracles.hpp"

using namespace brownlab;

namespace {

const double kPi = std::numbers::pi;
const double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("circular element: upper bound, variance bound and 1 + ln pi coincide") {
  const double expected = 1.0 + std::log(kPi);
  CHECK(entropy_upper_bound(MeasureSpec::uniform_disk(), 0.5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(variance_bound(1.0, 0.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(variance_bound(1.0, 0.0, 2) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("diagonal and self-adjoint entropies") {
  CHECK(diagonal_entropy(MeasureSpec::uniform_disk()) == doctest::Approx(-0.25 + 0.75 + 0.5 * std::log(kPi)));
  // Standard semicircle: 1/2 log(2 pi e).
  CHECK(selfadjoint_entropy(MeasureSpec::semicircle()) ==
        doctest::Approx(0.5 * std::log(2.0 * kPi * std::exp(1.0))).epsilon(1e-4));
  CHECK_THROWS_AS(selfadjoint_entropy(MeasureSpec::uniform_disk()), std::invalid_argument);
  CHECK(diagonal_entropy(MeasureSpec::point_mass(0.0)) == kNegInf);
}

TEST_CASE("upper bound degenerates") {
  CHECK(entropy_upper_bound(MeasureSpec::uniform_disk(), 0.0) == kNegInf);
  CHECK(entropy_upper_bound(MeasureSpec::point_mass(1.0), 1.0) == kNegInf);
  CHECK_THROWS_AS(entropy_upper_bound(MeasureSpec::uniform_disk(), -0.1), std::invalid_argument);
}

TEST_CASE("variance bound exponents") {
  // v = phi_xx - |phi_x|^2 = 4 - 1 = 3.
  CHECK(variance_bound(4.0, 1.0) == doctest::Approx(std::log(kPi * std::exp(1.0) * 3.0)));
  CHECK(variance_bound(4.0, 1.0, 2) == doctest::Approx(std::log(kPi * std::exp(1.0) * 9.0)));
  CHECK(variance_bound(1.0, 1.0) == kNegInf);
  CHECK_THROWS_AS(variance_bound(1.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("offdiagonality") {
  const Offdiagonality o = offdiagonality(1.0, MeasureSpec::uniform_disk());
  CHECK(o.value == doctest::Approx(0.5));
  CHECK_FALSE(o.inconsistent);
  CHECK(offdiagonality(0.1, MeasureSpec::uniform_circle()).inconsistent);
}

TEST_CASE("ball log volume against a Stirling-series oracle") {
  for (int n : {2, 3, 10, 50, 200, 1000})
    for (double o : {0.25, 1.0, 3.0})
      CHECK(ball_log_volume(n, o) == doctest::Approx(oracle::ball_log_volume_stirling(n, o)).epsilon(1e-12));
  CHECK(ball_log_volume_limit(1.0) == doctest::Approx(0.5 + 0.5 * std::log(2.0 * kPi)));
  CHECK_THROWS_AS(ball_log_volume(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ball_log_volume(10, 0.0), std::invalid_argument);
}

TEST_CASE("ball log volume approaches its limit from above") {
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {50, 100, 200, 400, 800}) {
    const double gap = ball_log_volume(n, 1.0) - ball_log_volume_limit(1.0);
    CHECK(gap > 0.0);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("entropy report") {
  const EntropyReport r = entropy_report(MeasureSpec::uniform_disk(), 0.5);
  CHECK(r.log_energy == doctest::Approx(-0.25));
  CHECK(r.second_star_moment == doctest::Approx(1.0));
  CHECK(r.upper_bound == doctest::Approx(1.0 + std::log(kPi)));
  CHECK(r.variance_bound == doctest::Approx(r.upper_bound));
  CHECK_FALSE(r.selfadjoint_entropy);
  const EntropyReport s = entropy_report(MeasureSpec::semicircle(), 0.0);
  REQUIRE(s.selfadjoint_entropy);
  CHECK(s.log_energy_error <= 1e-4);
  CHECK(s.upper_bound == kNegInf);
}

TEST_CASE("DT equality report at small scale") {
  DtVerifyParams p;
  p.dims = {20, 40};
  p.trials = 6;
  p.target_trials = 6;
  const EntropyReport r = dt_equality_report(MeasureSpec::uniform_disk(), 0.5, p, Seed(1));
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].n == 20);
  CHECK(r.rows[1].hits.trials == 6);
  CHECK(r.delta == 0.05);
  CHECK(r.lower_bound_limit == doctest::Approx(r.diagonal_entropy + ball_log_volume_limit(0.5)));
  CHECK(r.rows[1].lower_bound ==
        doctest::Approx(r.diagonal_entropy + ball_log_volume(40, 0.95 * 0.5)));
  // Same seed, same report.
  const EntropyReport again = dt_equality_report(MeasureSpec::uniform_disk(), 0.5, p, Seed(1));
  CHECK(again.rows[1].hits.hits == r.rows[1].hits.hits);
}
