// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "brownlab/ensembles.hpp"
#include "brownlab/models.hpp"
#include "support/oracles.hpp"

using namespace brownlab;

TEST_CASE("circular moments match brute-force pairing enumeration") {
  for (const StarWord& w : all_words(10)) {
    INFO(w.str());
    REQUIRE(circular_moment(w) == oracle::pairing_count(w));
  }
}

TEST_CASE("circular moments: known values") {
  CHECK(circular_moment(StarWord::parse("1*")) == 1);
  CHECK(circular_moment(StarWord::parse("11")) == 0);
  CHECK(circular_moment(StarWord::parse("1*1*")) == 2);
  CHECK(circular_moment(StarWord::parse("11**")) == 1);
  CHECK(circular_moment(StarWord::parse("1**1")) == 1);
  // tau((xx*)^m) is the Catalan number C_m.
  CHECK(circular_moment(StarWord::parse("1*1*1*")) == 5);
  CHECK(circular_moment(StarWord::parse("1*1*1*1*")) == 14);
}

TEST_CASE("Haar moments match a cyclic-phase unitary") {
  for (const StarWord& w : all_words(8)) {
    INFO(w.str());
    const Complex ref = oracle::cyclic_unitary_moment(w);
    CHECK(std::abs(static_cast<double>(haar_moment(w)) - ref) < 1e-12);
  }
}

TEST_CASE("exact target tables carry zero stderr") {
  const StarMomentTable t = target_table(CircularModel{}, 3);
  CHECK(t.max_len == 3);
  CHECK(t.values.size() == 14);
  CHECK(t.value(StarWord::parse("1*")) == Complex(1.0));
  CHECK(t.standard_error(StarWord::parse("1*")) == 0.0);
  const StarMomentTable h = target_table(HaarUnitaryModel{}, 2);
  CHECK(h.value(StarWord::parse("*1")) == Complex(1.0));
  CHECK(h.value(StarWord::parse("11")) == Complex(0.0));
}

TEST_CASE("DT(delta_0, o) first two moments") {
  // x = sqrt(o) T: E tr(x x*) = o (1 - 1/N) at finite N, tau(x) = 0.
  const MonteCarloEstimate e = dt_moment_mc(MeasureSpec::point_mass(0.0), 0.7, StarWord::parse("1*"), 200, 10,
                                            Seed(5));
  CHECK(std::abs(e.estimate - 0.7 * (1.0 - 1.0 / 200)) < 4.0 * e.stderr_);
  CHECK(e.stderr_ > 0.0);
  const MonteCarloEstimate first =
      dt_moment_mc(MeasureSpec::point_mass(0.0), 0.7, StarWord::parse("1"), 50, 5, Seed(5));
  CHECK(std::abs(first.estimate) == 0.0);
}

TEST_CASE("DT with o = 0 reproduces the diagonal law exactly in expectation") {
  const MeasureSpec nu = MeasureSpec::uniform_circle(0.5, 1.0);
  const MonteCarloEstimate e = dt_moment_mc(nu, 0.0, StarWord::parse("11*"), 300, 20, Seed(6));
  CHECK(std::abs(e.estimate - moment(nu, 2, 1)) < 4.0 * e.stderr_ + 1e-3);
}

TEST_CASE("dt moment table agrees with single-word estimates") {
  const MeasureSpec nu = MeasureSpec::uniform_disk();
  const StarMomentTable t = dt_moment_table_mc(nu, 0.5, 2, 60, 8, Seed(7));
  CHECK(t.values.size() == 6);
  for (const auto& [w, v] : t.values) {
    const MonteCarloEstimate single = dt_moment_mc(nu, 0.5, w, 60, 8, Seed(7));
    CHECK(std::abs(single.estimate - v) < 1e-12);
    CHECK(single.stderr_ == doctest::Approx(t.standard_error(w)));
  }
}

TEST_CASE("model descriptors and second star moment") {
  const ModelDescriptor c = model_descriptor(CircularModel{});
  CHECK(c.brown == MeasureSpec::uniform_disk());
  CHECK(c.od == 0.5);
  CHECK(second_star_moment(CircularModel{}) == doctest::Approx(1.0));
  CHECK(second_star_moment(HaarUnitaryModel{}) == doctest::Approx(1.0));
  CHECK(second_star_moment(DTModel{MeasureSpec::uniform_circle(0.0, 2.0), 0.3}) == doctest::Approx(4.3));
  CHECK(model_name(DTModel{MeasureSpec::point_mass(0.0), 1.0}) == "DT");
}
