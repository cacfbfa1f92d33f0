// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "brownlab/entropy.hpp"
#include "brownlab/json_io.hpp"
#include "brownlab/report.hpp"
#include "brownlab/svg.hpp"

using namespace brownlab;

namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.command = "demo";
  r.seed = 17;
  r.spec = {{"seed", 17}};
  r.inputs = {{"N", 3}};
  r.columns = {"name", "count", "value"};
  r.rows = {{std::string("a,b"), std::int64_t{3}, 0.1},
            {std::string("q\"x"), std::int64_t{-2}, -std::numeric_limits<double>::infinity()}};
  r.summary = {{"total", 1.5}};
  return r;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("report JSON layout and round trip") {
  const ExperimentReport r = sample_report();
  const Json j = to_json(r);
  CHECK(j.at("meta").at("command") == "demo");
  CHECK(j.at("meta").at("seed") == 17);
  CHECK(j.at("rows").at(1).at("value") == "-inf");
  CHECK(j.at("rows").at(0).at("name") == "a,b");
  CHECK(report_from_json(Json::parse(j.dump())) == r);
}

TEST_CASE("CSV has provenance lines, header and quoted fields") {
  const std::string csv = to_csv(sample_report());
  CHECK(csv.rfind("# brownlab ", 0) == 0);
  CHECK(csv.find("seed=17") != std::string::npos);
  CHECK(csv.find("\nname,count,value\n") != std::string::npos);
  CHECK(csv.find("\"a,b\",3,0.1\n") != std::string::npos);
  CHECK(csv.find("\"q\"\"x\",-2,-inf\n") != std::string::npos);
}

TEST_CASE("table rendering aligns columns") {
  const std::string t = render_table(sample_report());
  CHECK(t.find("name") != std::string::npos);
  CHECK(t.find("total") != std::string::npos);
}

TEST_CASE("measure, ensemble and model JSON round trips") {
  for (const MeasureSpec& mu :
       {MeasureSpec::point_mass(Complex(1.0, -2.0)), MeasureSpec::uniform_disk(Complex(0.5, 0.5), 2.0),
        MeasureSpec::uniform_circle(), MeasureSpec::semicircle(1.0, 3.0),
        MeasureSpec::finite_atomic({0.0, Complex(0.0, 1.0)}, {0.3, 0.7}),
        MeasureSpec::empirical(std::vector<Complex>{1.0, 2.0})})
    CHECK(measure_from_json(Json::parse(measure_to_json(mu).dump())) == mu);

  for (const EnsembleSpec& e :
       {EnsembleSpec::ginibre(4), EnsembleSpec::strict_upper(3), EnsembleSpec::diagonal(MeasureSpec::uniform_circle(), 5),
        EnsembleSpec::dt(MeasureSpec::uniform_disk(), 0.5, 6), EnsembleSpec::haar_unitary(2),
        EnsembleSpec::perturbed(EnsembleSpec::shift(7), 1e-3)})
    CHECK(ensemble_from_json(Json::parse(ensemble_to_json(e).dump())) == e);

  for (const OperatorModel& m : {OperatorModel{CircularModel{}}, OperatorModel{HaarUnitaryModel{}},
                                 OperatorModel{DTModel{MeasureSpec::semicircle(), 0.25}}})
    CHECK(model_from_json(model_to_json(m)) == m);
}

TEST_CASE("JSON errors name the offending field") {
  CHECK_THROWS_WITH_AS(measure_from_json(Json{{"kind", "UniformDisk"}, {"radius", -1.0}}),
                       doctest::Contains("measure"), ConfigError);
  CHECK_THROWS_WITH_AS(ensemble_from_json(Json{{"kind", "Ginibre"}}), doctest::Contains("ensemble.dim"),
                       ConfigError);
  try {
    ensemble_from_json(Json{{"kind", "Ginibre"}, {"dim", 0}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "ensemble.dim");
  }
  CHECK_THROWS_AS(model_from_json(Json{{"kind", "Bernoulli"}}), ConfigError);
  CHECK_THROWS_AS(complex_from_json(Json::array({1.0}), "z"), ConfigError);
  CHECK(complex_from_json(Json(2.5), "z") == Complex(2.5));
}

TEST_CASE("moment table and entropy report JSON round trips") {
  const StarMomentTable t = dt_moment_table_mc(MeasureSpec::uniform_disk(), 0.5, 2, 10, 3, Seed(1));
  CHECK(table_from_json(Json::parse(table_to_json(t).dump())) == t);

  const EntropyReport e = entropy_report(MeasureSpec::point_mass(0.0), 1.0);
  const Json j = entropy_report_to_json(e);
  CHECK(j.at("log_energy") == "-inf");
  const EntropyReport back = entropy_report_from_json(Json::parse(j.dump()));
  CHECK(back.log_energy == e.log_energy);
  CHECK(back.upper_bound == e.upper_bound);
  CHECK(back.measure == e.measure);
}

TEST_CASE("SVG output is well formed") {
  const std::vector<Complex> pts{0.0, Complex(0.5, -0.5)};
  const std::string s = scatter_svg(pts, "a < b");
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("a &lt; b") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  const std::vector<std::pair<double, double>> xy{{0.0, 1.0}, {0.1, 0.5}};
  CHECK(line_chart_svg(xy, "curve", "t", "d").find("<polyline") != std::string::npos);
}
