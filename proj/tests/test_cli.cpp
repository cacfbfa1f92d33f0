// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "brownlab/cli/commands.hpp"
#include "brownlab/ensembles.hpp"

using namespace brownlab;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "brownlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "brownlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_config(const std::string& name, const Json& doc) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << doc.dump();
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("config parsing reports fields") {
  CHECK_THROWS_WITH_AS(cli::parse_config(Json{{"sed", 1}}), doctest::Contains("sed"), ConfigError);
  CHECK_THROWS_WITH_AS(cli::parse_config(Json{{"trials", 0}}), doctest::Contains("trials"), ConfigError);
  CHECK_THROWS_WITH_AS(cli::parse_config(Json{{"output", {{"format", "xml"}}}}), doctest::Contains("output.format"),
                       ConfigError);
  const cli::RunConfig c = cli::parse_config(
      Json{{"seed", 5}, {"ensemble", {{"kind", "Ginibre"}, {"dim", 8}}}, {"grids", {{"N", {4, 8}}}}});
  CHECK(c.seed == 5);
  CHECK(c.ensemble->dim == 8);
  CHECK(c.n_grid == std::vector<int>{4, 8});
}

TEST_CASE("sample prints CSV eigenvalues deterministically") {
  const std::string cfg = write_config("g.json", {{"seed", 3}, {"ensemble", {{"kind", "Ginibre"}, {"dim", 12}}}});
  const CliRun a = run({"sample", "--config", cfg});
  REQUIRE(a.code == 0);
  CHECK(a.out.rfind("# brownlab", 0) == 0);
  CHECK(a.out.find("\nre,im\n") != std::string::npos);
  const CliRun b = run({"sample", "--config", cfg});
  CHECK(a.out == b.out);
  const CliRun c = run({"sample", "--config", cfg, "--seed", "4"});
  CHECK(c.out != a.out);
  const CliRun d = run({"sample", "--config", cfg, "--dim", "5", "--format", "json"});
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out).at("rows").size() == 5);
}

TEST_CASE("spectrum reads a matrix file") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << 1.0, Complex(0.0, 2.0), -3.0;
  m(0, 2) = 1.0;
  const fs::path p = scratch_dir() / "m.json";
  cli::write_matrix_file(p.string(), m);
  CHECK(cli::read_matrix_file(p.string()) == m);
  const CliRun r = run({"spectrum", "--matrix", p.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("summary").at("N") == 3);
  CHECK(j.at("summary").at("offdiag_second_moment").get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(j.at("summary").at("fk_determinant").get<double>() == doctest::Approx(std::cbrt(6.0)));
}

TEST_CASE("entropy-bound for the circular model") {
  const CliRun r = run({"entropy-bound", "--config", write_config("c.json", {{"model", {{"kind", "Circular"}}}}),
                        "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("summary").at("upper_bound").get<double>() == doctest::Approx(1.0 + std::log(3.141592653589793)));
  CHECK(j.at("rows").at(0).at("quantity") == "log_energy");
}

TEST_CASE("ball-volume writes CSV to a file") {
  const fs::path out = scratch_dir() / "ball.csv";
  const CliRun r = run({"ball-volume", "--n-grid", "10,20", "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const std::string csv = read_file(out);
  CHECK(csv.find("N,finite,limit,gap\n10,") != std::string::npos);
}

TEST_CASE("regularize writes SVG artifacts") {
  const fs::path svg = scratch_dir() / "reg.svg";
  const std::string cfg = write_config(
      "r.json", {{"ensemble", {{"kind", "Shift"}, {"dim", 20}}}, {"measure", {{"kind", "UniformCircle"}}}});
  const CliRun r = run({"regularize", "--config", cfg, "--t-grid", "0,0.01", "--trials", "2", "--svg", svg.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(scratch_dir() / "reg_t0.svg"));
  CHECK(fs::exists(scratch_dir() / "reg_t1.svg"));
  CHECK(fs::exists(scratch_dir() / "reg_curve.svg"));
  CHECK(r.out.find("\n0,1,0,2\n") != std::string::npos);
}

TEST_CASE("microstate, dt-verify and schur-check run end to end") {
  const std::string cfg = write_config(
      "m.json", {{"ensemble", {{"kind", "Ginibre"}, {"dim", 20}}}, {"model", {{"kind", "Circular"}}}, {"trials", 4}});
  const CliRun m = run({"microstate", "--config", cfg, "--format", "json"});
  REQUIRE(m.code == 0);
  CHECK(Json::parse(m.out).at("rows").at(0).at("trials") == 4);

  const std::string dt = write_config("dt.json", {{"measure", {{"kind", "PointMass"}, {"c", {0.0, 0.0}}}},
                                                  {"od", 1.0},
                                                  {"trials", 3},
                                                  {"microstate", {{"target_trials", 3}}}});
  const CliRun d = run({"dt-verify", "--config", dt, "--n-grid", "10,20"});
  REQUIRE(d.code == 0);
  CHECK(d.out.find("\n20,") != std::string::npos);

  const CliRun s = run({"schur-check", "--config", cfg, "--trials", "2", "--format", "json"});
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out).at("rows").at(1).at("residual").get<double>() < 1e-12);
}

TEST_CASE("exit codes") {
  CHECK(run({"sample"}).code == 2);  // no ensemble
  CHECK(run({"sample", "--config", "/nonexistent/cfg.json"}).code == 1);
  const CliRun bad = run({"sample", "--config", write_config("bad.json", {{"ensemble", {{"kind", "Ginibre"}, {"dim", -3}}}})});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ensemble.dim") != std::string::npos);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"ball-volume", "--format", "yaml"}).code == 2);
  const fs::path unwritable = scratch_dir() / "no_such_dir" / "x.csv";
  CHECK(run({"ball-volume", "--out", unwritable.string()}).code == 1);
}

TEST_CASE("the installed executable shares the entry point") {
  const std::string cmd = std::string(BROWNLAB_CLI_PATH) + " ball-volume --n-grid 4 > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  const int bad = std::system((std::string(BROWNLAB_CLI_PATH) + " sample 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(bad) == 2);
}

TEST_CASE("triangular ensembles sample to zero eigenvalues") {
  for (const Json& ensemble :
       {Json{{"kind", "Shift"}, {"dim", 100}},
        Json{{"kind", "DT"}, {"dim", 300}, {"measure", {{"kind", "PointMass"}, {"c", {0.0, 0.0}}}}, {"offdiag", 1.0}}}) {
    const CliRun r = run({"sample", "--config", write_config("tri.json", {{"seed", 2}, {"ensemble", ensemble}}),
                          "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("rows").size() == ensemble.at("dim").get<std::size_t>());
    double worst = 0.0;
    for (const Json& row : j.at("rows"))
      worst = std::max({worst, std::abs(row.at("re").get<double>()), std::abs(row.at("im").get<double>())});
    CHECK(worst <= 1e-8);
    CHECK(j.at("meta").at("spec").at("ensemble") == ensemble);
  }
}

TEST_CASE("emitted JSON reports parse back to the same report") {
  const std::string cfg = write_config("rt.json", {{"seed", 11}, {"ensemble", {{"kind", "Ginibre"}, {"dim", 6}}}});
  const CliRun r = run({"spectrum", "--config", cfg, "--format", "json"});
  REQUIRE(r.code == 0);
  const ExperimentReport back = report_from_json(Json::parse(r.out));
  CHECK(cli::render(back, "json") == r.out);
  CHECK(back.seed == 11);
}
