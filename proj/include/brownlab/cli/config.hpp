// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brownlab/ensembles.hpp"
#include "brownlab/json_io.hpp"
#include "brownlab/microstates.hpp"
#include "brownlab/models.hpp"

namespace brownlab::cli {

struct OutputSpec {
  std::string path;           // empty: stdout
  std::string format = "csv"; // csv | json | table
  std::string svg;            // optional SVG path (prefix for multi-plot commands)
};

struct MicrostateParams {
  double R = 2.0;
  int k = 2;
  double eps = 0.1;
  std::optional<int> l;          // Brown constraint when both l and theta are set
  std::optional<double> theta;
  bool inflate_by_stderr = true;
  int target_dim = 500;          // Monte Carlo targets for DT models
  int target_trials = 50;
};

// One JSON document. Every field is optional at parse time; each command checks
// what it needs and reports the missing field by name.
struct RunConfig {
  std::uint64_t seed = 0;
  std::optional<EnsembleSpec> ensemble;
  std::optional<OperatorModel> model;
  std::optional<MeasureSpec> measure;
  std::optional<double> od;
  MicrostateParams microstate;
  std::vector<int> n_grid;
  std::vector<double> t_grid;
  int trials = 1;
  int l = 1;
  double delta = 0.05;
  std::string matrix_path;
  OutputSpec output;
  Json raw = Json::object();
};

// Throws ConfigError naming the offending field.
RunConfig parse_config(const Json& doc);

}  // namespace brownlab::cli
