// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brownlab/cli/config.hpp"
#include "brownlab/report.hpp"

namespace brownlab::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Artifact {
  std::string path;
  std::string content;
};

struct CommandResult {
  ExperimentReport report;
  std::vector<Artifact> artifacts;  // SVG plots
};

// Eigenvalues of one sample: columns re, im.
CommandResult cmd_sample(const RunConfig& config);
// Eigenvalues plus spectral summary of a matrix file or a sample.
CommandResult cmd_spectrum(const RunConfig& config);
// Columns t, mean_distance, std, trials.
CommandResult cmd_regularize(const RunConfig& config);
// Hit rates per N of the ensemble in Gamma (or Gamma-tilde).
CommandResult cmd_microstate(const RunConfig& config);
CommandResult cmd_entropy(const RunConfig& config);
CommandResult cmd_dt_verify(const RunConfig& config);
CommandResult cmd_schur_check(const RunConfig& config);
CommandResult cmd_ball_volume(const RunConfig& config);

const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& name, const RunConfig& config);

std::string render(const ExperimentReport& report, const std::string& format);

// Writes the report to config.output.path (or `fallback` when empty) and every artifact.
void write_outputs(const CommandResult& result, const RunConfig& config, std::ostream& fallback);

// JSON matrix file: {"dim": N, "entries": [[re, im], ...]} in row-major order.
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

// Entry point shared by the executable and the tests. Exit codes: 0 success,
// 1 I/O failure, 2 configuration error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brownlab::cli
