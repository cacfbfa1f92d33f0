// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace brownlab {

using Json = nlohmann::ordered_json;

using Cell = std::variant<double, std::int64_t, std::string>;

// Seeded run metadata plus a table of result rows and a free-form summary.
// JSON layout: {meta, inputs, rows, summary}; -inf/inf render as strings.
struct ExperimentReport {
  std::string command;
  std::uint64_t seed = 0;
  std::string version = BROWNLAB_VERSION;
  Json spec = Json::object();
  Json inputs = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json summary = Json::object();

  bool operator==(const ExperimentReport&) const = default;
};

// Shortest round-trip decimal; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

Json number_to_json(double x);
// Accepts numbers and the strings produced by number_to_json.
double number_from_json(const Json& j);

Json cell_to_json(const Cell& c);
Cell cell_from_json(const Json& j);

Json to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const Json& j);

// '#'-prefixed provenance lines, a header row, then one line per row.
std::string to_csv(const ExperimentReport& report);

// Aligned text rendering of rows and summary for terminal output.
std::string render_table(const ExperimentReport& report);

}  // namespace brownlab
