// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace brownlab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

Json number_to_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return -HUGE_VAL;
    if (s == "inf") return HUGE_VAL;
    if (s == "nan") return std::nan("");
  }
  throw std::invalid_argument("expected a number, got " + j.dump());
}

Json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return number_to_json(v);
        else
          return v;
      },
      c);
}

Cell cell_from_json(const Json& j) {
  if (j.is_number_float()) return j.get<double>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf" || s == "inf" || s == "nan") return number_from_json(j);
    return s;
  }
  throw std::invalid_argument("report cell must be a number or string: " + j.dump());
}

Json to_json(const ExperimentReport& report) {
  Json meta = {{"command", report.command},
               {"seed", report.seed},
               {"version", report.version},
               {"spec", report.spec},
               {"columns", report.columns}};
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[report.columns.at(c)] = cell_to_json(row[c]);
    rows.push_back(std::move(obj));
  }
  return Json{{"meta", std::move(meta)}, {"inputs", report.inputs}, {"rows", std::move(rows)},
              {"summary", report.summary}};
}

ExperimentReport report_from_json(const Json& j) {
  ExperimentReport r;
  const Json& meta = j.at("meta");
  r.command = meta.at("command").get<std::string>();
  r.seed = meta.at("seed").get<std::uint64_t>();
  r.version = meta.at("version").get<std::string>();
  r.spec = meta.at("spec");
  r.columns = meta.at("columns").get<std::vector<std::string>>();
  r.inputs = j.at("inputs");
  for (const Json& row : j.at("rows")) {
    std::vector<Cell> cells;
    for (const auto& col : r.columns) cells.push_back(cell_from_json(row.at(col)));
    r.rows.push_back(std::move(cells));
  }
  r.summary = j.at("summary");
  return r;
}

namespace {

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else
          return v;
      },
      c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "# brownlab " << report.version << " command=" << report.command << " seed=" << report.seed << '\n';
  os << "# spec: " << report.spec.dump() << '\n';
  if (!report.inputs.empty()) os << "# inputs: " << report.inputs.dump() << '\n';
  if (!report.summary.empty()) os << "# summary: " << report.summary.dump() << '\n';
  for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << csv_field(report.columns[c]);
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
    os << '\n';
  }
  return os.str();
}

std::string render_table(const ExperimentReport& report) {
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : report.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(cell_text(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
    text.push_back(std::move(line));
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      os << (c ? "  " : "") << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    os << '\n';
  };
  if (!report.columns.empty()) {
    emit(report.columns);
    for (const auto& line : text) emit(line);
  }
  std::size_t key_width = 0;
  for (const auto& [key, _] : report.summary.items()) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : report.summary.items()) {
    os << key << std::string(key_width - key.size(), ' ') << "  "
       << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return os.str();
}

}  // namespace brownlab
