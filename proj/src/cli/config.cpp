// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/cli/config.hpp"

#include <algorithm>

namespace brownlab::cli {

namespace {

double real_field(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  return j.get<double>();
}

int int_field(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

template <class T, class Reader>
std::vector<T> list_field(const Json& j, const std::string& field, Reader read) {
  if (!j.is_array()) throw ConfigError(field, "expected an array");
  std::vector<T> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

const std::vector<std::string> kTopLevel = {"seed",  "ensemble", "model",  "measure", "od",     "microstate",
                                            "grids", "trials",   "l",      "delta",   "matrix", "output"};

}  // namespace

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (std::find(kTopLevel.begin(), kTopLevel.end(), key) == kTopLevel.end())
      throw ConfigError(key, "unknown field");

  RunConfig c;
  c.raw = doc;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<std::int64_t>() >= 0))
      throw ConfigError("seed", "expected a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("ensemble")) c.ensemble = ensemble_from_json(doc["ensemble"], "ensemble");
  if (doc.contains("model")) c.model = model_from_json(doc["model"], "model");
  if (doc.contains("measure")) c.measure = measure_from_json(doc["measure"], "measure");
  if (doc.contains("od")) {
    c.od = real_field(doc["od"], "od");
    if (!(*c.od >= 0.0)) throw ConfigError("od", "must be >= 0");
  }
  if (doc.contains("microstate")) {
    const Json& m = doc["microstate"];
    if (!m.is_object()) throw ConfigError("microstate", "expected an object");
    auto& p = c.microstate;
    if (m.contains("R")) p.R = real_field(m["R"], "microstate.R");
    if (m.contains("k")) p.k = int_field(m["k"], "microstate.k");
    if (m.contains("eps")) p.eps = real_field(m["eps"], "microstate.eps");
    if (m.contains("l")) p.l = int_field(m["l"], "microstate.l");
    if (m.contains("theta")) p.theta = real_field(m["theta"], "microstate.theta");
    if (m.contains("inflate_by_stderr")) {
      if (!m["inflate_by_stderr"].is_boolean()) throw ConfigError("microstate.inflate_by_stderr", "expected a boolean");
      p.inflate_by_stderr = m["inflate_by_stderr"].get<bool>();
    }
    if (m.contains("target_dim")) p.target_dim = int_field(m["target_dim"], "microstate.target_dim");
    if (m.contains("target_trials")) p.target_trials = int_field(m["target_trials"], "microstate.target_trials");
    if (!(p.R > 0.0)) throw ConfigError("microstate.R", "must be positive");
    if (p.k < 1 || p.k > 12) throw ConfigError("microstate.k", "must lie in [1, 12]");
    if (!(p.eps > 0.0)) throw ConfigError("microstate.eps", "must be positive");
    if (p.l && *p.l < 0) throw ConfigError("microstate.l", "must be >= 0");
    if (p.theta && !(*p.theta > 0.0)) throw ConfigError("microstate.theta", "must be positive");
    if (p.l.has_value() != p.theta.has_value())
      throw ConfigError(p.l ? "microstate.theta" : "microstate.l", "Brown constraint needs both l and theta");
    if (p.target_dim < 1) throw ConfigError("microstate.target_dim", "must be >= 1");
    if (p.target_trials < 2) throw ConfigError("microstate.target_trials", "must be >= 2");
  }
  if (doc.contains("grids")) {
    const Json& g = doc["grids"];
    if (!g.is_object()) throw ConfigError("grids", "expected an object");
    if (g.contains("N")) {
      c.n_grid = list_field<int>(g["N"], "grids.N", int_field);
      for (std::size_t k = 0; k < c.n_grid.size(); ++k)
        if (c.n_grid[k] < 1) throw ConfigError("grids.N[" + std::to_string(k) + "]", "must be >= 1");
    }
    if (g.contains("t")) {
      c.t_grid = list_field<double>(g["t"], "grids.t", real_field);
      for (std::size_t k = 0; k < c.t_grid.size(); ++k)
        if (!(c.t_grid[k] >= 0.0)) throw ConfigError("grids.t[" + std::to_string(k) + "]", "must be >= 0");
    }
  }
  if (doc.contains("trials")) {
    c.trials = int_field(doc["trials"], "trials");
    if (c.trials < 1) throw ConfigError("trials", "must be >= 1");
  }
  if (doc.contains("l")) {
    c.l = int_field(doc["l"], "l");
    if (c.l < 0) throw ConfigError("l", "must be >= 0");
  }
  if (doc.contains("delta")) {
    c.delta = real_field(doc["delta"], "delta");
    if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError("delta", "must lie in (0, 1)");
  }
  if (doc.contains("matrix")) {
    if (!doc["matrix"].is_string()) throw ConfigError("matrix", "expected a file path");
    c.matrix_path = doc["matrix"].get<std::string>();
  }
  if (doc.contains("output")) {
    const Json& o = doc["output"];
    if (!o.is_object()) throw ConfigError("output", "expected an object");
    auto str = [&](const char* key, std::string& dst) {
      if (!o.contains(key)) return;
      if (!o[key].is_string()) throw ConfigError(std::string("output.") + key, "expected a string");
      dst = o[key].get<std::string>();
    };
    str("path", c.output.path);
    str("format", c.output.format);
    str("svg", c.output.svg);
    if (c.output.format != "csv" && c.output.format != "json" && c.output.format != "table")
      throw ConfigError("output.format", "must be csv, json or table");
  }
  return c;
}

}  // namespace brownlab::cli
