// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "brownlab/ensembles.hpp"
#include "brownlab/entropy.hpp"
#include "brownlab/measures.hpp"
#include "brownlab/models.hpp"
#include "brownlab/report.hpp"

namespace brownlab {

// Invalid configuration; the message starts with the dotted path of the field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Complex numbers are [re, im]; a bare number is accepted on input as a real value.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& field);

// {"kind": "UniformDisk", "center": [0, 0], "radius": 1}, etc.
Json measure_to_json(const MeasureSpec& mu);
MeasureSpec measure_from_json(const Json& j, const std::string& field = "measure");

// {"kind": "DT", "dim": 300, "measure": {...}, "offdiag": 1}
// {"kind": "Perturbed", "base": {...}, "scale": 0.001}
Json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const Json& j, const std::string& field = "ensemble");

// {"kind": "Circular"} | {"kind": "HaarUnitary"} | {"kind": "DT", "measure": {...}, "offdiag": o}
Json model_to_json(const OperatorModel& model);
OperatorModel model_from_json(const Json& j, const std::string& field = "model");

// {"max_len": k, "values": {"1*": [re, im], ...}, "stderr": {"1*": s, ...}}
Json table_to_json(const StarMomentTable& table);
StarMomentTable table_from_json(const Json& j);

Json entropy_report_to_json(const EntropyReport& r);
EntropyReport entropy_report_from_json(const Json& j);

}  // namespace brownlab
