// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/json_io.hpp"

#include <variant>

namespace brownlab {

namespace {

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(field + "." + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& field) {
  try {
    return number_from_json(j);
  } catch (const std::invalid_argument&) {
    throw ConfigError(field, "expected a number");
  }
}

int integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

std::vector<Complex> complex_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of [re, im] pairs");
  std::vector<Complex> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(complex_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

Json complex_list_to_json(const std::vector<Complex>& pts) {
  Json out = Json::array();
  for (const Complex& z : pts) out.push_back(complex_to_json(z));
  return out;
}

template <class F>
auto wrap(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({number_to_json(z.real()), number_to_json(z.imag())}); }

Complex complex_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ConfigError(field, "expected [re, im]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

Json measure_to_json(const MeasureSpec& mu) {
  Json j = {{"kind", mu.kind_name()}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          j["c"] = complex_to_json(m.c);
        } else if constexpr (std::is_same_v<T, UniformDisk> || std::is_same_v<T, UniformCircle>) {
          j["center"] = complex_to_json(m.center);
          j["radius"] = m.radius;
        } else if constexpr (std::is_same_v<T, SemicircleOnR>) {
          j["center"] = m.center;
          j["radius"] = m.radius;
        } else if constexpr (std::is_same_v<T, FiniteAtomic>) {
          j["points"] = complex_list_to_json(m.points);
          j["weights"] = m.weights;
        } else {
          j["points"] = complex_list_to_json(m.points);
        }
      },
      mu.variant());
  return j;
}

MeasureSpec measure_from_json(const Json& j, const std::string& field) {
  const Json& kind_json = require(j, "kind", field);
  if (!kind_json.is_string()) throw ConfigError(field + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  auto opt_complex = [&](const char* key) {
    return j.contains(key) ? complex_from_json(j[key], field + "." + key) : Complex{};
  };
  auto opt_number = [&](const char* key, double fallback) {
    return j.contains(key) ? number(j[key], field + "." + key) : fallback;
  };
  return wrap(field, [&]() -> MeasureSpec {
    if (kind == "PointMass") return MeasureSpec::point_mass(complex_from_json(require(j, "c", field), field + ".c"));
    if (kind == "UniformDisk") return MeasureSpec::uniform_disk(opt_complex("center"), opt_number("radius", 1.0));
    if (kind == "UniformCircle") return MeasureSpec::uniform_circle(opt_complex("center"), opt_number("radius", 1.0));
    if (kind == "SemicircleOnR") return MeasureSpec::semicircle(opt_number("center", 0.0), opt_number("radius", 2.0));
    if (kind == "FiniteAtomic") {
      std::vector<Complex> pts = complex_list(require(j, "points", field), field + ".points");
      const Json& w = require(j, "weights", field);
      if (!w.is_array()) throw ConfigError(field + ".weights", "expected an array");
      std::vector<double> weights;
      for (std::size_t k = 0; k < w.size(); ++k) weights.push_back(number(w[k], field + ".weights"));
      return MeasureSpec::finite_atomic(std::move(pts), std::move(weights));
    }
    if (kind == "Empirical") return MeasureSpec::empirical(complex_list(require(j, "points", field), field + ".points"));
    throw ConfigError(field + ".kind", "unknown measure kind '" + kind + "'");
  });
}

Json ensemble_to_json(const EnsembleSpec& spec) {
  Json j = {{"kind", kind_name(spec.kind)}};
  if (spec.kind == EnsembleSpec::Kind::Perturbed) {
    j["base"] = ensemble_to_json(*spec.base);
    j["scale"] = spec.scale;
    return j;
  }
  j["dim"] = spec.dim;
  if (spec.measure) j["measure"] = measure_to_json(*spec.measure);
  if (spec.kind == EnsembleSpec::Kind::DT) j["offdiag"] = spec.offdiag;
  return j;
}

EnsembleSpec ensemble_from_json(const Json& j, const std::string& field) {
  const Json& kind_json = require(j, "kind", field);
  if (!kind_json.is_string()) throw ConfigError(field + ".kind", "expected a string");
  EnsembleSpec spec;
  spec.kind = wrap(field + ".kind", [&] { return ensemble_kind_from_name(kind_json.get<std::string>()); });
  if (spec.kind == EnsembleSpec::Kind::Perturbed) {
    spec = EnsembleSpec::perturbed(ensemble_from_json(require(j, "base", field), field + ".base"),
                                   j.contains("scale") ? number(j["scale"], field + ".scale") : 0.0);
  } else {
    spec.dim = integer(require(j, "dim", field), field + ".dim");
    if (j.contains("measure")) spec.measure = measure_from_json(j["measure"], field + ".measure");
    if (j.contains("offdiag")) spec.offdiag = number(j["offdiag"], field + ".offdiag");
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    // Validation messages read "<field>: <reason>".
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw ConfigError(field + "." + msg.substr(0, colon), colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
  return spec;
}

Json model_to_json(const OperatorModel& model) {
  Json j = {{"kind", model_name(model)}};
  if (const auto* dt = std::get_if<DTModel>(&model)) {
    j["measure"] = measure_to_json(dt->nu);
    j["offdiag"] = dt->o;
  }
  return j;
}

OperatorModel model_from_json(const Json& j, const std::string& field) {
  const Json& kind_json = require(j, "kind", field);
  if (!kind_json.is_string()) throw ConfigError(field + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "Circular") return CircularModel{};
  if (kind == "HaarUnitary") return HaarUnitaryModel{};
  if (kind == "DT") {
    DTModel dt{measure_from_json(require(j, "measure", field), field + ".measure"),
               number(require(j, "offdiag", field), field + ".offdiag")};
    if (!(dt.o >= 0.0)) throw ConfigError(field + ".offdiag", "must be >= 0");
    return dt;
  }
  throw ConfigError(field + ".kind", "unknown model '" + kind + "'");
}

Json table_to_json(const StarMomentTable& table) {
  Json values = Json::object();
  Json errors = Json::object();
  for (const auto& [w, v] : table.values) values[w.str()] = complex_to_json(v);
  for (const auto& [w, s] : table.stderr_) errors[w.str()] = s;
  return Json{{"max_len", table.max_len}, {"values", values}, {"stderr", errors}};
}

StarMomentTable table_from_json(const Json& j) {
  StarMomentTable t;
  t.max_len = j.at("max_len").get<int>();
  for (const auto& [key, v] : j.at("values").items())
    t.values.emplace(StarWord::parse(key), complex_from_json(v, "values." + key));
  for (const auto& [key, v] : j.at("stderr").items()) t.stderr_.emplace(StarWord::parse(key), v.get<double>());
  return t;
}

Json entropy_report_to_json(const EntropyReport& r) {
  Json j = {{"measure", measure_to_json(r.measure)},
            {"od", number_to_json(r.od)},
            {"second_star_moment", number_to_json(r.second_star_moment)},
            {"first_moment", complex_to_json(r.first_moment)},
            {"log_energy", number_to_json(r.log_energy)},
            {"log_energy_error", number_to_json(r.log_energy_error)},
            {"diagonal_entropy", number_to_json(r.diagonal_entropy)},
            {"upper_bound", number_to_json(r.upper_bound)},
            {"variance_bound", number_to_json(r.variance_bound)},
            {"variance_bound_printed", number_to_json(r.variance_bound_printed)},
            {"selfadjoint_entropy", r.selfadjoint_entropy ? number_to_json(*r.selfadjoint_entropy) : Json()},
            {"delta", number_to_json(r.delta)},
            {"lower_bound_limit", number_to_json(r.lower_bound_limit)}};
  Json rows = Json::array();
  for (const DtRow& row : r.rows)
    rows.push_back({{"N", row.n},
                    {"hits", row.hits.hits},
                    {"trials", row.hits.trials},
                    {"hit_rate", row.hits.fraction},
                    {"wilson_lower", row.hits.interval.lower},
                    {"wilson_upper", row.hits.interval.upper},
                    {"lower_bound", number_to_json(row.lower_bound)}});
  j["rows"] = std::move(rows);
  return j;
}

EntropyReport entropy_report_from_json(const Json& j) {
  EntropyReport r{.measure = measure_from_json(j.at("measure"))};
  r.od = number_from_json(j.at("od"));
  r.second_star_moment = number_from_json(j.at("second_star_moment"));
  r.first_moment = complex_from_json(j.at("first_moment"), "first_moment");
  r.log_energy = number_from_json(j.at("log_energy"));
  r.log_energy_error = number_from_json(j.at("log_energy_error"));
  r.diagonal_entropy = number_from_json(j.at("diagonal_entropy"));
  r.upper_bound = number_from_json(j.at("upper_bound"));
  r.variance_bound = number_from_json(j.at("variance_bound"));
  r.variance_bound_printed = number_from_json(j.at("variance_bound_printed"));
  if (!j.at("selfadjoint_entropy").is_null()) r.selfadjoint_entropy = number_from_json(j.at("selfadjoint_entropy"));
  r.delta = number_from_json(j.at("delta"));
  r.lower_bound_limit = number_from_json(j.at("lower_bound_limit"));
  for (const Json& row : j.at("rows")) {
    DtRow d;
    d.n = row.at("N").get<int>();
    d.hits.hits = row.at("hits").get<int>();
    d.hits.trials = row.at("trials").get<int>();
    d.hits.fraction = row.at("hit_rate").get<double>();
    d.hits.interval = {row.at("wilson_lower").get<double>(), row.at("wilson_upper").get<double>()};
    d.lower_bound = number_from_json(row.at("lower_bound"));
    r.rows.push_back(d);
  }
  return r;
}

}  // namespace brownlab
