// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "brownlab/entropy.hpp"
#include "brownlab/matcore.hpp"
#include "brownlab/microstates.hpp"
#include "brownlab/svg.hpp"

namespace brownlab::cli {

namespace {

ExperimentReport make_report(const std::string& command, const RunConfig& c) {
  ExperimentReport r;
  r.command = command;
  r.seed = c.seed;
  r.spec = c.raw;
  return r;
}

const EnsembleSpec& require_ensemble(const RunConfig& c) {
  if (!c.ensemble) throw ConfigError("ensemble", "missing");
  return *c.ensemble;
}

// Target Brown measure: explicit measure, else the model's descriptor.
MeasureSpec target_measure(const RunConfig& c) {
  if (c.measure) return *c.measure;
  if (c.model) return model_descriptor(*c.model).brown;
  throw ConfigError("measure", "missing (give measure or model)");
}

std::pair<MeasureSpec, double> measure_and_od(const RunConfig& c) {
  if (c.measure && c.od) return {*c.measure, *c.od};
  if (c.model) {
    ModelDescriptor d = model_descriptor(*c.model);
    return {c.measure ? *c.measure : d.brown, c.od ? *c.od : d.od};
  }
  if (!c.measure) throw ConfigError("measure", "missing (give measure and od, or model)");
  throw ConfigError("od", "missing");
}

void add_eigenvalue_rows(ExperimentReport& r, const EmpiricalSpectrum& s) {
  r.columns = {"re", "im"};
  for (const Complex& z : s.points) r.rows.push_back({z.real(), z.imag()});
}

std::string svg_path(const std::string& prefix, const std::string& suffix) {
  std::string stem = prefix;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".svg") == 0) stem.resize(stem.size() - 4);
  return stem + suffix + ".svg";
}

}  // namespace

CommandResult cmd_sample(const RunConfig& c) {
  const EnsembleSpec& ensemble = require_ensemble(c);
  const EmpiricalSpectrum spectrum = eigenvalues(sample(ensemble, Seed(c.seed)));
  CommandResult out{make_report("sample", c), {}};
  out.report.inputs = {{"ensemble", ensemble_to_json(ensemble)}, {"description", ensemble.describe()}};
  add_eigenvalue_rows(out.report, spectrum);
  if (!c.output.svg.empty())
    out.artifacts.push_back({c.output.svg, scatter_svg(spectrum.points, "eigenvalues of " + ensemble.describe())});
  return out;
}

CommandResult cmd_spectrum(const RunConfig& c) {
  ComplexMatrix m;
  CommandResult out{make_report("spectrum", c), {}};
  if (!c.matrix_path.empty()) {
    m = read_matrix_file(c.matrix_path);
    out.report.inputs = {{"matrix", c.matrix_path}};
  } else {
    const EnsembleSpec& ensemble = require_ensemble(c);
    m = sample(ensemble, Seed(c.seed));
    out.report.inputs = {{"ensemble", ensemble_to_json(ensemble)}, {"description", ensemble.describe()}};
  }
  const EmpiricalSpectrum spectrum = eigenvalues(m);
  add_eigenvalue_rows(out.report, spectrum);
  Json& s = out.report.summary;
  s["N"] = m.rows();
  s["operator_norm"] = operator_norm(m);
  s["fk_determinant"] = number_to_json(fk_determinant(m));
  s["log_fk_determinant"] = number_to_json(log_fk_determinant(m));
  s["tr_mm_star"] = normalized_frobenius2(m);
  s["mean_abs2_eigenvalue"] = spectrum.mean_abs2();
  s["offdiag_second_moment"] = offdiag_second_moment(m, spectrum);
  if (spectrum.size() >= 2) s["empirical_log_energy"] = number_to_json(empirical_log_energy(spectrum.points));
  if (c.measure || c.model) {
    const MeasureSpec mu = target_measure(c);
    s["target_measure"] = measure_to_json(mu);
    s["l"] = c.l;
    s["moment_distance"] = moment_distance(MeasureSpec::empirical(spectrum), mu, c.l);
  }
  if (!c.output.svg.empty()) out.artifacts.push_back({c.output.svg, scatter_svg(spectrum.points, "spectrum")});
  return out;
}

CommandResult cmd_regularize(const RunConfig& c) {
  // The t grid replaces any perturbation scale given in the config.
  const EnsembleSpec& given = require_ensemble(c);
  const EnsembleSpec& base = given.kind == EnsembleSpec::Kind::Perturbed ? *given.base : given;
  if (c.t_grid.empty()) throw ConfigError("grids.t", "missing or empty");
  const MeasureSpec mu = target_measure(c);
  const SweepReport sweep = regularization_sweep(base, c.t_grid, mu, c.l, c.trials, Seed(c.seed));

  CommandResult out{make_report("regularize", c), {}};
  out.report.inputs = {{"base", ensemble_to_json(base)},
                       {"target", measure_to_json(mu)},
                       {"l", c.l},
                       {"trials", c.trials}};
  out.report.columns = {"t", "mean_distance", "std", "trials"};
  Json hist = Json::object();
  std::vector<std::pair<double, double>> curve;
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const SweepRow& row = sweep.rows[i];
    out.report.rows.push_back({row.t, row.mean_distance, row.std_distance, std::int64_t{row.trials}});
    hist[format_double(row.t)] = row.radial_histogram;
    curve.emplace_back(row.t, row.mean_distance);
    if (!c.output.svg.empty())
      out.artifacts.push_back({svg_path(c.output.svg, "_t" + std::to_string(i)),
                               scatter_svg(row.first_spectrum, "t = " + format_double(row.t))});
  }
  out.report.summary["radial_max"] = sweep.radial_max;
  out.report.summary["radial_histograms"] = std::move(hist);
  if (!c.output.svg.empty())
    out.artifacts.push_back({svg_path(c.output.svg, "_curve"),
                             line_chart_svg(curve, "moment distance vs t", "t", "mean distance")});
  return out;
}

CommandResult cmd_microstate(const RunConfig& c) {
  const EnsembleSpec& ensemble = require_ensemble(c);
  if (!c.model) throw ConfigError("model", "missing");
  const MicrostateParams& p = c.microstate;
  const Seed root(c.seed);

  MicrostateSpec spec;
  spec.R = p.R;
  spec.k = p.k;
  spec.eps = p.eps;
  spec.inflate_by_stderr = p.inflate_by_stderr;
  spec.targets = target_table(*c.model, p.k, MonteCarloParams{p.target_dim, p.target_trials, root.stream("targets")});
  if (p.l) spec.improved = BrownConstraint{*p.l, *p.theta, c.measure ? *c.measure : model_descriptor(*c.model).brown};

  std::vector<int> dims = c.n_grid.empty() ? std::vector<int>{ensemble.dimension()} : c.n_grid;
  CommandResult out{make_report("microstate", c), {}};
  out.report.inputs = {{"ensemble", ensemble_to_json(ensemble)}, {"model", model_to_json(*c.model)},
                       {"R", p.R}, {"k", p.k}, {"eps", p.eps}, {"trials", c.trials}};
  if (spec.improved)
    out.report.inputs["improved"] = {{"l", spec.improved->l}, {"theta", spec.improved->theta},
                                     {"mu", measure_to_json(spec.improved->mu)}};
  out.report.columns = {"N",           "hits",           "trials",          "hit_rate",       "wilson_lower",
                        "wilson_upper", "trial0_member", "trial0_worst_word", "trial0_worst_deviation",
                        "trial0_brown_distance"};
  for (int n : dims) {
    const EnsembleSpec at_n = ensemble.with_dimension(n);
    const Seed seed_n = root.stream("hits").trial(static_cast<std::uint64_t>(n));
    const HitRate h = hit_rate(at_n, spec, c.trials, seed_n);
    const ComplexMatrix first = sample(at_n, seed_n.trial(0));
    const MembershipResult d = spec.improved ? in_gamma_tilde(first, spec) : in_gamma(first, spec);
    out.report.rows.push_back({std::int64_t{n}, std::int64_t{h.hits}, std::int64_t{h.trials}, h.fraction,
                               h.interval.lower, h.interval.upper, std::int64_t{d.member ? 1 : 0},
                               d.worst_word ? d.worst_word->str() : std::string("-"), d.worst_deviation,
                               d.brown_distance ? *d.brown_distance : std::nan("")});
  }
  double max_eps = 0.0;
  for (const auto& [w, _] : spec.targets.values)
    if (static_cast<int>(w.size()) <= spec.k) max_eps = std::max(max_eps, spec.effective_eps(w));
  out.report.summary["max_effective_eps"] = max_eps;
  out.report.summary["targets"] = table_to_json(spec.targets);
  return out;
}

CommandResult cmd_entropy(const RunConfig& c) {
  const auto [mu, od] = measure_and_od(c);
  const EntropyReport e = entropy_report(mu, od);
  CommandResult out{make_report("entropy-bound", c), {}};
  out.report.inputs = {{"measure", measure_to_json(mu)}, {"od", od}};
  out.report.columns = {"quantity", "value"};
  auto row = [&](const char* name, double v) { out.report.rows.push_back({std::string(name), v}); };
  row("log_energy", e.log_energy);
  row("diagonal_entropy", e.diagonal_entropy);
  row("upper_bound", e.upper_bound);
  row("variance_bound", e.variance_bound);
  row("variance_bound_printed", e.variance_bound_printed);
  if (e.selfadjoint_entropy) row("selfadjoint_entropy", *e.selfadjoint_entropy);
  out.report.summary = entropy_report_to_json(e);
  return out;
}

CommandResult cmd_dt_verify(const RunConfig& c) {
  const auto [nu, o] = measure_and_od(c);
  DtVerifyParams params;
  if (!c.n_grid.empty()) params.dims = c.n_grid;
  params.k = c.microstate.k;
  params.eps = c.microstate.eps;
  params.R = c.microstate.R;
  params.trials = c.trials;
  params.delta = c.delta;
  params.target_trials = c.microstate.target_trials;
  const EntropyReport e = dt_equality_report(nu, o, params, Seed(c.seed));

  CommandResult out{make_report("dt-verify", c), {}};
  out.report.inputs = {{"measure", measure_to_json(nu)}, {"od", o},        {"k", params.k},
                       {"eps", params.eps},              {"R", params.R},  {"trials", params.trials},
                       {"delta", params.delta}};
  out.report.columns = {"N", "hits", "trials", "hit_rate", "wilson_lower", "wilson_upper", "lower_bound", "upper_bound"};
  for (const DtRow& r : e.rows)
    out.report.rows.push_back({std::int64_t{r.n}, std::int64_t{r.hits.hits}, std::int64_t{r.hits.trials},
                               r.hits.fraction, r.hits.interval.lower, r.hits.interval.upper, r.lower_bound,
                               e.upper_bound});
  out.report.summary = entropy_report_to_json(e);
  return out;
}

CommandResult cmd_schur_check(const RunConfig& c) {
  const EnsembleSpec& ensemble = require_ensemble(c);
  CommandResult out{make_report("schur-check", c), {}};
  out.report.inputs = {{"ensemble", ensemble_to_json(ensemble)}, {"trials", c.trials}};
  out.report.columns = {"trial",        "N",           "residual",  "unitarity_error", "upper_re_var",
                        "upper_im_var", "expected_var", "mean_abs2", "vol_d_log_weight"};
  for (int t = 0; t < c.trials; ++t) {
    const ComplexMatrix m = sample(ensemble, Seed(c.seed).trial(static_cast<std::uint64_t>(t)));
    const SchurForm s = schur_decompose(m);
    const Eigen::Index n = m.rows();
    const double residual = (s.reconstruct() - m).norm() / (1.0 + m.norm());
    const double unitarity = (s.unitary.adjoint() * s.unitary - ComplexMatrix::Identity(n, n)).norm();
    double sum_re = 0, sum_im = 0, ss_re = 0, ss_im = 0;
    const double count = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    for (Eigen::Index j = 1; j < n; ++j)
      for (Eigen::Index i = 0; i < j; ++i) {
        sum_re += s.strict_upper(i, j).real();
        sum_im += s.strict_upper(i, j).imag();
      }
    const double mean_re = count > 0 ? sum_re / count : 0.0;
    const double mean_im = count > 0 ? sum_im / count : 0.0;
    for (Eigen::Index j = 1; j < n; ++j)
      for (Eigen::Index i = 0; i < j; ++i) {
        ss_re += std::pow(s.strict_upper(i, j).real() - mean_re, 2);
        ss_im += std::pow(s.strict_upper(i, j).imag() - mean_im, 2);
      }
    const std::vector<Complex> lambdas(s.diagonal.data(), s.diagonal.data() + n);
    const EmpiricalSpectrum spectrum{lambdas};
    out.report.rows.push_back({std::int64_t{t}, static_cast<std::int64_t>(n), residual, unitarity,
                               count > 1 ? ss_re / (count - 1) : 0.0, count > 1 ? ss_im / (count - 1) : 0.0,
                               1.0 / (2.0 * static_cast<double>(n)), spectrum.mean_abs2(),
                               vol_d_log_weight(lambdas)});
  }
  return out;
}

CommandResult cmd_ball_volume(const RunConfig& c) {
  const double o = c.od.value_or(1.0);
  if (!(o > 0.0)) throw ConfigError("od", "must be positive");
  const std::vector<int> dims = c.n_grid.empty() ? std::vector<int>{50, 100, 200} : c.n_grid;
  CommandResult out{make_report("ball-volume", c), {}};
  out.report.inputs = {{"od", o}, {"N", dims}};
  out.report.columns = {"N", "finite", "limit", "gap"};
  const double limit = ball_log_volume_limit(o);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 2) throw ConfigError("grids.N[" + std::to_string(k) + "]", "must be >= 2");
    const double finite = ball_log_volume(dims[k], o);
    out.report.rows.push_back({std::int64_t{dims[k]}, finite, limit, finite - limit});
  }
  out.report.summary["limit"] = limit;
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"sample",  "spectrum",  "regularize",  "microstate",
                                                 "entropy-bound", "dt-verify", "schur-check", "ball-volume"};
  return names;
}

CommandResult run_command(const std::string& name, const RunConfig& config) {
  if (name == "sample") return cmd_sample(config);
  if (name == "spectrum") return cmd_spectrum(config);
  if (name == "regularize") return cmd_regularize(config);
  if (name == "microstate") return cmd_microstate(config);
  if (name == "entropy-bound") return cmd_entropy(config);
  if (name == "dt-verify") return cmd_dt_verify(config);
  if (name == "schur-check") return cmd_schur_check(config);
  if (name == "ball-volume") return cmd_ball_volume(config);
  throw ConfigError("command", "unknown subcommand '" + name + "'");
}

std::string render(const ExperimentReport& report, const std::string& format) {
  if (format == "json") return to_json(report).dump(2) + "\n";
  if (format == "table") return render_table(report);
  return to_csv(report);
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void write_outputs(const CommandResult& result, const RunConfig& config, std::ostream& fallback) {
  const std::string text = render(result.report, config.output.format);
  if (config.output.path.empty())
    fallback << text;
  else
    write_file(config.output.path, text);
  for (const Artifact& a : result.artifacts) write_file(a.path, a.content);
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ConfigError("matrix", "'" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ConfigError("matrix.dim", "missing integer");
  const int n = j["dim"].get<int>();
  if (n < 1) throw ConfigError("matrix.dim", "must be >= 1");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ConfigError("matrix.entries", "expected dim*dim [re, im] pairs");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      m(i, k) = complex_from_json(j["entries"][static_cast<std::size_t>(i * n + k)], "matrix.entries");
  if (!m.allFinite()) throw ConfigError("matrix.entries", "non-finite entry");
  return m;
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_to_json(m(i, k)));
  write_file(path, Json{{"dim", m.rows()}, {"entries", std::move(entries)}}.dump() + "\n");
}

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out, format, svg, matrix;
  std::optional<int> trials, dim, l;
  std::optional<double> od;
  std::vector<int> n_grid;
  std::vector<double> t_grid;
};

Json load_document(const Overrides& o) {
  Json doc = Json::object();
  if (!o.config_path.empty()) {
    std::ifstream f(o.config_path);
    if (!f) throw IoError("cannot open config '" + o.config_path + "'");
    try {
      doc = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw ConfigError("config", "'" + o.config_path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
  }
  if (o.seed) doc["seed"] = *o.seed;
  if (!o.out.empty()) doc["output"]["path"] = o.out;
  if (!o.format.empty()) doc["output"]["format"] = o.format;
  if (!o.svg.empty()) doc["output"]["svg"] = o.svg;
  if (!o.matrix.empty()) doc["matrix"] = o.matrix;
  if (o.trials) doc["trials"] = *o.trials;
  if (o.l) doc["l"] = *o.l;
  if (o.od) doc["od"] = *o.od;
  if (!o.n_grid.empty()) doc["grids"]["N"] = o.n_grid;
  if (!o.t_grid.empty()) doc["grids"]["t"] = o.t_grid;
  if (o.dim) {
    if (!doc.contains("ensemble")) throw ConfigError("ensemble", "--dim needs an ensemble in the config");
    Json* e = &doc["ensemble"];
    while (e->is_object() && e->contains("base")) e = &(*e)["base"];
    (*e)["dim"] = *o.dim;
  }
  return doc;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"brownlab: random matrix experiments on microstates, Brown measure and free entropy bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(BROWNLAB_VERSION));
  Overrides o;
  for (const std::string& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("-c,--config", o.config_path, "JSON run configuration");
    sub->add_option("--seed", o.seed, "root seed");
    sub->add_option("-o,--out", o.out, "output path (default stdout)");
    sub->add_option("--format", o.format, "csv | json | table")->check(CLI::IsMember({"csv", "json", "table"}));
    sub->add_option("--svg", o.svg, "SVG output path");
    sub->add_option("--trials", o.trials, "Monte Carlo trials");
    sub->add_option("--dim", o.dim, "override ensemble dimension");
    sub->add_option("--l", o.l, "moment order for Brown comparisons");
    sub->add_option("--od", o.od, "offdiagonality");
    sub->add_option("--n-grid", o.n_grid, "comma separated N grid")->delimiter(',');
    sub->add_option("--t-grid", o.t_grid, "comma separated t grid")->delimiter(',');
    if (name == "spectrum") sub->add_option("--matrix", o.matrix, "JSON matrix file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const RunConfig config = parse_config(load_document(o));
    write_outputs(run_command(name, config), config, out);
    return 0;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const EigensolverError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace brownlab::cli
