// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/microstates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace brownlab {

namespace {

void check_moments(const std::map<StarWord, Complex>& traces, const MicrostateSpec& spec,
                   MembershipResult& out) {
  out.moments_ok = true;
  out.worst_excess = -std::numeric_limits<double>::infinity();
  for (const auto& [word, tr] : traces) {
    const double deviation = std::abs(tr - spec.targets.value(word));
    const double eps = spec.effective_eps(word);
    if (!(deviation < eps)) out.moments_ok = false;
    if (deviation - eps > out.worst_excess) {
      out.worst_excess = deviation - eps;
      out.worst_deviation = deviation;
      out.worst_word = word;
    }
  }
}

}  // namespace

double MicrostateSpec::effective_eps(const StarWord& w) const {
  return inflate_by_stderr ? eps + 3.0 * targets.standard_error(w) : eps;
}

void MicrostateSpec::validate() const {
  if (!(R > 0.0)) throw std::invalid_argument("R: must be positive");
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("eps: must be positive");
  if (targets.max_len < k) throw std::invalid_argument("targets: table shorter than k");
  if (improved) {
    if (improved->l < 0) throw std::invalid_argument("improved.l: must be >= 0");
    if (!(improved->theta > 0.0)) throw std::invalid_argument("improved.theta: must be positive");
  }
}

MembershipResult in_gamma(const ComplexMatrix& m, const MicrostateSpec& spec) {
  spec.validate();
  MembershipResult out;
  out.norm = operator_norm(m);
  out.norm_ok = out.norm <= spec.R;
  check_moments(trace_words(m, spec.k), spec, out);
  out.member = out.norm_ok && out.moments_ok;
  return out;
}

MembershipResult in_gamma_tilde(const ComplexMatrix& m, const MicrostateSpec& spec) {
  if (!spec.improved) throw std::invalid_argument("improved: in_gamma_tilde needs a Brown constraint");
  MembershipResult out = in_gamma(m, spec);
  const auto& c = *spec.improved;
  const double d = moment_distance(MeasureSpec::empirical(eigenvalues(m)), c.mu, c.l);
  out.brown_distance = d;
  out.brown_ok = d < c.theta;
  out.member = out.member && out.brown_ok;
  return out;
}

MembershipResult in_gamma_diag(const ComplexMatrix& d, double R, const MeasureSpec& mu, int l,
                               double theta) {
  require_valid(d);
  const Eigen::Index n = d.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j && d(i, j) != Complex{})
        throw std::invalid_argument("in_gamma_diag: matrix is not diagonal");
  std::vector<Complex> diag(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = d(i, i);
  MembershipResult out;
  for (const Complex& z : diag) out.norm = std::max(out.norm, std::abs(z));
  out.norm_ok = out.norm <= R;
  out.moments_ok = true;
  const double dist = moment_distance(MeasureSpec::empirical(std::move(diag)), mu, l);
  out.brown_distance = dist;
  out.brown_ok = dist < theta;
  out.member = out.norm_ok && out.brown_ok;
  return out;
}

WilsonInterval wilson_interval(int hits, int trials) {
  if (trials <= 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = trials;
  const double p = hits / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  // The score interval touches 0 (1) exactly when no (every) trial hits.
  return {hits == 0 ? 0.0 : std::max(0.0, center - half), hits == trials ? 1.0 : std::min(1.0, center + half)};
}

HitRate hit_rate(const EnsembleSpec& ensemble, const MicrostateSpec& spec, int trials, const Seed& seed) {
  if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
  spec.validate();
  ensemble.validate();
  std::vector<char> pass(static_cast<std::size_t>(trials), 0);
  parallel_for(pass.size(), [&](std::size_t t) {
    const ComplexMatrix m = sample(ensemble, seed.trial(t));
    pass[t] = spec.improved ? in_gamma_tilde(m, spec).member : in_gamma(m, spec).member;
  });
  HitRate out;
  out.trials = trials;
  out.hits = static_cast<int>(std::count(pass.begin(), pass.end(), 1));
  out.fraction = static_cast<double>(out.hits) / trials;
  out.interval = wilson_interval(out.hits, trials);
  return out;
}

SweepReport regularization_sweep(const EnsembleSpec& base, std::span<const double> t_grid,
                                 const MeasureSpec& mu, int l, int trials, const Seed& seed,
                                 int histogram_bins) {
  if (t_grid.empty()) throw std::invalid_argument("t_grid: must be nonempty");
  if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (l < 0) throw std::invalid_argument("l: must be >= 0");
  if (histogram_bins < 1) throw std::invalid_argument("histogram_bins: must be >= 1");
  base.validate();

  SweepReport report;
  report.l = l;
  report.radial_max = std::max(1.5 * mu.support_radius(), 1e-12);
  const auto bins = static_cast<std::size_t>(histogram_bins);

  for (double t : t_grid) {
    if (!(t >= 0.0)) throw std::invalid_argument("t_grid: entries must be >= 0");
    std::vector<double> distance(static_cast<std::size_t>(trials));
    std::vector<std::vector<double>> hist(distance.size(), std::vector<double>(bins, 0.0));
    std::vector<Complex> first;
    parallel_for(distance.size(), [&](std::size_t trial) {
      const ComplexMatrix m = sample_perturbed(base, t, seed.trial(trial));
      EmpiricalSpectrum spectrum = eigenvalues(m);
      const double weight = 1.0 / static_cast<double>(spectrum.size());
      for (const Complex& z : spectrum.points) {
        const auto b = static_cast<std::size_t>(std::abs(z) / report.radial_max * static_cast<double>(bins));
        hist[trial][std::min(b, bins - 1)] += weight;
      }
      distance[trial] = moment_distance(MeasureSpec::empirical(spectrum), mu, l);
      if (trial == 0) first = std::move(spectrum.points);
    });

    SweepRow row;
    row.t = t;
    row.trials = trials;
    for (double d : distance) row.mean_distance += d;
    row.mean_distance /= trials;
    if (trials > 1) {
      double ss = 0.0;
      for (double d : distance) ss += (d - row.mean_distance) * (d - row.mean_distance);
      row.std_distance = std::sqrt(ss / (trials - 1));
    }
    row.radial_histogram.assign(bins, 0.0);
    for (const auto& h : hist)
      for (std::size_t b = 0; b < bins; ++b) row.radial_histogram[b] += h[b] / trials;
    row.first_spectrum = std::move(first);
    report.rows.push_back(std::move(row));
  }
  return report;
}

double vol_d_log_weight(std::span<const Complex> lambdas) {
  const std::size_t n = lambdas.size();
  if (n < 1) throw std::invalid_argument("vol_d_log_weight: need at least one point");
  const double nd = static_cast<double>(n);
  double acc = 0.5 * (nd * nd - nd) * std::log(std::numbers::pi);
  for (std::size_t i = 1; i <= n; ++i) acc -= std::lgamma(static_cast<double>(i) + 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(lambdas[i] - lambdas[j]);
      if (gap == 0.0) return -std::numeric_limits<double>::infinity();
      acc += 2.0 * std::log(gap);
    }
  return acc;
}

double word_perturbation_bound(int k, double R, double delta) {
  return k * delta * std::pow(std::max(1.0, R + delta), k - 1) * std::pow(2.0, k);
}

}  // namespace brownlab
