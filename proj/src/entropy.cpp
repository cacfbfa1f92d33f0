// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace brownlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogPi = std::log(std::numbers::pi);

}  // namespace

Offdiagonality offdiagonality(double second_star_moment, const MeasureSpec& mu) {
  if (!(second_star_moment >= 0.0)) throw std::invalid_argument("second_star_moment: must be >= 0");
  const double v = second_star_moment - second_moment_radial(mu);
  return {v, v < 0.0};
}

double diagonal_entropy(const MeasureSpec& mu) { return log_energy(mu).value + 0.75 + 0.5 * kLogPi; }

double entropy_upper_bound(const MeasureSpec& mu, double od) {
  if (!(od >= 0.0)) throw std::invalid_argument("od: must be >= 0");
  if (od == 0.0) return kNegInf;
  return log_energy(mu).value + 1.25 + std::log(std::numbers::pi * std::sqrt(2.0 * od));
}

double selfadjoint_entropy(const MeasureSpec& mu) {
  if (!mu.is_real_supported())
    throw std::invalid_argument("selfadjoint_entropy: measure is not supported on the real line");
  return log_energy(mu).value + 0.75 + 0.5 * std::log(2.0 * std::numbers::pi);
}

double variance_bound(double phi_xx, Complex phi_x, int exponent) {
  if (exponent != 1 && exponent != 2) throw std::invalid_argument("exponent: must be 1 or 2");
  double v = phi_xx - std::norm(phi_x);
  if (v < 0.0 && v >= -1e-12) v = 0.0;
  if (v < 0.0) throw std::invalid_argument("variance_bound: phi(|x|^2) < |phi(x)|^2");
  if (v == 0.0) return kNegInf;
  return std::log(std::numbers::pi * std::numbers::e) + exponent * std::log(v);
}

double ball_log_volume(int n, double o) {
  if (n < 2) throw std::invalid_argument("N: must be >= 2");
  if (!(o > 0.0)) throw std::invalid_argument("o: must be positive");
  // Real dimension 2M, M = N(N-1)/2, radius sqrt(oN).
  const double nd = n;
  const double half_dim = nd * (nd - 1.0) / 2.0;
  const double log_vol = half_dim * kLogPi - std::lgamma(half_dim + 1.0) + half_dim * std::log(o * nd);
  return log_vol / (nd * nd) + 0.5 * std::log(nd);
}

double ball_log_volume_limit(double o) {
  if (!(o > 0.0)) throw std::invalid_argument("o: must be positive");
  return 0.5 + 0.5 * std::log(2.0 * std::numbers::pi * o);
}

EntropyReport entropy_report(const MeasureSpec& mu, double od) {
  if (!(od >= 0.0)) throw std::invalid_argument("od: must be >= 0");
  EntropyReport r{.measure = mu, .od = od};
  const LogEnergy e = log_energy(mu);
  r.log_energy = e.value;
  r.log_energy_error = e.abs_error;
  r.second_star_moment = second_moment_radial(mu) + od;
  r.first_moment = moment(mu, 1, 0);
  r.diagonal_entropy = diagonal_entropy(mu);
  r.upper_bound = entropy_upper_bound(mu, od);
  r.variance_bound = variance_bound(r.second_star_moment, r.first_moment, 1);
  r.variance_bound_printed = variance_bound(r.second_star_moment, r.first_moment, 2);
  if (mu.is_real_supported()) r.selfadjoint_entropy = selfadjoint_entropy(mu);
  return r;
}

EntropyReport dt_equality_report(const MeasureSpec& nu, double o, const DtVerifyParams& params,
                                 const Seed& seed) {
  if (!(o > 0.0)) throw std::invalid_argument("od: must be positive");
  if (params.dims.empty()) throw std::invalid_argument("grids.N: must be nonempty");
  if (!(params.delta > 0.0 && params.delta < 1.0)) throw std::invalid_argument("delta: must lie in (0, 1)");

  EntropyReport r = entropy_report(nu, o);
  r.delta = params.delta;
  r.lower_bound_limit = r.diagonal_entropy + ball_log_volume_limit(o);

  const int target_dim =
      params.target_dim > 0 ? params.target_dim : *std::max_element(params.dims.begin(), params.dims.end());
  MicrostateSpec spec;
  spec.R = params.R;
  spec.k = params.k;
  spec.eps = params.eps;
  spec.targets = target_table(DTModel{nu, o}, params.k,
                              MonteCarloParams{target_dim, params.target_trials, seed.stream("targets")});

  for (int n : params.dims) {
    DtRow row;
    row.n = n;
    row.hits = hit_rate(EnsembleSpec::dt(nu, o, n), spec, params.trials,
                        seed.stream("hits").trial(static_cast<std::uint64_t>(n)));
    row.lower_bound = r.diagonal_entropy + ball_log_volume(n, (1.0 - params.delta) * o);
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace brownlab
