// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "brownlab/ensembles.hpp"
#include "brownlab/matcore.hpp"
#include "brownlab/measures.hpp"
#include "brownlab/models.hpp"

namespace brownlab {

// Eigenvalue-moment constraint |int z^i conj(z)^j d(mu_m - mu)| < theta, 0 <= i,j <= l.
struct BrownConstraint {
  int l = 1;
  double theta = 0.1;
  MeasureSpec mu = MeasureSpec::uniform_disk();
};

// Parameters (R, k, eps) of a microstate set, optionally refined by a Brown constraint.
// With inflate_by_stderr, word w is tested against eps + 3 * stderr(w) of the target table.
struct MicrostateSpec {
  double R = 1.0;
  int k = 1;
  double eps = 0.1;
  std::optional<BrownConstraint> improved;
  StarMomentTable targets;
  bool inflate_by_stderr = true;

  double effective_eps(const StarWord& w) const;
  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct MembershipResult {
  bool member = false;
  bool norm_ok = false;
  bool moments_ok = false;
  double norm = 0.0;
  // Word with the largest |tr - tau| - eps_w, and that deviation.
  std::optional<StarWord> worst_word;
  double worst_deviation = 0.0;
  double worst_excess = 0.0;
  // Set by in_gamma_tilde / in_gamma_diag.
  std::optional<double> brown_distance;
  bool brown_ok = true;

  explicit operator bool() const { return member; }
};

// Strict inequalities throughout: ||m|| <= R and |tr(w(m)) - tau(w)| < eps_w for |w| <= k.
MembershipResult in_gamma(const ComplexMatrix& m, const MicrostateSpec& spec);
// in_gamma plus the Brown constraint on the eigenvalues of m. Requires spec.improved.
MembershipResult in_gamma_tilde(const ComplexMatrix& m, const MicrostateSpec& spec);
// Diagonal microstates: ||d|| <= R and the Brown constraint on the diagonal entries.
// Throws std::invalid_argument when d has a nonzero off-diagonal entry.
MembershipResult in_gamma_diag(const ComplexMatrix& d, double R, const MeasureSpec& mu, int l,
                               double theta);

struct WilsonInterval {
  double lower = 0.0;
  double upper = 1.0;
};

// 95% Wilson score interval.
WilsonInterval wilson_interval(int hits, int trials);

struct HitRate {
  int hits = 0;
  int trials = 0;
  double fraction = 0.0;
  WilsonInterval interval;
};

// Fraction of ensemble samples (trial seeds seed.trial(i)) passing in_gamma, or
// in_gamma_tilde when spec.improved is set.
HitRate hit_rate(const EnsembleSpec& ensemble, const MicrostateSpec& spec, int trials, const Seed& seed);

struct SweepRow {
  double t = 0.0;
  double mean_distance = 0.0;
  double std_distance = 0.0;
  int trials = 0;
  std::vector<double> radial_histogram;  // mean fraction of eigenvalues per |lambda| bin
  std::vector<Complex> first_spectrum;   // eigenvalues from trial 0
};

struct SweepReport {
  int l = 1;
  double radial_max = 1.0;  // histogram covers [0, radial_max], overflow in the last bin
  std::vector<SweepRow> rows;
};

// For each t, samples base + t G per trial (same trial seeds across t) and
// records moment_distance(Empirical(eigenvalues), mu, l).
SweepReport regularization_sweep(const EnsembleSpec& base, std::span<const double> t_grid,
                                 const MeasureSpec& mu, int l, int trials, const Seed& seed,
                                 int histogram_bins = 20);

// Log of the vol^d density pi^{(N^2-N)/2} / prod_{i<=N} i! * prod_{i<j} |l_i - l_j|^2.
double vol_d_log_weight(std::span<const Complex> lambdas);

// Upper bound on |tr(w(m + B)) - tr(w(m))| over words |w| <= k when ||m|| <= R, ||B|| <= delta:
// k * delta * max(1, R + delta)^(k-1) * 2^k.
double word_perturbation_bound(int k, double R, double delta);

}  // namespace brownlab
