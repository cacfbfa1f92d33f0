// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "brownlab/measures.hpp"
#include "brownlab/microstates.hpp"
#include "brownlab/random.hpp"

namespace brownlab {

struct Offdiagonality {
  double value = 0.0;
  bool inconsistent = false;  // value < 0: inputs cannot come from one operator
};

// tau(x x^*) - integral |z|^2 d mu.
Offdiagonality offdiagonality(double second_star_moment, const MeasureSpec& mu);

// log_energy(mu) + 3/4 + (ln pi) / 2.
double diagonal_entropy(const MeasureSpec& mu);

// log_energy(mu) + 5/4 + ln(pi sqrt(2 od)); -inf for od == 0 or atomic mu.
double entropy_upper_bound(const MeasureSpec& mu, double od);

// log_energy(mu) + 3/4 + (ln 2 pi) / 2 for mu supported on the real line.
double selfadjoint_entropy(const MeasureSpec& mu);

// log(pi e v^exponent), v = phi_xx - |phi_x|^2; exponent 1 (default) or 2 (as printed).
double variance_bound(double phi_xx, Complex phi_x, int exponent = 1);

// (1/N^2) log vol{m strictly upper: (1/N) sum |m_ij|^2 <= o} + (log N) / 2.
double ball_log_volume(int n, double o);
// 1/2 + log(2 pi o) / 2.
double ball_log_volume_limit(double o);

struct DtRow {
  int n = 0;
  HitRate hits;
  double lower_bound = 0.0;  // diagonal_entropy + ball_log_volume(n, (1 - delta) o)
};

struct EntropyReport {
  MeasureSpec measure = MeasureSpec::uniform_disk();
  double od = 0.0;
  double second_star_moment = 0.0;
  Complex first_moment{};
  double log_energy = 0.0;
  double log_energy_error = 0.0;
  double diagonal_entropy = 0.0;
  double upper_bound = 0.0;
  double variance_bound = 0.0;          // exponent 1
  double variance_bound_printed = 0.0;  // exponent 2
  std::optional<double> selfadjoint_entropy{};
  // dt_equality_report only.
  double delta = 0.0;
  double lower_bound_limit = 0.0;  // diagonal_entropy + 1/2 + log(2 pi o)/2
  std::vector<DtRow> rows{};
};

// Closed-form quantities for an operator with Brown measure mu and offdiagonality od.
EntropyReport entropy_report(const MeasureSpec& mu, double od);

struct DtVerifyParams {
  std::vector<int> dims{100, 200, 400};
  int k = 2;
  double eps = 0.1;
  double R = 4.0;
  int trials = 50;
  double delta = 0.05;
  // Target table: Monte Carlo at target_dim (0 = largest of dims).
  int target_dim = 0;
  int target_trials = 50;
};

// Upper bound, DT hit rates in Gamma per N, and finite-N lower-bound diagnostics.
EntropyReport dt_equality_report(const MeasureSpec& nu, double o, const DtVerifyParams& params,
                                 const Seed& seed);

}  // namespace brownlab
