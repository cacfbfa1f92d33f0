// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "brownlab/matcore.hpp"
#include "brownlab/measures.hpp"
#include "brownlab/random.hpp"

namespace brownlab {

struct CircularModel {
  bool operator==(const CircularModel&) const = default;
};
struct HaarUnitaryModel {
  bool operator==(const HaarUnitaryModel&) const = default;
};
// DT(nu, o): *-moment limit of D_N + sqrt(o) T_N.
struct DTModel {
  MeasureSpec nu;
  double o = 0.0;
  bool operator==(const DTModel&) const = default;
};

using OperatorModel = std::variant<CircularModel, HaarUnitaryModel, DTModel>;

std::string model_name(const OperatorModel& model);

// Target *-moments tau(x^{s_1} ... x^{s_p}) for all words of length <= max_len.
// Exact tables carry zero standard errors.
struct StarMomentTable {
  int max_len = 0;
  std::map<StarWord, Complex> values;
  std::map<StarWord, double> stderr_;

  const Complex& value(const StarWord& w) const { return values.at(w); }
  double standard_error(const StarWord& w) const;
  bool operator==(const StarMomentTable&) const = default;
};

struct MonteCarloEstimate {
  Complex estimate;
  double stderr_ = 0.0;  // sqrt(sample variance of |x - mean| / trials)
};

struct MonteCarloParams {
  int dim = 500;
  int trials = 50;
  Seed seed{0};
};

// Noncrossing pairings of the word's letters in which every pair joins a 1 with a *.
std::int64_t circular_moment(const StarWord& w);

// 1 iff the word has as many 1s as *s.
int haar_moment(const StarWord& w);

MonteCarloEstimate dt_moment_mc(const MeasureSpec& nu, double o, const StarWord& w, int n, int trials,
                                const Seed& seed);

// Monte Carlo table for every word of length <= k, one DT sample per trial.
StarMomentTable dt_moment_table_mc(const MeasureSpec& nu, double o, int k, int n, int trials,
                                   const Seed& seed);

StarMomentTable target_table(const OperatorModel& model, int k, const MonteCarloParams& mc = {});

struct ModelDescriptor {
  MeasureSpec brown;
  double od = 0.0;
};

ModelDescriptor model_descriptor(const OperatorModel& model);

// tau(x x^*) = integral |z|^2 d(brown) + od.
double second_star_moment(const OperatorModel& model);

}  // namespace brownlab
