// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/models.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "brownlab/ensembles.hpp"

namespace brownlab {

namespace {

// Counts pairings of letters[lo, hi): the first letter pairs with an opposite
// letter at an odd offset; inside and outside segments are counted independently.
std::int64_t count_pairings(std::span<const Letter> letters, std::size_t lo, std::size_t hi) {
  if (lo == hi) return 1;
  if ((hi - lo) % 2 != 0) return 0;
  std::int64_t total = 0;
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    if (letters[j] == letters[lo]) continue;
    const std::int64_t inside = count_pairings(letters, lo + 1, j);
    if (inside == 0) continue;
    total += inside * count_pairings(letters, j + 1, hi);
  }
  return total;
}

struct WordStats {
  std::map<StarWord, Complex> sum;
  std::map<StarWord, double> sum_abs2;
};

}  // namespace

std::string model_name(const OperatorModel& model) {
  switch (model.index()) {
    case 0: return "Circular";
    case 1: return "HaarUnitary";
    default: return "DT";
  }
}

double StarMomentTable::standard_error(const StarWord& w) const {
  auto it = stderr_.find(w);
  return it == stderr_.end() ? 0.0 : it->second;
}

std::int64_t circular_moment(const StarWord& w) {
  if (w.size() % 2 != 0 || w.count(Letter::Id) != w.count(Letter::Star)) return 0;
  return count_pairings(w.letters(), 0, w.size());
}

int haar_moment(const StarWord& w) { return w.count(Letter::Id) == w.count(Letter::Star) ? 1 : 0; }

StarMomentTable dt_moment_table_mc(const MeasureSpec& nu, double o, int k, int n, int trials,
                                   const Seed& seed) {
  if (trials < 2) throw std::invalid_argument("trials: Monte Carlo needs at least 2 trials");
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  std::vector<std::map<StarWord, Complex>> per_trial(static_cast<std::size_t>(trials));
  parallel_for(per_trial.size(), [&](std::size_t t) {
    per_trial[t] = trace_words(sample_dt(nu, o, n, seed.trial(t)), k);
  });

  StarMomentTable table;
  table.max_len = k;
  const double count = static_cast<double>(trials);
  for (const StarWord& w : all_words(k)) {
    Complex mean = 0.0;
    for (const auto& sample : per_trial) mean += sample.at(w);
    mean /= count;
    double ss = 0.0;
    for (const auto& sample : per_trial) ss += std::norm(sample.at(w) - mean);
    table.values.emplace(w, mean);
    table.stderr_.emplace(w, std::sqrt(ss / (count - 1.0) / count));
  }
  return table;
}

MonteCarloEstimate dt_moment_mc(const MeasureSpec& nu, double o, const StarWord& w, int n, int trials,
                                const Seed& seed) {
  if (trials < 2) throw std::invalid_argument("trials: Monte Carlo needs at least 2 trials");
  std::vector<Complex> samples(static_cast<std::size_t>(trials));
  parallel_for(samples.size(), [&](std::size_t t) {
    samples[t] = trace_word(sample_dt(nu, o, n, seed.trial(t)), w);
  });
  Complex mean = 0.0;
  for (const Complex& s : samples) mean += s;
  mean /= static_cast<double>(trials);
  double ss = 0.0;
  for (const Complex& s : samples) ss += std::norm(s - mean);
  return {mean, std::sqrt(ss / (trials - 1.0) / trials)};
}

StarMomentTable target_table(const OperatorModel& model, int k, const MonteCarloParams& mc) {
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  if (const auto* dt = std::get_if<DTModel>(&model))
    return dt_moment_table_mc(dt->nu, dt->o, k, mc.dim, mc.trials, mc.seed);

  StarMomentTable table;
  table.max_len = k;
  const bool circular = std::holds_alternative<CircularModel>(model);
  for (const StarWord& w : all_words(k)) {
    const double v = circular ? static_cast<double>(circular_moment(w)) : haar_moment(w);
    table.values.emplace(w, Complex(v, 0.0));
    table.stderr_.emplace(w, 0.0);
  }
  return table;
}

ModelDescriptor model_descriptor(const OperatorModel& model) {
  if (std::holds_alternative<CircularModel>(model)) return {MeasureSpec::uniform_disk(), 0.5};
  if (std::holds_alternative<HaarUnitaryModel>(model)) return {MeasureSpec::uniform_circle(), 0.0};
  const auto& dt = std::get<DTModel>(model);
  return {dt.nu, dt.o};
}

double second_star_moment(const OperatorModel& model) {
  const ModelDescriptor d = model_descriptor(model);
  return second_moment_radial(d.brown) + d.od;
}

}  // namespace brownlab
