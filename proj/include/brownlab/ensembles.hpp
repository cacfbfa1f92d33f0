// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "brownlab/matcore.hpp"
#include "brownlab/measures.hpp"
#include "brownlab/random.hpp"

namespace brownlab {

// Description of a random (or deterministic) matrix family.
struct EnsembleSpec {
  enum class Kind { Ginibre, StrictUpperGaussian, DiagonalIID, DT, HaarUnitary, Shift, Perturbed };

  Kind kind = Kind::Ginibre;
  int dim = 1;                                 // ignored for Perturbed (taken from base)
  std::optional<MeasureSpec> measure;          // DiagonalIID, DT
  double offdiag = 0.0;                        // DT: o
  std::shared_ptr<const EnsembleSpec> base;    // Perturbed
  double scale = 0.0;                          // Perturbed: t

  static EnsembleSpec ginibre(int n);
  static EnsembleSpec strict_upper(int n);
  static EnsembleSpec diagonal(MeasureSpec nu, int n);
  static EnsembleSpec dt(MeasureSpec nu, double o, int n);
  static EnsembleSpec haar_unitary(int n);
  static EnsembleSpec shift(int n);
  static EnsembleSpec perturbed(EnsembleSpec base, double t);

  int dimension() const;
  // Same family at a different dimension (recurses through Perturbed).
  EnsembleSpec with_dimension(int n) const;
  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::string describe() const;

  bool operator==(const EnsembleSpec& other) const;
};

std::string kind_name(EnsembleSpec::Kind kind);
EnsembleSpec::Kind ensemble_kind_from_name(const std::string& name);

// Re and Im of each entry i.i.d. N(0, 1/(2N)); E|G_ij|^2 = 1/N.
ComplexMatrix sample_standard_gaussian(int n, const Seed& seed);
// Strictly upper entries with Re, Im i.i.d. N(0, 1/N); zeros on and below the diagonal.
ComplexMatrix sample_strict_upper(int n, const Seed& seed);
ComplexMatrix sample_diagonal(const MeasureSpec& nu, int n, const Seed& seed);
// D + sqrt(o) T with D drawn from seed.stream("diagonal") and T from seed.stream("upper").
ComplexMatrix sample_dt(const MeasureSpec& nu, double o, int n, const Seed& seed);
// QR of a Ginibre sample with the R-diagonal phases divided out.
ComplexMatrix sample_haar_unitary(int n, const Seed& seed);
ComplexMatrix nilpotent_shift(int n);
// base sample (seed.stream("base")) + t * G (seed.stream("perturbation")).
ComplexMatrix sample_perturbed(const EnsembleSpec& base, double t, const Seed& seed);

ComplexMatrix sample(const EnsembleSpec& spec, const Seed& seed);

}  // namespace brownlab
