// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/ensembles.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace brownlab {

namespace {

constexpr std::array<const char*, 7> kKindNames = {"Ginibre",     "StrictUpperGaussian", "DiagonalIID", "DT",
                                                   "HaarUnitary", "Shift",               "Perturbed"};

void require_dim(int n) {
  if (n < 1) throw std::invalid_argument("dim: must be >= 1");
}

EnsembleSpec make(EnsembleSpec::Kind kind, int n) {
  EnsembleSpec s;
  s.kind = kind;
  s.dim = n;
  return s;
}

EnsembleSpec validated(EnsembleSpec s) {
  s.validate();
  return s;
}

}  // namespace

std::string kind_name(EnsembleSpec::Kind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

EnsembleSpec::Kind ensemble_kind_from_name(const std::string& name) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k)
    if (name == kKindNames[k]) return static_cast<EnsembleSpec::Kind>(k);
  throw std::invalid_argument("kind: unknown ensemble '" + name + "'");
}

EnsembleSpec EnsembleSpec::ginibre(int n) { return validated(make(Kind::Ginibre, n)); }
EnsembleSpec EnsembleSpec::strict_upper(int n) { return validated(make(Kind::StrictUpperGaussian, n)); }
EnsembleSpec EnsembleSpec::diagonal(MeasureSpec nu, int n) {
  EnsembleSpec s = make(Kind::DiagonalIID, n);
  s.measure = std::move(nu);
  return validated(std::move(s));
}
EnsembleSpec EnsembleSpec::dt(MeasureSpec nu, double o, int n) {
  EnsembleSpec s = make(Kind::DT, n);
  s.measure = std::move(nu);
  s.offdiag = o;
  return validated(std::move(s));
}
EnsembleSpec EnsembleSpec::haar_unitary(int n) { return validated(make(Kind::HaarUnitary, n)); }
EnsembleSpec EnsembleSpec::shift(int n) { return validated(make(Kind::Shift, n)); }
EnsembleSpec EnsembleSpec::perturbed(EnsembleSpec base, double t) {
  EnsembleSpec s = make(Kind::Perturbed, base.dimension());
  s.base = std::make_shared<const EnsembleSpec>(std::move(base));
  s.scale = t;
  return validated(std::move(s));
}

int EnsembleSpec::dimension() const {
  if (kind == Kind::Perturbed && base) return base->dimension();
  return dim;
}

EnsembleSpec EnsembleSpec::with_dimension(int n) const {
  EnsembleSpec out = *this;
  out.dim = n;
  if (kind == Kind::Perturbed && base)
    out.base = std::make_shared<const EnsembleSpec>(base->with_dimension(n));
  return out;
}

void EnsembleSpec::validate() const {
  if (kind == Kind::Perturbed) {
    if (!base) throw std::invalid_argument("base: Perturbed ensemble needs a base");
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale: must be >= 0");
    base->validate();
    return;
  }
  require_dim(dim);
  if ((kind == Kind::DiagonalIID || kind == Kind::DT) && !measure)
    throw std::invalid_argument("measure: required for " + kind_name(kind));
  if (kind == Kind::DT && (!(offdiag >= 0.0) || !std::isfinite(offdiag)))
    throw std::invalid_argument("offdiag: must be >= 0");
}

std::string EnsembleSpec::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << "(N=" << dimension();
  if (measure) os << ", measure=" << measure->kind_name();
  if (kind == Kind::DT) os << ", o=" << offdiag;
  if (kind == Kind::Perturbed) os << ", base=" << base->describe() << ", t=" << scale;
  os << ")";
  return os.str();
}

bool EnsembleSpec::operator==(const EnsembleSpec& other) const {
  if (kind != other.kind || dimension() != other.dimension() || measure != other.measure ||
      offdiag != other.offdiag || scale != other.scale)
    return false;
  if (static_cast<bool>(base) != static_cast<bool>(other.base)) return false;
  return !base || *base == *other.base;
}

ComplexMatrix sample_standard_gaussian(int n, const Seed& seed) {
  require_dim(n);
  auto rng = seed.engine();
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 / n));
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      g(i, j) = Complex(re, gauss(rng));
    }
  return g;
}

ComplexMatrix sample_strict_upper(int n, const Seed& seed) {
  require_dim(n);
  auto rng = seed.engine();
  std::normal_distribution<double> gauss(0.0, std::sqrt(1.0 / n));
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const double re = gauss(rng);
      t(i, j) = Complex(re, gauss(rng));
    }
  return t;
}

ComplexMatrix sample_diagonal(const MeasureSpec& nu, int n, const Seed& seed) {
  require_dim(n);
  auto rng = seed.engine();
  const std::vector<Complex> pts = sample_points(nu, static_cast<std::size_t>(n), rng);
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = pts[static_cast<std::size_t>(i)];
  return d;
}

ComplexMatrix sample_dt(const MeasureSpec& nu, double o, int n, const Seed& seed) {
  if (!(o >= 0.0)) throw std::invalid_argument("offdiag: must be >= 0");
  ComplexMatrix a = sample_diagonal(nu, n, seed.stream("diagonal"));
  if (o > 0.0) a += std::sqrt(o) * sample_strict_upper(n, seed.stream("upper"));
  return a;
}

ComplexMatrix sample_haar_unitary(int n, const Seed& seed) {
  const ComplexMatrix g = sample_standard_gaussian(n, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix nilpotent_shift(int n) {
  require_dim(n);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) s(i, i + 1) = 1.0;
  return s;
}

ComplexMatrix sample_perturbed(const EnsembleSpec& base, double t, const Seed& seed) {
  if (!(t >= 0.0)) throw std::invalid_argument("scale: must be >= 0");
  ComplexMatrix m = sample(base, seed.stream("base"));
  if (t > 0.0) m += t * sample_standard_gaussian(static_cast<int>(m.rows()), seed.stream("perturbation"));
  return m;
}

ComplexMatrix sample(const EnsembleSpec& spec, const Seed& seed) {
  spec.validate();
  using Kind = EnsembleSpec::Kind;
  switch (spec.kind) {
    case Kind::Ginibre: return sample_standard_gaussian(spec.dim, seed);
    case Kind::StrictUpperGaussian: return sample_strict_upper(spec.dim, seed);
    case Kind::DiagonalIID: return sample_diagonal(*spec.measure, spec.dim, seed);
    case Kind::DT: return sample_dt(*spec.measure, spec.offdiag, spec.dim, seed);
    case Kind::HaarUnitary: return sample_haar_unitary(spec.dim, seed);
    case Kind::Shift: return nilpotent_shift(spec.dim);
    case Kind::Perturbed: return sample_perturbed(*spec.base, spec.scale, seed);
  }
  throw std::logic_error("unhandled ensemble kind");
}

}  // namespace brownlab
