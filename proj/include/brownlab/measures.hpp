// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "brownlab/matcore.hpp"

namespace brownlab {

struct PointMass {
  Complex c;
  bool operator==(const PointMass&) const = default;
};

struct UniformDisk {
  Complex center;
  double radius = 1.0;
  bool operator==(const UniformDisk&) const = default;
};

struct UniformCircle {
  Complex center;
  double radius = 1.0;
  bool operator==(const UniformCircle&) const = default;
};

// Wigner semicircle on [center - radius, center + radius]; variance radius^2 / 4.
struct SemicircleOnR {
  double center = 0.0;
  double radius = 2.0;
  bool operator==(const SemicircleOnR&) const = default;
};

struct FiniteAtomic {
  std::vector<Complex> points;
  std::vector<double> weights;
  bool operator==(const FiniteAtomic&) const = default;
};

// Equal weight 1/n on each point, duplicates allowed.
struct Empirical {
  std::vector<Complex> points;
  bool operator==(const Empirical&) const = default;
};

// A compactly supported probability measure on C. Construction validates the
// parameters (positive radii, weights summing to one, finite points).
class MeasureSpec {
 public:
  using Variant =
      std::variant<PointMass, UniformDisk, UniformCircle, SemicircleOnR, FiniteAtomic, Empirical>;

  MeasureSpec(Variant v);  // NOLINT(google-explicit-constructor)

  static MeasureSpec point_mass(Complex c) { return Variant{PointMass{c}}; }
  static MeasureSpec uniform_disk(Complex center = 0.0, double radius = 1.0) {
    return Variant{UniformDisk{center, radius}};
  }
  static MeasureSpec uniform_circle(Complex center = 0.0, double radius = 1.0) {
    return Variant{UniformCircle{center, radius}};
  }
  static MeasureSpec semicircle(double center = 0.0, double radius = 2.0) {
    return Variant{SemicircleOnR{center, radius}};
  }
  static MeasureSpec finite_atomic(std::vector<Complex> points, std::vector<double> weights) {
    return Variant{FiniteAtomic{std::move(points), std::move(weights)}};
  }
  static MeasureSpec empirical(std::vector<Complex> points) { return Variant{Empirical{std::move(points)}}; }
  static MeasureSpec empirical(const EmpiricalSpectrum& spectrum) { return Variant{Empirical{spectrum.points}}; }

  const Variant& variant() const { return v_; }
  std::string kind_name() const;

  bool has_atom() const;
  bool is_real_supported() const;
  // sup |z| over the support.
  double support_radius() const;

  bool operator==(const MeasureSpec&) const = default;

 private:
  Variant v_;
};

// Integral of z^i conj(z)^j.
Complex moment(const MeasureSpec& mu, int i, int j);

// All moments for 0 <= i, j <= l, row-major in (i, j).
std::vector<Complex> moment_table(const MeasureSpec& mu, int l);

// max_{0 <= i,j <= l} |moment(mu,i,j) - moment(nu,i,j)|.
double moment_distance(const MeasureSpec& mu, const MeasureSpec& nu, int l);

// Real part of moment(mu, 1, 1).
double second_moment_radial(const MeasureSpec& mu);

struct LogEnergy {
  double value = 0.0;       // may be -inf
  double abs_error = 0.0;   // 0 for closed forms
  bool budget_exhausted = false;
};

// Double integral of log|z1 - z2|; -inf for measures with atoms. The
// semicircle uses nested adaptive quadrature targeting absolute error 1e-4.
LogEnergy log_energy(const MeasureSpec& mu);

// (1/N^2) sum_{i != j} log|z_i - z_j|; -inf when two points coincide.
// Throws std::invalid_argument for fewer than two points.
double empirical_log_energy(std::span<const Complex> points);

// Image of mu under z -> a z + b. SemicircleOnR requires real a != 0 and real b.
MeasureSpec affine_image(const MeasureSpec& mu, Complex a, Complex b);

std::vector<Complex> sample_points(const MeasureSpec& mu, std::size_t n, std::mt19937_64& rng);

}  // namespace brownlab
