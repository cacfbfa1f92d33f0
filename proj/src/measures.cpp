// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace brownlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLogEnergyTarget = 1e-4;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument(std::string(what) + ": radius must be positive and finite");
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int t = 1; t <= k; ++t) b = b * static_cast<double>(n - k + t) / static_cast<double>(t);
  return b;
}

Complex ipow(Complex z, int p) {
  Complex out = 1.0;
  for (int t = 0; t < p; ++t) out *= z;
  return out;
}

// E[(c + r w)^i conj(c + r w)^j] for a rotation-invariant w with E|w|^{2a} = radial(a).
template <class Radial>
Complex rotational_moment(Complex c, double r, int i, int j, Radial radial) {
  Complex acc = 0.0;
  const Complex cb = std::conj(c);
  for (int a = 0; a <= std::min(i, j); ++a)
    acc += binomial(i, a) * binomial(j, a) * ipow(c, i - a) * ipow(cb, j - a) *
           std::pow(r, 2 * a) * radial(a);
  return acc;
}

// E[s^n] for s semicircular on [-1, 1]: Catalan(n/2) / 4^(n/2) for even n.
double semicircle_unit_moment(int n) {
  if (n % 2 != 0) return 0.0;
  const int m = n / 2;
  return binomial(2 * m, m) / static_cast<double>(m + 1) / std::pow(4.0, m);
}

// Weighted atom sum shared by FiniteAtomic and Empirical.
void atomic_moment_table(std::span<const Complex> pts, const std::vector<double>* weights, int l,
                         std::vector<Complex>& out) {
  const std::size_t side = static_cast<std::size_t>(l + 1);
  out.assign(side * side, Complex{});
  std::vector<Complex> zp(side), zbp(side);
  const double uniform = 1.0 / static_cast<double>(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double w = weights ? (*weights)[k] : uniform;
    zp[0] = zbp[0] = 1.0;
    for (std::size_t p = 1; p < side; ++p) {
      zp[p] = zp[p - 1] * pts[k];
      zbp[p] = zbp[p - 1] * std::conj(pts[k]);
    }
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) out[i * side + j] += w * zp[i] * zbp[j];
  }
}

LogEnergy semicircle_log_energy(const SemicircleOnR& s) {
  using boost::math::quadrature::gauss_kronrod;
  using boost::math::quadrature::tanh_sinh;
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double density = 2.0 / std::numbers::pi;  // times cos^2 under x = sin(angle)
  constexpr unsigned max_depth = 15;

  // Potential of the unit-radius semicircle at sin(alpha), split at the log singularity.
  tanh_sinh<double> inner_rule;
  double worst_inner_error = 0.0;
  auto potential = [&](double alpha) {
    const double x = std::sin(alpha);
    auto f = [x](double beta) {
      const double gap = std::abs(x - std::sin(beta));
      const double c = std::cos(beta);
      return gap > 0.0 ? std::log(gap) * density * c * c : 0.0;
    };
    double err_left = 0.0, err_right = 0.0;
    double left = alpha > -half_pi ? inner_rule.integrate(f, -half_pi, alpha, 1e-12, &err_left) : 0.0;
    double right = alpha < half_pi ? inner_rule.integrate(f, alpha, half_pi, 1e-12, &err_right) : 0.0;
    worst_inner_error = std::max(worst_inner_error, err_left + err_right);
    return left + right;
  };
  auto outer = [&](double alpha) {
    const double c = std::cos(alpha);
    return potential(alpha) * density * c * c;
  };
  double outer_error = 0.0;
  const double unit = gauss_kronrod<double, 31>::integrate(outer, -half_pi, half_pi, max_depth,
                                                           1e-10, &outer_error);
  LogEnergy out;
  out.value = unit + std::log(s.radius);
  out.abs_error = outer_error + worst_inner_error;
  out.budget_exhausted = out.abs_error > kLogEnergyTarget;
  return out;
}

}  // namespace

MeasureSpec::MeasureSpec(Variant v) : v_(std::move(v)) {
  std::visit(Overloaded{
                 [](const PointMass& m) {
                   if (!finite(m.c)) throw std::invalid_argument("PointMass: non-finite atom");
                 },
                 [](const UniformDisk& m) {
                   require_radius(m.radius, "UniformDisk");
                   if (!finite(m.center)) throw std::invalid_argument("UniformDisk: non-finite center");
                 },
                 [](const UniformCircle& m) {
                   require_radius(m.radius, "UniformCircle");
                   if (!finite(m.center)) throw std::invalid_argument("UniformCircle: non-finite center");
                 },
                 [](const SemicircleOnR& m) {
                   require_radius(m.radius, "SemicircleOnR");
                   if (!std::isfinite(m.center)) throw std::invalid_argument("SemicircleOnR: non-finite center");
                 },
                 [](const FiniteAtomic& m) {
                   if (m.points.empty() || m.points.size() != m.weights.size())
                     throw std::invalid_argument("FiniteAtomic: need one weight per point and at least one point");
                   double total = 0.0;
                   for (std::size_t k = 0; k < m.points.size(); ++k) {
                     if (!finite(m.points[k])) throw std::invalid_argument("FiniteAtomic: non-finite point");
                     if (!(m.weights[k] >= 0.0)) throw std::invalid_argument("FiniteAtomic: negative weight");
                     total += m.weights[k];
                   }
                   if (std::abs(total - 1.0) > 1e-12)
                     throw std::invalid_argument("FiniteAtomic: weights must sum to 1");
                 },
                 [](const Empirical& m) {
                   if (m.points.empty()) throw std::invalid_argument("Empirical: no points");
                   for (const Complex& z : m.points)
                     if (!finite(z)) throw std::invalid_argument("Empirical: non-finite point");
                 },
             },
             v_);
}

std::string MeasureSpec::kind_name() const {
  static constexpr const char* names[] = {"PointMass",     "UniformDisk",  "UniformCircle",
                                          "SemicircleOnR", "FiniteAtomic", "Empirical"};
  return names[v_.index()];
}

bool MeasureSpec::has_atom() const {
  return std::holds_alternative<PointMass>(v_) || std::holds_alternative<FiniteAtomic>(v_) ||
         std::holds_alternative<Empirical>(v_);
}

bool MeasureSpec::is_real_supported() const {
  return std::visit(Overloaded{
                        [](const PointMass& m) { return m.c.imag() == 0.0; },
                        [](const UniformDisk&) { return false; },
                        [](const UniformCircle&) { return false; },
                        [](const SemicircleOnR&) { return true; },
                        [](const FiniteAtomic& m) {
                          for (std::size_t k = 0; k < m.points.size(); ++k)
                            if (m.weights[k] > 0.0 && m.points[k].imag() != 0.0) return false;
                          return true;
                        },
                        [](const Empirical& m) {
                          return std::all_of(m.points.begin(), m.points.end(),
                                             [](Complex z) { return z.imag() == 0.0; });
                        },
                    },
                    v_);
}

double MeasureSpec::support_radius() const {
  return std::visit(Overloaded{
                        [](const PointMass& m) { return std::abs(m.c); },
                        [](const UniformDisk& m) { return std::abs(m.center) + m.radius; },
                        [](const UniformCircle& m) { return std::abs(m.center) + m.radius; },
                        [](const SemicircleOnR& m) { return std::abs(m.center) + m.radius; },
                        [](const FiniteAtomic& m) {
                          double r = 0.0;
                          for (std::size_t k = 0; k < m.points.size(); ++k)
                            if (m.weights[k] > 0.0) r = std::max(r, std::abs(m.points[k]));
                          return r;
                        },
                        [](const Empirical& m) {
                          double r = 0.0;
                          for (const Complex& z : m.points) r = std::max(r, std::abs(z));
                          return r;
                        },
                    },
                    v_);
}

Complex moment(const MeasureSpec& mu, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("moment: indices must be nonnegative");
  return std::visit(
      Overloaded{
          [&](const PointMass& m) { return ipow(m.c, i) * ipow(std::conj(m.c), j); },
          [&](const UniformCircle& m) {
            return rotational_moment(m.center, m.radius, i, j, [](int) { return 1.0; });
          },
          [&](const UniformDisk& m) {
            return rotational_moment(m.center, m.radius, i, j,
                                     [](int a) { return 1.0 / static_cast<double>(a + 1); });
          },
          [&](const SemicircleOnR& m) {
            // Real support: z^i conj(z)^j = x^{i+j}.
            const int n = i + j;
            double acc = 0.0;
            for (int p = 0; p <= n; ++p)
              acc += binomial(n, p) * std::pow(m.center, n - p) * std::pow(m.radius, p) *
                     semicircle_unit_moment(p);
            return Complex(acc, 0.0);
          },
          [&](const FiniteAtomic& m) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < m.points.size(); ++k)
              acc += m.weights[k] * ipow(m.points[k], i) * ipow(std::conj(m.points[k]), j);
            return acc;
          },
          [&](const Empirical& m) {
            Complex acc = 0.0;
            for (const Complex& z : m.points) acc += ipow(z, i) * ipow(std::conj(z), j);
            return acc / static_cast<double>(m.points.size());
          },
      },
      mu.variant());
}

std::vector<Complex> moment_table(const MeasureSpec& mu, int l) {
  if (l < 0) throw std::invalid_argument("moment_table: l must be nonnegative");
  std::vector<Complex> out;
  if (const auto* e = std::get_if<Empirical>(&mu.variant())) {
    atomic_moment_table(e->points, nullptr, l, out);
  } else if (const auto* a = std::get_if<FiniteAtomic>(&mu.variant())) {
    atomic_moment_table(a->points, &a->weights, l, out);
  } else {
    const std::size_t side = static_cast<std::size_t>(l + 1);
    out.resize(side * side);
    for (int i = 0; i <= l; ++i)
      for (int j = 0; j <= l; ++j) out[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)] = moment(mu, i, j);
  }
  return out;
}

double moment_distance(const MeasureSpec& mu, const MeasureSpec& nu, int l) {
  const std::vector<Complex> a = moment_table(mu, l);
  const std::vector<Complex> b = moment_table(nu, l);
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double second_moment_radial(const MeasureSpec& mu) { return moment(mu, 1, 1).real(); }

LogEnergy log_energy(const MeasureSpec& mu) {
  return std::visit(Overloaded{
                        [](const UniformCircle& m) { return LogEnergy{std::log(m.radius)}; },
                        [](const UniformDisk& m) { return LogEnergy{std::log(m.radius) - 0.25}; },
                        [](const SemicircleOnR& m) { return semicircle_log_energy(m); },
                        [](const auto&) { return LogEnergy{kNegInf}; },
                    },
                    mu.variant());
}

double empirical_log_energy(std::span<const Complex> points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("empirical_log_energy: need at least two points");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(points[i] - points[j]);
      if (gap < 1e-300) return kNegInf;
      acc += std::log(gap);
    }
  }
  // Each unordered pair appears twice in the i != j sum.
  return 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n));
}

MeasureSpec affine_image(const MeasureSpec& mu, Complex a, Complex b) {
  auto map_points = [&](std::vector<Complex> pts) {
    for (Complex& z : pts) z = a * z + b;
    return pts;
  };
  if (a == Complex{} && !mu.has_atom()) return MeasureSpec::point_mass(b);
  return std::visit(
      Overloaded{
          [&](const PointMass& m) { return MeasureSpec::point_mass(a * m.c + b); },
          [&](const UniformDisk& m) { return MeasureSpec::uniform_disk(a * m.center + b, std::abs(a) * m.radius); },
          [&](const UniformCircle& m) {
            return MeasureSpec::uniform_circle(a * m.center + b, std::abs(a) * m.radius);
          },
          [&](const SemicircleOnR& m) {
            if (a.imag() != 0.0 || b.imag() != 0.0)
              throw std::invalid_argument("affine_image: semicircle image must stay on the real line");
            return MeasureSpec::semicircle(a.real() * m.center + b.real(), std::abs(a.real()) * m.radius);
          },
          [&](const FiniteAtomic& m) { return MeasureSpec::finite_atomic(map_points(m.points), m.weights); },
          [&](const Empirical& m) { return MeasureSpec::empirical(map_points(m.points)); },
      },
      mu.variant());
}

std::vector<Complex> sample_points(const MeasureSpec& mu, std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> out;
  out.reserve(n);
  const double two_pi = 2.0 * std::numbers::pi;
  std::visit(Overloaded{
                 [&](const PointMass& m) { out.assign(n, m.c); },
                 [&](const UniformDisk& m) {
                   for (std::size_t k = 0; k < n; ++k) {
                     const double r = m.radius * std::sqrt(unit(rng));
                     out.push_back(m.center + std::polar(r, two_pi * unit(rng)));
                   }
                 },
                 [&](const UniformCircle& m) {
                   for (std::size_t k = 0; k < n; ++k) out.push_back(m.center + std::polar(m.radius, two_pi * unit(rng)));
                 },
                 [&](const SemicircleOnR& m) {
                   // Rejection from the bounding box of (2/pi) sqrt(1 - s^2).
                   while (out.size() < n) {
                     const double s = 2.0 * unit(rng) - 1.0;
                     if (unit(rng) <= std::sqrt(1.0 - s * s)) out.emplace_back(m.center + m.radius * s, 0.0);
                   }
                 },
                 [&](const FiniteAtomic& m) {
                   std::discrete_distribution<std::size_t> pick(m.weights.begin(), m.weights.end());
                   for (std::size_t k = 0; k < n; ++k) out.push_back(m.points[pick(rng)]);
                 },
                 [&](const Empirical& m) {
                   std::uniform_int_distribution<std::size_t> pick(0, m.points.size() - 1);
                   for (std::size_t k = 0; k < n; ++k) out.push_back(m.points[pick(rng)]);
                 },
             },
             mu.variant());
  return out;
}

}  // namespace brownlab
