// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace brownlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Raised when the dense Schur iteration does not converge within its sweep budget.
class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Letter : std::uint8_t { Id, Star };

// A nonempty word over {1, *}. Text form uses '1' and '*' ("1*1"); the
// unicode star U+22C6 is accepted on input.
class StarWord {
 public:
  explicit StarWord(std::vector<Letter> letters);

  static StarWord parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  std::span<const Letter> letters() const { return letters_; }
  std::string str() const;

  // Reversed and letter-flipped: tr(adjoint word) = conj(tr(word)).
  StarWord adjoint() const;
  // Rotate left by `shift` letters.
  StarWord rotated(std::size_t shift) const;

  int count(Letter letter) const;

  auto operator<=>(const StarWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// All 2 + 4 + ... + 2^max_len words, ordered by length then lexicographically (1 < *).
std::vector<StarWord> all_words(int max_len);

// The normalized counting measure (1/N) sum delta_{lambda_i} of a matrix spectrum.
struct EmpiricalSpectrum {
  std::vector<Complex> points;

  std::size_t size() const { return points.size(); }
  double mean_abs2() const;
};

struct SchurForm {
  ComplexMatrix unitary;
  ComplexVector diagonal;
  ComplexMatrix strict_upper;

  ComplexMatrix reconstruct() const;
};

// Throws std::invalid_argument unless m is square, nonempty and finite.
void require_valid(const ComplexMatrix& m);

// (1/N) Tr of the product of m / m^* factors in word order.
Complex trace_word(const ComplexMatrix& m, const StarWord& w);

// Normalized traces of every word of length <= max_len, sharing prefix products.
std::map<StarWord, Complex> trace_words(const ComplexMatrix& m, int max_len);

// Singular values in decreasing order.
std::vector<double> singular_values(const ComplexMatrix& m);

double operator_norm(const ComplexMatrix& m);

// Eigenvalues with multiplicity, via the complex Schur form.
EmpiricalSpectrum eigenvalues(const ComplexMatrix& m);

// m = u (diag(d) + t) u^*, u unitary, t strictly upper triangular with exact zeros
// on and below the diagonal.
SchurForm schur_decompose(const ComplexMatrix& m);

// exp(mean log sigma_i). Singular values below N * eps * sigma_max count as zero,
// in which case the result is exactly 0 (log form: -inf).
double log_fk_determinant(const ComplexMatrix& m);
double fk_determinant(const ComplexMatrix& m);

// tr(m m^*) - (1/N) sum |lambda_i|^2, clamped to 0 when in [-1e-10, 0).
double offdiag_second_moment(const ComplexMatrix& m);
double offdiag_second_moment(const ComplexMatrix& m, const EmpiricalSpectrum& spectrum);

// tr(m m^*) = ||m||_F^2 / N.
double normalized_frobenius2(const ComplexMatrix& m);

// Bottleneck matching distance between two equal-size multisets: the smallest
// d such that a perfect matching exists using only pairs with |a_i - b_j| <= d.
double matching_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace brownlab
