// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "brownlab/ensembles.hpp"
#include "brownlab/matcore.hpp"
#include "support/oracles.hpp"

using namespace brownlab;

TEST_CASE("star words parse, print and order") {
  const StarWord w = StarWord::parse("1*1");
  CHECK(w.size() == 3);
  CHECK(w.str() == "1*1");
  CHECK(StarWord::parse("1\xE2\x8B\x86").str() == "1*");
  CHECK(w.adjoint().str() == "*1*");
  CHECK(StarWord::parse("11*").rotated(1).str() == "1*1");
  CHECK(w.count(Letter::Star) == 1);
  CHECK_THROWS_AS(StarWord::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(StarWord::parse("1x"), std::invalid_argument);

  const auto words = all_words(3);
  REQUIRE(words.size() == 14);
  CHECK(words[0].str() == "1");
  CHECK(words[1].str() == "*");
  CHECK(words[2].str() == "11");
  CHECK(words[5].str() == "**");
  CHECK(words.back().str() == "***");
  CHECK(std::is_sorted(words.begin() + 6, words.end()));
}

TEST_CASE("trace_word matches explicit products") {
  const ComplexMatrix m = sample_standard_gaussian(12, Seed(3));
  for (const StarWord& w : all_words(5))
    CHECK(std::abs(trace_word(m, w) - oracle::explicit_trace(m, w)) < 1e-12);
}

TEST_CASE("trace_words agrees with trace_word for every word") {
  const ComplexMatrix m = sample_standard_gaussian(9, Seed(11));
  const auto table = trace_words(m, 4);
  CHECK(table.size() == 30);
  for (const auto& [w, value] : table) CHECK(std::abs(value - trace_word(m, w)) < 1e-12);
  CHECK_THROWS_AS(trace_words(m, 0), std::invalid_argument);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eigenvalues(ComplexMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(ComplexMatrix(0, 0)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(3, 3);
  bad(1, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(operator_norm(bad), std::invalid_argument);
  CHECK_THROWS_AS(schur_decompose(bad), std::invalid_argument);
}

TEST_CASE("eigenvalues recover companion roots") {
  const std::vector<Complex> roots{{1.0, 0.5}, {-0.3, 0.2}, {0.0, -1.0}, {2.0, 0.0}, {-1.5, -0.5}};
  const EmpiricalSpectrum s = eigenvalues(oracle::companion(roots));
  CHECK(matching_distance(s.points, roots) < 1e-9);
}

TEST_CASE("eigenvalues agree with an independent Schur implementation") {
  for (int n : {1, 2, 7, 40}) {
    const ComplexMatrix m = sample_standard_gaussian(n, Seed(100 + n));
    const auto ours = eigenvalues(m).points;
    const auto ref = oracle::eigen_schur_eigenvalues(m);
    CHECK(matching_distance(ours, ref) < 1e-9);
  }
}

TEST_CASE("schur decomposition is unitary, triangular and reconstructs") {
  const ComplexMatrix m = sample_standard_gaussian(30, Seed(5));
  const SchurForm s = schur_decompose(m);
  const auto n = m.rows();
  CHECK((s.unitary.adjoint() * s.unitary - ComplexMatrix::Identity(n, n)).norm() < 1e-12);
  CHECK((s.reconstruct() - m).norm() < 1e-12 * (1.0 + m.norm()));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i) CHECK(s.strict_upper(i, j) == Complex(0.0));
  const std::vector<Complex> d(s.diagonal.data(), s.diagonal.data() + n);
  CHECK(matching_distance(d, eigenvalues(m).points) < 1e-10);
}

TEST_CASE("schur of a normal matrix has zero strict upper part") {
  const ComplexMatrix u = sample_haar_unitary(20, Seed(8));
  const SchurForm s = schur_decompose(u);
  CHECK(s.strict_upper.norm() < 1e-10);
  CHECK(offdiag_second_moment(u) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("singular values against Jacobi SVD") {
  const ComplexMatrix m = sample_standard_gaussian(25, Seed(21));
  const auto ours = singular_values(m);
  const auto ref = oracle::jacobi_singular_values(m);
  REQUIRE(ours.size() == ref.size());
  for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == doctest::Approx(ref[i]).epsilon(1e-12));
  CHECK(std::is_sorted(ours.rbegin(), ours.rend()));
  CHECK(operator_norm(m) == doctest::Approx(ref.front()).epsilon(1e-12));
}

TEST_CASE("Fuglede-Kadison determinant") {
  const ComplexMatrix m = sample_standard_gaussian(15, Seed(2));
  const double expected = std::pow(std::abs(m.determinant()), 1.0 / 15.0);
  CHECK(fk_determinant(m) == doctest::Approx(expected).epsilon(1e-10));

  CHECK(fk_determinant(nilpotent_shift(10)) == 0.0);
  CHECK(log_fk_determinant(nilpotent_shift(10)) == -std::numeric_limits<double>::infinity());

  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 2.0, Complex(0.0, 4.0), -1.0;
  CHECK(fk_determinant(d) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("offdiagonal second moment of triangular matrices") {
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t.diagonal() << 1.0, 2.0, 3.0;
  t(0, 1) = Complex(1.0, 1.0);
  t(1, 2) = 2.0;
  CHECK(normalized_frobenius2(t) == doctest::Approx((1 + 4 + 9 + 2 + 4) / 3.0));
  CHECK(offdiag_second_moment(t) == doctest::Approx(6.0 / 3.0).epsilon(1e-12));
  CHECK(offdiag_second_moment(ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("matching distance") {
  const std::vector<Complex> a{0.0, 1.0, Complex(0.0, 1.0)};
  const std::vector<Complex> b{Complex(0.0, 1.1), 0.05, 0.8};
  CHECK(matching_distance(a, b) == doctest::Approx(0.2));
  CHECK(matching_distance(a, a) == 0.0);
  CHECK_THROWS_AS(matching_distance(a, std::vector<Complex>{0.0}), std::invalid_argument);
}
