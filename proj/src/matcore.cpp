// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace brownlab {

namespace {

constexpr std::string_view kUnicodeStar = "\xE2\x8B\x86";  // U+22C6

void flatten_word_traces(const ComplexMatrix& m, const ComplexMatrix& m_adj,
                         const ComplexMatrix& prefix, std::vector<Letter>& word, int max_len,
                         double inv_n, std::map<StarWord, Complex>& out) {
  for (Letter next : {Letter::Id, Letter::Star}) {
    word.push_back(next);
    if (static_cast<int>(word.size()) == max_len) {
      // tr(P X) without forming P X.
      Complex tr = next == Letter::Id ? (prefix.array() * m.transpose().array()).sum()
                                      : (prefix.array() * m.conjugate().array()).sum();
      out.emplace(StarWord(word), tr * inv_n);
    } else {
      ComplexMatrix product = next == Letter::Id ? ComplexMatrix(prefix * m)
                                                 : ComplexMatrix(prefix * m_adj);
      out.emplace(StarWord(word), product.trace() * inv_n);
      flatten_word_traces(m, m_adj, product, word, max_len, inv_n, out);
    }
    word.pop_back();
  }
}

// Kuhn augmenting path on the threshold graph.
bool augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& seen) {
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] < 0 || augment(match_right[v], adj, match_right, seen)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const std::vector<double>& dist, std::size_t n, double threshold) {
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist[i * n + j] <= threshold) adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_right(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (!augment(static_cast<int>(u), adj, match_right, seen)) return false;
  }
  return true;
}

}  // namespace

StarWord::StarWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("StarWord: empty word");
}

StarWord StarWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '1') {
      letters.push_back(Letter::Id);
      ++pos;
    } else if (text[pos] == '*') {
      letters.push_back(Letter::Star);
      ++pos;
    } else if (text.substr(pos, kUnicodeStar.size()) == kUnicodeStar) {
      letters.push_back(Letter::Star);
      pos += kUnicodeStar.size();
    } else {
      throw std::invalid_argument("StarWord: unexpected character in '" + std::string(text) + "'");
    }
  }
  return StarWord(std::move(letters));
}

std::string StarWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l == Letter::Id ? '1' : '*');
  return s;
}

StarWord StarWord::adjoint() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = l == Letter::Id ? Letter::Star : Letter::Id;
  return StarWord(std::move(out));
}

StarWord StarWord::rotated(std::size_t shift) const {
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return StarWord(std::move(out));
}

int StarWord::count(Letter letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

std::vector<StarWord> all_words(int max_len) {
  std::vector<StarWord> words;
  for (int p = 1; p <= max_len; ++p) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
      std::vector<Letter> letters(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i)
        letters[static_cast<std::size_t>(i)] =
            (bits >> (p - 1 - i)) & 1U ? Letter::Star : Letter::Id;
      words.emplace_back(std::move(letters));
    }
  }
  return words;
}

double EmpiricalSpectrum::mean_abs2() const {
  if (points.empty()) return 0.0;
  double s = 0.0;
  for (const Complex& z : points) s += std::norm(z);
  return s / static_cast<double>(points.size());
}

ComplexMatrix SchurForm::reconstruct() const {
  ComplexMatrix upper = strict_upper;
  upper.diagonal() += diagonal;
  return unitary * upper * unitary.adjoint();
}

void require_valid(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square with dimension >= 1");
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

Complex trace_word(const ComplexMatrix& m, const StarWord& w) {
  require_valid(m);
  const auto letters = w.letters();
  const double inv_n = 1.0 / static_cast<double>(m.rows());
  if (letters.size() == 1)
    return letters[0] == Letter::Id ? m.trace() * inv_n : std::conj(m.trace()) * inv_n;

  ComplexMatrix prefix = letters[0] == Letter::Id ? m : ComplexMatrix(m.adjoint());
  for (std::size_t i = 1; i + 1 < letters.size(); ++i)
    prefix = letters[i] == Letter::Id ? ComplexMatrix(prefix * m) : ComplexMatrix(prefix * m.adjoint());
  Complex tr = letters.back() == Letter::Id ? (prefix.array() * m.transpose().array()).sum()
                                            : (prefix.array() * m.conjugate().array()).sum();
  return tr * inv_n;
}

std::map<StarWord, Complex> trace_words(const ComplexMatrix& m, int max_len) {
  require_valid(m);
  if (max_len < 1) throw std::invalid_argument("trace_words: max_len must be >= 1");
  const double inv_n = 1.0 / static_cast<double>(m.rows());
  std::map<StarWord, Complex> out;
  const Complex tr = m.trace() * inv_n;
  out.emplace(StarWord({Letter::Id}), tr);
  out.emplace(StarWord({Letter::Star}), std::conj(tr));
  if (max_len == 1) return out;

  const ComplexMatrix m_adj = m.adjoint();
  std::vector<Letter> word{Letter::Id};
  flatten_word_traces(m, m_adj, m, word, max_len, inv_n, out);
  word = {Letter::Star};
  flatten_word_traces(m, m_adj, m_adj, word, max_len, inv_n, out);
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_valid(m);
  const lapack_int n = static_cast<lapack_int>(m.rows());
  ComplexMatrix a = m;
  std::vector<double> s(static_cast<std::size_t>(n));
  Complex dummy{};
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', n, n, a.data(), n, s.data(),
                                         &dummy, 1, &dummy, 1);
  if (info != 0)
    throw EigensolverError("singular value iteration failed (zgesdd info=" + std::to_string(info) + ")");
  return s;
}

double operator_norm(const ComplexMatrix& m) { return singular_values(m).front(); }

namespace {

// Schur factorization through LAPACK zgees; `a` is overwritten with T.
void complex_schur(ComplexMatrix& a, ComplexVector& w, ComplexMatrix* vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  lapack_int sdim = 0;
  lapack_int info = 0;
  if (vectors != nullptr) {
    vectors->resize(n, n);
    info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, n, a.data(), n, &sdim, w.data(),
                         vectors->data(), n);
  } else {
    Complex dummy{};
    info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'N', 'N', nullptr, n, a.data(), n, &sdim, w.data(),
                         &dummy, 1);
  }
  if (info > 0)
    throw EigensolverError("QR iteration did not converge: " + std::to_string(info) +
                           " eigenvalues unresolved (n=" + std::to_string(n) + ")");
  if (info < 0) throw std::logic_error("zgees argument error " + std::to_string(info));
}

}  // namespace

EmpiricalSpectrum eigenvalues(const ComplexMatrix& m) {
  require_valid(m);
  ComplexMatrix a = m;
  ComplexVector w;
  complex_schur(a, w, nullptr);
  return EmpiricalSpectrum{std::vector<Complex>(w.data(), w.data() + w.size())};
}

SchurForm schur_decompose(const ComplexMatrix& m) {
  require_valid(m);
  SchurForm out;
  ComplexMatrix t = m;
  complex_schur(t, out.diagonal, &out.unitary);
  out.strict_upper = t.triangularView<Eigen::StrictlyUpper>();
  return out;
}

double log_fk_determinant(const ComplexMatrix& m) {
  const std::vector<double> s = singular_values(m);
  const double cutoff = static_cast<double>(s.size()) * std::numeric_limits<double>::epsilon() * s.front();
  double acc = 0.0;
  for (double sigma : s) {
    if (sigma <= cutoff) return -std::numeric_limits<double>::infinity();
    acc += std::log(sigma);
  }
  return acc / static_cast<double>(s.size());
}

double fk_determinant(const ComplexMatrix& m) { return std::exp(log_fk_determinant(m)); }

double normalized_frobenius2(const ComplexMatrix& m) {
  return m.squaredNorm() / static_cast<double>(m.rows());
}

double offdiag_second_moment(const ComplexMatrix& m, const EmpiricalSpectrum& spectrum) {
  require_valid(m);
  if (spectrum.size() != static_cast<std::size_t>(m.rows()))
    throw std::invalid_argument("offdiag_second_moment: spectrum size does not match matrix");
  const double od = normalized_frobenius2(m) - spectrum.mean_abs2();
  if (od < 0.0 && od >= -1e-10) return 0.0;
  return od;
}

double offdiag_second_moment(const ComplexMatrix& m) {
  return offdiag_second_moment(m, eigenvalues(m));
}

double matching_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("matching_distance: size mismatch");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(a[i] - b[j]);
  std::vector<double> candidates = dist;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (has_perfect_matching(dist, n, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace brownlab
