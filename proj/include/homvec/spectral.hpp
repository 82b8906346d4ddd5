#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/hom.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// Coefficients of det(xI − A), highest degree first (so coeffs[0] = 1).
struct CharPoly {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const CharPoly&) const = default;

  CharPoly operator*(const CharPoly& o) const {
    CharPoly r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    return r;
  }
};

// Characteristic polynomial over the rationals: reduce A to upper Hessenberg
// form by elimination similarities, then expand det(xI − H) with the
// standard three-term-style recurrence on leading principal minors.
inline CharPoly char_poly(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) h[u][v] = 1;

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      Rational u = h[k][j] / h[j + 1][j];
      for (std::size_t c = 0; c < n; ++c) h[k][c] -= u * h[j + 1][c];
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] += u * h[r][k];
    }
  }

  // p[m] = det(xI − H[0..m)) as ascending coefficient vectors.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t c = m - 1;
    std::vector<Rational> cur(m + 1, 0);
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      cur[d + 1] += p[m - 1][d];
      cur[d] -= h[c][c] * p[m - 1][d];
    }
    Rational prod = 1;
    for (std::size_t i = c; i-- > 0;) {
      prod *= h[i + 1][i];
      if (prod == 0) break;
      Rational f = h[i][c] * prod;
      if (f == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] -= f * p[i][d];
    }
    p[m] = std::move(cur);
  }
  CharPoly cp;
  for (std::size_t d = p[n].size(); d-- > 0;) {
    Rational x = p[n][d];
    x.canonicalize();
    if (x.get_den() != 1) throw PreconditionError("char_poly: non-integral coefficient");
    cp.coeffs.push_back(x.get_num());
  }
  return cp;
}

inline bool cospectral(const Graph& g, const Graph& h) { return char_poly(g) == char_poly(h); }

// Minimal linear recurrence s_{l+d} = Σ_{i<d} c_i s_{l+i} of the walk
// sequence s_l = 1ᵀAˡ1, together with its first d terms.
struct WalkFingerprint {
  std::vector<Rational> recurrence;
  std::vector<BigInt> initial;

  bool operator==(const WalkFingerprint&) const = default;
  std::size_t order() const { return initial.size(); }

  // Extends the sequence to terms s_0..s_len.
  std::vector<Rational> terms(std::size_t len) const {
    std::vector<Rational> s;
    for (std::size_t l = 0; l <= len; ++l) {
      if (l < initial.size()) {
        s.emplace_back(initial[l]);
        continue;
      }
      Rational x = 0;
      const std::size_t d = initial.size();
      for (std::size_t i = 0; i < d; ++i) x += recurrence[i] * s[l - d + i];
      s.push_back(x);
    }
    return s;
  }
};

namespace detail {

inline std::size_t rank_rational(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Solves the nonsingular system m x = rhs.
inline std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw PreconditionError("singular system");
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace detail

// The sequence has at most n distinct exponential bases, so the Hankel
// matrix on s_0..s_{2n} has the rank d of the minimal recurrence and its
// leading d×d block is invertible.
inline WalkFingerprint walk_fingerprint(const Graph& g) {
  const std::size_t n = g.n();
  auto s = walk_counts(g, 2 * n);
  std::vector<std::vector<Rational>> hank(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) hank[i][j] = s[i + j];
  const std::size_t d = detail::rank_rational(hank);
  WalkFingerprint fp;
  fp.initial.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d));
  if (d == 0) return fp;
  std::vector<std::vector<Rational>> lead(d, std::vector<Rational>(d));
  std::vector<Rational> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) lead[i][j] = s[i + j];
    rhs[i] = s[i + d];
  }
  fp.recurrence = detail::solve_rational(std::move(lead), std::move(rhs));
  return fp;
}

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // column i belongs to values[i]
  double max_residual = 0;     // max_i ‖A q_i − λ_i q_i‖_∞
};

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.n()), static_cast<Eigen::Index>(g.n()));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

inline EigenDecomposition eigen_float(const Graph& g) {
  EigenDecomposition e;
  if (g.n() == 0) return e;
  Eigen::MatrixXd a = dense_adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw PreconditionError("eigen_float: symmetric eigensolver did not converge");
  e.vectors = solver.eigenvectors();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    e.values.push_back(solver.eigenvalues()(i));
    Eigen::VectorXd r = a * e.vectors.col(i) - e.values.back() * e.vectors.col(i);
    e.max_residual = std::max(e.max_residual, r.cwiseAbs().maxCoeff());
  }
  return e;
}

struct SpectralSolution {
  Eigen::MatrixXd x;
  double residual_commute = 0;  // max |(AX − XB)_ij|
  double residual_rows = 0;     // ‖X1 − 1‖_∞
  double residual_cols = 0;     // ‖Xᵀ1 − 1‖_∞
};

namespace detail {

struct UsefulComponent {
  double lambda;
  Eigen::VectorXd u;  // projection of 1 onto the eigenspace
};

inline std::vector<UsefulComponent> useful_components(const Graph& g) {
  auto e = eigen_float(g);
  const Eigen::Index n = static_cast<Eigen::Index>(g.n());
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  std::vector<UsefulComponent> out;
  std::size_t i = 0;
  while (i < e.values.size()) {
    std::size_t j = i;
    while (j < e.values.size() && std::fabs(e.values[j] - e.values[i]) < 1e-8) ++j;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    for (std::size_t c = i; c < j; ++c) {
      auto q = e.vectors.col(static_cast<Eigen::Index>(c));
      u += q * q.dot(ones);
    }
    if (u.norm() > 1e-9) out.push_back({e.values[i], u});
    i = j;
  }
  return out;
}

}  // namespace detail

// X = Σ_i u_i v_iᵀ / ‖u_i‖² over the useful eigenvalues λ_i, where u_i and
// v_i project the all-ones vector onto the λ_i-eigenspaces of A and B.
// Requires equal walk fingerprints.
inline SpectralSolution spectral_fiso_solution(const Graph& g, const Graph& h) {
  if (!(walk_fingerprint(g) == walk_fingerprint(h)))
    throw PreconditionError("spectral_fiso_solution: walk fingerprints differ");
  const Eigen::Index n = static_cast<Eigen::Index>(g.n());
  SpectralSolution s;
  s.x = Eigen::MatrixXd::Zero(n, n);
  if (n == 0) return s;
  auto cu = detail::useful_components(g);
  auto cv = detail::useful_components(h);
  for (const auto& a : cu)
    for (const auto& b : cv)
      if (std::fabs(a.lambda - b.lambda) < 1e-6) s.x += a.u * b.u.transpose() / a.u.squaredNorm();
  Eigen::MatrixXd ga = dense_adjacency(g), hb = dense_adjacency(h);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  s.residual_commute = (ga * s.x - s.x * hb).cwiseAbs().maxCoeff();
  s.residual_rows = (s.x * ones - ones).cwiseAbs().maxCoeff();
  s.residual_cols = (s.x.transpose() * ones - ones).cwiseAbs().maxCoeff();
  return s;
}

}  // namespace homvec
