#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "homvec/exact_solve.hpp"
#include "homvec/linsys.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

enum class Certificate {
  solution,        // witness satisfies every row
  rank_mismatch,   // rank(A) < rank([A|b])
  farkas,          // y with yᵀA ≤ 0 and yᵀb > 0 over the independent rows
  phase1_positive  // exact phase-1 optimum > 0
};

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::solution: return "solution";
    case Certificate::rank_mismatch: return "rank mismatch";
    case Certificate::farkas: return "farkas";
    case Certificate::phase1_positive: return "LP phase-1 optimum > 0";
  }
  return "?";
}

struct Feasibility {
  bool feasible = false;
  Certificate certificate = Certificate::rank_mismatch;
  std::vector<Rational> witness;  // when feasible
  // Farkas multipliers indexed by system row (zero off the independent rows).
  std::vector<Rational> farkas;
  std::size_t rank = 0;
  // Which path decided a nonnegative query: "elimination", "float+certify"
  // or "exact simplex".
  std::string method;
};

inline Feasibility solve_real(const RationalLinearSystem& sys) {
  auto el = eliminate_exact(sys);
  Feasibility f;
  f.rank = el.rank;
  f.method = "elimination";
  if (!el.consistent) return f;
  f.feasible = true;
  f.certificate = Certificate::solution;
  f.witness = std::move(el.solution);
  return f;
}

struct NonnegOptions {
  // Skip the floating-point warm start and run the exact simplex only.
  bool force_exact = false;
};

namespace detail {

// Closest fraction with denominator ≤ max_den by continued fractions.
inline Rational rationalize(double x, long max_den = 1000000) {
  if (!std::isfinite(x)) return 0;
  const bool neg = x < 0;
  double a = std::fabs(x);
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(a);
    BigInt ai(fl);
    BigInt p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = a - fl;
    if (frac < 1e-12) break;
    a = 1.0 / frac;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// Dense floating-point phase-1 tableau for A x = b, x ≥ 0, b ≥ 0, with one
// artificial per row. Dantzig pricing, switching to Bland's rule after a run
// of degenerate pivots. The reduced-cost row is updated with each pivot, and
// a pivot only touches the nonzero columns of the pivot row.
struct FloatPhase1 {
  std::size_t m = 0, n = 0;
  std::vector<double> t;  // m rows × (n + m + 1) columns, rhs last
  std::vector<std::size_t> basis;
  bool converged = false;
  std::size_t iterations = 0;

  double& at(std::size_t i, std::size_t j) { return t[i * (n + m + 1) + j]; }

  void run(std::size_t max_iter) {
    const std::size_t w = n + m + 1;
    constexpr double eps = 1e-9;
    // cost[j] = c_j − Σ_{i: basis artificial} t_ij; the last entry tracks
    // minus the objective.
    cost_.assign(w, 0.0);
    for (std::size_t j = n; j < n + m; ++j) cost_[j] = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n)
        for (std::size_t j = 0; j < w; ++j) cost_[j] -= t[i * w + j];
    std::size_t degenerate = 0;
    for (iterations = 0; iterations < max_iter; ++iterations) {
      const bool bland = degenerate > 50;
      std::optional<std::size_t> enter;
      double best = -eps;
      for (std::size_t j = 0; j < n + m; ++j)
        if (cost_[j] < -eps) {
          if (bland) {
            enter = j;
            break;
          }
          if (cost_[j] < best) {
            best = cost_[j];
            enter = j;
          }
        }
      if (!enter) {
        converged = true;
        return;
      }
      std::optional<std::size_t> leave;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        double a = t[i * w + *enter];
        if (a > eps) {
          double r = t[i * w + n + m] / a;
          if (r < ratio - 1e-12 || (r <= ratio + 1e-12 && leave && basis[i] < basis[*leave])) {
            ratio = r;
            leave = i;
          }
        }
      }
      if (!leave) return;  // phase 1 is bounded; only numerical trouble lands here
      degenerate = ratio < 1e-12 ? degenerate + 1 : 0;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t w = n + m + 1;
    double* pr = &t[r * w];
    const double pv = pr[c];
    nz_.clear();
    for (std::size_t j = 0; j < w; ++j)
      if (pr[j] != 0.0) {
        pr[j] /= pv;
        if (std::fabs(pr[j]) < 1e-14) pr[j] = 0.0;
        else nz_.push_back(j);
      }
    pr[c] = 1.0;
    auto update = [&](double* row) {
      const double f = row[c];
      if (f == 0.0) return;
      for (std::size_t j : nz_) {
        double v = row[j] - f * pr[j];
        row[j] = std::fabs(v) < 1e-14 ? 0.0 : v;
      }
      row[c] = 0.0;
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != r) update(&t[i * w]);
    update(cost_.data());
    basis[r] = c;
  }

 private:
  std::vector<double> cost_;
  std::vector<std::size_t> nz_;
};

// Exact dense phase-1 simplex with Bland's rule. Rows must have b ≥ 0.
// Returns the basic solution if the optimum is zero.
inline std::optional<std::vector<Rational>> exact_phase1(const std::vector<std::vector<Rational>>& a,
                                                         const std::vector<Rational>& b, std::size_t n) {
  const std::size_t m = a.size();
  const std::size_t w = n + m + 1;
  std::vector<Rational> t(m * w, 0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * w + j] = a[i][j];
    t[i * w + n + i] = 1;
    t[i * w + n + m] = b[i];
    basis[i] = n + i;
  }
  std::vector<Rational> cost(n + m);
  while (true) {
    for (std::size_t j = 0; j < n + m; ++j) cost[j] = j >= n ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n)
        for (std::size_t j = 0; j < n + m; ++j)
          if (t[i * w + j] != 0) cost[j] -= t[i * w + j];
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational ratio;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& ai = t[i * w + *enter];
      if (ai > 0) {
        Rational r = t[i * w + n + m] / ai;
        if (!leave || r < ratio || (r == ratio && basis[i] < basis[*leave])) {
          ratio = r;
          leave = i;
        }
      }
    }
    const std::size_t r = *leave;
    const std::size_t c = *enter;
    Rational pv = t[r * w + c];
    for (std::size_t j = 0; j < w; ++j)
      if (t[r * w + j] != 0) t[r * w + j] /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      Rational f = t[i * w + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < w; ++j)
        if (t[r * w + j] != 0) t[i * w + j] -= f * t[r * w + j];
    }
    basis[r] = c;
  }
  Rational obj = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) obj += t[i * w + n + m];
  if (obj != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i * w + n + m];
  return x;
}

}  // namespace detail

// Nonnegative feasibility of A x = b, decided exactly.
//
// Exact elimination settles real infeasibility and yields a basis of the row
// space. A floating-point phase-1 simplex on those rows then proposes a
// basis, which is certified exactly: either the basic solution is
// recomputed in rationals and checked to be nonnegative and to satisfy
// every row, or the rounded phase-1 duals are checked to form a Farkas
// certificate. When neither certifies, an exact simplex with Bland's rule
// decides.
inline Feasibility solve_nonneg(const RationalLinearSystem& sys, const NonnegOptions& opt = {}) {
  auto el = eliminate_exact(sys);
  Feasibility f;
  f.rank = el.rank;
  if (!el.consistent) {
    f.method = "elimination";
    return f;
  }
  const std::size_t n = sys.num_vars();
  const auto& rows_idx = el.independent_rows;
  const std::size_t m = rows_idx.size();

  std::vector<IntRow> irows;
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    irows.push_back(integer_row(sys.rows()[rows_idx[i]]));
    if (irows.back().rhs < 0) sign[i] = -1;
  }
  auto accept_primal = [&](std::vector<Rational> x) {
    for (const auto& v : x)
      if (v < 0) return false;
    if (!sys.satisfied_by(x)) return false;
    f.feasible = true;
    f.certificate = Certificate::solution;
    f.witness = std::move(x);
    return true;
  };
  if (m == 0) {
    accept_primal(std::vector<Rational>(n, 0));
    f.method = "elimination";
    return f;
  }

  if (!opt.force_exact) {
    detail::FloatPhase1 lp;
    lp.m = m;
    lp.n = n;
    const std::size_t w = n + m + 1;
    lp.t.assign(m * w, 0.0);
    lp.basis.resize(m);
    // Row i is scaled by sign[i]/mx[i], mx[i] its largest magnitude.
    std::vector<BigInt> mx(m, 0);
    std::vector<double> scale(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [c, a] : irows[i].entries) mx[i] = std::max<BigInt>(mx[i], abs(a));
      mx[i] = std::max<BigInt>(mx[i], abs(irows[i].rhs));
      scale[i] = sign[i] / mx[i].get_d();
      for (const auto& [c, a] : irows[i].entries) lp.at(i, c) = a.get_d() * scale[i];
      lp.at(i, n + i) = 1.0;
      // A small deterministic perturbation of b breaks the heavy degeneracy
      // of these systems; certification below uses the exact b.
      lp.at(i, n + m) = irows[i].rhs.get_d() * scale[i] + 1e-7 * (1.0 + static_cast<double>((i * 7919) % 1000) / 1000.0);
      lp.basis[i] = n + i;
    }
    lp.run(50 * (n + m) + 1000);
    if (lp.converged) {
      // Primal: re-solve the basic structural columns exactly.
      std::vector<std::size_t> cols;
      for (std::size_t b : lp.basis)
        if (b < n) cols.push_back(b);
      std::vector<std::size_t> local(n, static_cast<std::size_t>(-1));
      for (std::size_t j = 0; j < cols.size(); ++j) local[cols[j]] = j;
      ExactEliminator sub(cols.size());
      bool consistent = true;
      for (std::size_t i = 0; i < m && consistent; ++i) {
        IntRow r;
        for (const auto& [c, a] : irows[i].entries)
          if (local[c] != static_cast<std::size_t>(-1)) r.entries.emplace_back(local[c], a);
        std::sort(r.entries.begin(), r.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        r.rhs = irows[i].rhs;
        consistent = sub.add(std::move(r), i) != ExactEliminator::Outcome::inconsistent;
      }
      if (consistent) {
        auto xs = sub.particular_solution();
        std::vector<Rational> x(n, 0);
        for (std::size_t j = 0; j < cols.size(); ++j) x[cols[j]] = xs[j];
        if (accept_primal(std::move(x))) {
          f.method = "float+certify";
          return f;
        }
      }
      // Dual: y = c_Bᵀ B⁻¹ read off the artificial block, rounded.
      std::vector<Rational> u(m);
      for (std::size_t i = 0; i < m; ++i) {
        double yi = 0;
        for (std::size_t r = 0; r < m; ++r)
          if (lp.basis[r] >= n) yi += lp.at(r, n + i);
        // Multiplier of the unscaled integer row.
        u[i] = detail::rationalize(yi) * Rational(sign[i]) / Rational(mx[i]);
      }
      std::vector<Rational> ya(n, 0);
      Rational yb = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (u[i] == 0) continue;
        for (const auto& [c, a] : irows[i].entries) ya[c] += u[i] * Rational(a);
        yb += u[i] * Rational(irows[i].rhs);
      }
      bool farkas = yb > 0;
      for (std::size_t j = 0; j < n && farkas; ++j) farkas = ya[j] <= 0;
      if (farkas) {
        // Express the multipliers against the rational system rows.
        f.farkas.assign(sys.num_rows(), 0);
        for (std::size_t i = 0; i < m; ++i) {
          const auto& row = sys.rows()[rows_idx[i]];
          BigInt l = 1;
          for (const auto& [c, a] : row.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.rhs.get_den_mpz_t());
          f.farkas[rows_idx[i]] = u[i] * Rational(l);
        }
        f.certificate = Certificate::farkas;
        f.method = "float+certify";
        return f;
      }
    }
  }

  // Exact fallback.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, 0));
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [c, v] : irows[i].entries) a[i][c] = Rational(v * sign[i]);
    b[i] = Rational(irows[i].rhs * sign[i]);
  }
  f.method = "exact simplex";
  auto x = detail::exact_phase1(a, b, n);
  if (x && accept_primal(std::move(*x))) return f;
  f.feasible = false;
  f.certificate = Certificate::phase1_positive;
  return f;
}

// True iff y certifies infeasibility of A x = b, x ≥ 0: yᵀA ≤ 0 and yᵀb > 0.
inline bool check_farkas(const RationalLinearSystem& sys, const std::vector<Rational>& y) {
  if (y.size() != sys.num_rows()) return false;
  std::vector<Rational> ya(sys.num_vars(), 0);
  Rational yb = 0;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    if (y[i] == 0) continue;
    for (const auto& [c, a] : sys.rows()[i].coeffs) ya[c] += y[i] * a;
    yb += y[i] * sys.rows()[i].rhs;
  }
  if (yb <= 0) return false;
  for (const auto& v : ya)
    if (v > 0) return false;
  return true;
}

}  // namespace homvec
