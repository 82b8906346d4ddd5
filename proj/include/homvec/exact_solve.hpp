#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "homvec/linsys.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// Integer row: sorted (column, coefficient) entries plus right-hand side.
struct IntRow {
  std::vector<std::pair<std::size_t, BigInt>> entries;
  BigInt rhs;

  const BigInt* at(std::size_t col) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return it != entries.end() && it->first == col ? &it->second : nullptr;
  }
};

// Scales a rational row to a primitive integer row.
inline IntRow integer_row(const LinearRow& r) {
  BigInt l = 1;
  for (const auto& [c, a] : r.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.rhs.get_den_mpz_t());
  IntRow out;
  out.entries.reserve(r.coeffs.size());
  for (const auto& [c, a] : r.coeffs) out.entries.emplace_back(c, BigInt(a.get_num() * (l / a.get_den())));
  out.rhs = r.rhs.get_num() * (l / r.rhs.get_den());
  return out;
}

namespace detail {

inline void make_primitive(IntRow& r) {
  BigInt g = 0;
  for (const auto& [c, a] : r.entries) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) return;
  }
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.rhs.get_mpz_t());
  if (g <= 1) return;
  for (auto& [c, a] : r.entries) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(r.rhs.get_mpz_t(), r.rhs.get_mpz_t(), g.get_mpz_t());
}

// r ← pc·r − rc·p, which clears column `col` (pc = p[col], rc = r[col]).
inline void eliminate(IntRow& r, const IntRow& p, std::size_t col) {
  const BigInt pc = *p.at(col);
  const BigInt rc = *r.at(col);
  std::vector<std::pair<std::size_t, BigInt>> out;
  out.reserve(r.entries.size() + p.entries.size());
  auto i = r.entries.cbegin();
  auto j = p.entries.cbegin();
  BigInt tmp;
  while (i != r.entries.cend() || j != p.entries.cend()) {
    if (j == p.entries.cend() || (i != r.entries.cend() && i->first < j->first)) {
      out.emplace_back(i->first, pc * i->second);
      ++i;
    } else if (i == r.entries.cend() || j->first < i->first) {
      out.emplace_back(j->first, -rc * j->second);
      ++j;
    } else {
      tmp = pc * i->second - rc * j->second;
      if (tmp != 0) out.emplace_back(i->first, tmp);
      ++i;
      ++j;
    }
  }
  r.entries = std::move(out);
  r.rhs = pc * r.rhs - rc * p.rhs;
  make_primitive(r);
}

}  // namespace detail

// Incremental fraction-free Gaussian elimination. Rows are added one at a
// time and reduced against the stored pivot rows in the order those were
// inserted; a pivot row has zeros in the pivot columns of all earlier
// pivots, so a single pass clears every pivot column.
class ExactEliminator {
 public:
  explicit ExactEliminator(std::size_t num_vars, std::vector<std::size_t> column_weight = {})
      : col_pivot_(num_vars, kNone), weight_(std::move(column_weight)) {
    if (weight_.size() != num_vars) weight_.assign(num_vars, 0);
  }

  enum class Outcome { independent, dependent, inconsistent };

  Outcome add(IntRow r, std::size_t source) {
    std::set<std::size_t> pending;
    for (const auto& [c, a] : r.entries)
      if (col_pivot_[c] != kNone) pending.insert(col_pivot_[c]);
    while (!pending.empty()) {
      std::size_t pi = *pending.begin();
      pending.erase(pending.begin());
      const std::size_t col = pivot_col_[pi];
      if (!r.at(col)) continue;
      detail::eliminate(r, rows_[pi], col);
      for (const auto& [c, a] : rows_[pi].entries)
        if (col_pivot_[c] != kNone && col_pivot_[c] > pi && r.at(c)) pending.insert(col_pivot_[c]);
    }
    if (r.entries.empty()) return r.rhs == 0 ? Outcome::dependent : Outcome::inconsistent;
    std::size_t best = r.entries.front().first;
    for (const auto& [c, a] : r.entries)
      if (weight_[c] < weight_[best]) best = c;
    col_pivot_[best] = rows_.size();
    pivot_col_.push_back(best);
    source_.push_back(source);
    rows_.push_back(std::move(r));
    return Outcome::independent;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivot_sources() const { return source_; }

  // One solution of the stored pivot rows with every non-pivot variable at
  // zero, by back substitution in reverse insertion order.
  std::vector<Rational> particular_solution() const {
    std::vector<Rational> x(col_pivot_.size(), 0);
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const auto& r = rows_[i];
      const std::size_t col = pivot_col_[i];
      Rational s = Rational(r.rhs);
      for (const auto& [c, a] : r.entries)
        if (c != col && x[c] != 0) s -= Rational(a) * x[c];
      s /= Rational(*r.at(col));
      x[col] = std::move(s);
    }
    return x;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col_pivot_;
  std::vector<std::size_t> weight_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::size_t> source_;
  std::vector<IntRow> rows_;
};

struct EliminationResult {
  bool consistent = true;
  std::size_t rank = 0;
  std::optional<std::size_t> inconsistent_row;  // first row found contradictory
  std::vector<std::size_t> independent_rows;    // a basis of the row space
  std::vector<Rational> solution;               // when consistent
};

// Exact real solvability of a linear system.
inline EliminationResult eliminate_exact(const RationalLinearSystem& sys) {
  std::vector<std::size_t> weight(sys.num_vars(), 0);
  for (const auto& r : sys.rows())
    for (const auto& [c, a] : r.coeffs) ++weight[c];
  ExactEliminator el(sys.num_vars(), weight);
  EliminationResult res;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    auto outcome = el.add(integer_row(sys.rows()[i]), i);
    if (outcome == ExactEliminator::Outcome::inconsistent) {
      res.consistent = false;
      res.inconsistent_row = i;
      break;
    }
  }
  res.rank = el.rank();
  res.independent_rows = el.pivot_sources();
  std::sort(res.independent_rows.begin(), res.independent_rows.end());
  if (res.consistent) res.solution = el.particular_solution();
  return res;
}

}  // namespace homvec
