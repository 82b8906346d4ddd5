#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// A set of pairs (v, w) ∈ V(G) × V(H), kept sorted and duplicate-free.
struct PartialMap {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  PartialMap() = default;
  explicit PartialMap(std::vector<std::pair<Vertex, Vertex>> p) : pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  std::size_t size() const { return pairs.size(); }
  bool contains(std::pair<Vertex, Vertex> p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }
  auto operator<=>(const PartialMap&) const = default;

  PartialMap with(Vertex v, Vertex w) const {
    PartialMap r = *this;
    auto p = std::make_pair(v, w);
    auto it = std::lower_bound(r.pairs.begin(), r.pairs.end(), p);
    if (it == r.pairs.end() || *it != p) r.pairs.insert(it, p);
    return r;
  }

  // v_i = v_j ⟺ w_i = w_j for all pairs.
  bool is_partial_bijection() const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        if ((pairs[i].first == pairs[j].first) != (pairs[i].second == pairs[j].second)) return false;
    return true;
  }

  // Partial bijection that additionally maps edges to edges and non-edges to
  // non-edges.
  bool is_partial_isomorphism(const Graph& g, const Graph& h) const {
    if (!is_partial_bijection()) return false;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        if (g.has_edge(pairs[i].first, pairs[j].first) != h.has_edge(pairs[i].second, pairs[j].second))
          return false;
    return true;
  }

  std::string name() const {
    std::string s = "X{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) s += ",";
      s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + "}";
  }
};

struct LinearRow {
  std::vector<std::pair<std::size_t, Rational>> coeffs;  // sorted by column, no zeros
  Rational rhs;
  std::string label;
};

// Sparse system of equations over exact rationals with named variables.
class RationalLinearSystem {
 public:
  std::size_t num_vars() const { return names_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<LinearRow>& rows() const { return rows_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  std::size_t add_var(std::string name) {
    auto [it, inserted] = index_.try_emplace(name, names_.size());
    if (!inserted) throw PreconditionError("duplicate variable name '" + name + "'");
    names_.push_back(std::move(name));
    return it->second;
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Adds Σ coeff·x = rhs; repeated columns are summed and zeros dropped.
  // With skip_trivial, a row reducing to 0 = 0 is not stored. Returns whether
  // a row was added.
  bool add_row(const std::vector<std::pair<std::size_t, Rational>>& terms, Rational rhs, std::string label = {},
               bool skip_trivial = false) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, a] : terms) {
      if (c >= names_.size()) throw PreconditionError("row references unknown variable");
      acc[c] += a;
    }
    LinearRow r;
    for (auto& [c, a] : acc)
      if (a != 0) r.coeffs.emplace_back(c, std::move(a));
    if (skip_trivial && r.coeffs.empty() && rhs == 0) return false;
    r.rhs = std::move(rhs);
    r.label = std::move(label);
    rows_.push_back(std::move(r));
    return true;
  }

  // True iff x satisfies every row exactly.
  bool satisfied_by(const std::vector<Rational>& x) const { return !first_violated_row(x).has_value(); }

  std::optional<std::size_t> first_violated_row(const std::vector<Rational>& x) const {
    if (x.size() != names_.size()) throw PreconditionError("assignment size differs from variable count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational s = 0;
      for (const auto& [c, a] : rows_[i].coeffs) s += a * x[c];
      if (s != rows_[i].rhs) return i;
    }
    return std::nullopt;
  }

  // Free-form LP text: objective 0, one equality per row, and either
  // nonnegativity bounds or free variables. Names are mapped to x0..xN with a
  // comment line per variable.
  std::string to_lp(bool nonnegative) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < names_.size(); ++i) os << "\\ x" << i << " = " << names_[i] << "\n";
    os << "Minimize\n obj: 0 x0\nSubject To\n";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      os << " r" << i << ":";
      if (rows_[i].coeffs.empty()) os << " 0 x0";
      for (const auto& [c, a] : rows_[i].coeffs) {
        os << (a < 0 ? " - " : " + ");
        Rational m = abs(a);
        if (m != 1) os << to_string(m) << " ";
        os << "x" << c;
      }
      os << " = " << to_string(rows_[i].rhs) << "\n";
    }
    os << "Bounds\n";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (nonnegative) os << " x" << i << " >= 0\n";
      else os << " x" << i << " free\n";
    }
    os << "End\n";
    return os.str();
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<LinearRow> rows_;
};

struct SystemBudget {
  // Largest admissible variable count before elimination.
  double max_vars = 2e5;
};

// Fiso(G,H): variables X(v,w); AX = XB entrywise, then row sums and column
// sums of X equal to one. Variable (v,w) has index v·n_H + w.
inline RationalLinearSystem build_fiso(const Graph& g, const Graph& h, const SystemBudget& budget = {}) {
  const std::size_t ng = g.n(), nh = h.n();
  double vars = static_cast<double>(ng) * static_cast<double>(nh);
  if (vars > budget.max_vars) throw CapacityError("Fiso variable count", vars, budget.max_vars);
  RationalLinearSystem sys;
  for (Vertex v = 0; v < ng; ++v)
    for (Vertex w = 0; w < nh; ++w) sys.add_var("X(" + std::to_string(v) + "," + std::to_string(w) + ")");
  auto var = [&](Vertex v, Vertex w) { return static_cast<std::size_t>(v) * nh + w; };
  for (Vertex v = 0; v < ng; ++v)
    for (Vertex w = 0; w < nh; ++w) {
      std::vector<std::pair<std::size_t, Rational>> t;
      for (Vertex vp : g.neighbors(v)) t.emplace_back(var(vp, w), 1);
      for (Vertex wp : h.neighbors(w)) t.emplace_back(var(v, wp), -1);
      sys.add_row(t, 0, "F1[" + std::to_string(v) + "," + std::to_string(w) + "]");
    }
  for (Vertex v = 0; v < ng; ++v) {
    std::vector<std::pair<std::size_t, Rational>> t;
    for (Vertex w = 0; w < nh; ++w) t.emplace_back(var(v, w), 1);
    sys.add_row(t, 1, "F2[" + std::to_string(v) + "]");
  }
  for (Vertex w = 0; w < nh; ++w) {
    std::vector<std::pair<std::size_t, Rational>> t;
    for (Vertex v = 0; v < ng; ++v) t.emplace_back(var(v, w), 1);
    sys.add_row(t, 1, "F3[" + std::to_string(w) + "]");
  }
  return sys;
}

// System over variables indexed by partial maps. `var` holds the map of each
// variable; `lookup` finds a map's variable if it has one.
struct PartialMapSystem {
  RationalLinearSystem system;
  std::vector<PartialMap> var;
  std::map<PartialMap, std::size_t> index;
  std::size_t k = 0;

  std::optional<std::size_t> lookup(const PartialMap& p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Value of X_p under assignment x; maps without a variable are zero.
  Rational value(const std::vector<Rational>& x, const PartialMap& p) const {
    auto i = lookup(p);
    return i ? x[*i] : Rational(0);
  }
};

namespace detail {

inline double binomial_sum(double n, std::size_t k) {
  double total = 0, term = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    total += term;
    term = term * (n - static_cast<double>(i)) / static_cast<double>(i + 1);
    if (term <= 0) break;
  }
  return total;
}

inline void check_partial_budget(const Graph& g, const Graph& h, std::size_t k, const SystemBudget& budget,
                                 const char* what) {
  if (k == 0) throw PreconditionError(std::string(what) + ": level k must be at least 1");
  double vars = binomial_sum(static_cast<double>(g.n()) * static_cast<double>(h.n()), k);
  if (vars > budget.max_vars) throw CapacityError(std::string(what) + " variable count", vars, budget.max_vars);
}

// All subsets of V×W of size ≤ k accepted by `keep`, grown pair by pair in
// increasing pair order. `keep` must be closed under subsets.
template <class Keep>
std::vector<PartialMap> enumerate_maps(std::size_t ng, std::size_t nh, std::size_t k, Keep keep) {
  std::vector<PartialMap> out{PartialMap{}};
  std::vector<PartialMap> frontier{PartialMap{}};
  for (std::size_t s = 1; s <= k; ++s) {
    std::vector<PartialMap> next;
    for (const auto& p : frontier) {
      std::size_t start = 0;
      if (!p.pairs.empty()) start = static_cast<std::size_t>(p.pairs.back().first) * nh + p.pairs.back().second + 1;
      for (std::size_t idx = start; idx < ng * nh; ++idx) {
        PartialMap q = p;
        q.pairs.emplace_back(static_cast<Vertex>(idx / nh), static_cast<Vertex>(idx % nh));
        if (keep(q)) next.push_back(std::move(q));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

inline PartialMapSystem index_maps(std::vector<PartialMap> maps, std::size_t k) {
  PartialMapSystem ps;
  ps.k = k;
  std::sort(maps.begin(), maps.end(),
            [](const PartialMap& a, const PartialMap& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  for (auto& m : maps) {
    std::size_t i = ps.system.add_var(m.name());
    ps.index.emplace(m, i);
    ps.var.push_back(std::move(m));
  }
  return ps;
}

// Marginal rows Σ_v X_{π∪{(v,w)}} = X_π (per w) and Σ_w X_{π∪{(v,w)}} = X_π
// (per v) for every variable π of size < k. Rows that reduce to 0 = 0 are
// dropped.
inline void add_marginal_rows(PartialMapSystem& ps, std::size_t ng, std::size_t nh, const char* tag1,
                              const char* tag2) {
  const std::size_t nvars = ps.var.size();
  for (std::size_t i = 0; i < nvars; ++i) {
    const PartialMap pi = ps.var[i];
    if (pi.size() + 1 > ps.k) continue;
    for (int side = 0; side < 2; ++side) {
      const std::size_t outer = side == 0 ? nh : ng;
      const std::size_t inner = side == 0 ? ng : nh;
      for (Vertex o = 0; o < outer; ++o) {
        std::vector<std::pair<std::size_t, Rational>> t{{i, -1}};
        for (Vertex x = 0; x < inner; ++x) {
          Vertex v = side == 0 ? x : o, w = side == 0 ? o : x;
          if (auto j = ps.lookup(pi.with(v, w))) t.emplace_back(*j, 1);
        }
        ps.system.add_row(t, 0, std::string(side == 0 ? tag1 : tag2) + "[" + pi.name() + "," + std::to_string(o) + "]",
                          true);
      }
    }
  }
}

}  // namespace detail

// Liso^k(G,H). Only partial isomorphisms get variables: every other X_π is
// forced to zero, so it is substituted away instead of emitted as a row.
inline PartialMapSystem build_liso(const Graph& g, const Graph& h, std::size_t k, const SystemBudget& budget = {}) {
  detail::check_partial_budget(g, h, k, budget, "Liso");
  auto maps = detail::enumerate_maps(g.n(), h.n(), k, [&](const PartialMap& p) {
    // Only the newest pair needs checking against the others.
    const auto& q = p.pairs;
    const auto& last = q.back();
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      if ((q[i].first == last.first) != (q[i].second == last.second)) return false;
      if (g.has_edge(q[i].first, last.first) != h.has_edge(q[i].second, last.second)) return false;
    }
    return true;
  });
  auto ps = detail::index_maps(std::move(maps), k);
  detail::add_marginal_rows(ps, g.n(), h.n(), "L1", "L2");
  ps.system.add_row({{*ps.lookup(PartialMap{}), 1}}, 1, "L4");
  return ps;
}

// Fiso^{k+1/2} at variable level k: X_π for every π ⊆ V×W with |π| ≤ k, the
// marginal rows and the adjacency rows
//   Σ_{v'} A_{vv'} X_{π∪{(v',w)}} = Σ_{w'} X_{π∪{(v,w')}} B_{w'w}
// for |π| < k, and X_∅ = 1. At k = 1 this is Fiso(G,H) plus X_∅.
inline PartialMapSystem build_fiso_khalf(const Graph& g, const Graph& h, std::size_t k,
                                         const SystemBudget& budget = {}) {
  detail::check_partial_budget(g, h, k, budget, "Fiso^{k+1/2}");
  auto maps = detail::enumerate_maps(g.n(), h.n(), k, [](const PartialMap&) { return true; });
  auto ps = detail::index_maps(std::move(maps), k);
  detail::add_marginal_rows(ps, g.n(), h.n(), "F~1", "F~2");
  const std::size_t nvars = ps.var.size();
  for (std::size_t i = 0; i < nvars; ++i) {
    const PartialMap pi = ps.var[i];
    if (pi.size() + 1 > k) continue;
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w = 0; w < h.n(); ++w) {
        std::vector<std::pair<std::size_t, Rational>> t;
        for (Vertex vp : g.neighbors(v)) t.emplace_back(*ps.lookup(pi.with(vp, w)), 1);
        for (Vertex wp : h.neighbors(w)) t.emplace_back(*ps.lookup(pi.with(v, wp)), -1);
        ps.system.add_row(t, 0, "F~3[" + pi.name() + "," + std::to_string(v) + "," + std::to_string(w) + "]");
      }
  }
  ps.system.add_row({{*ps.lookup(PartialMap{}), 1}}, 1, "F~4");
  return ps;
}

// Transfer maps between the two partial-map systems.
//
// A solution of Liso^{k+1} restricted to maps of size ≤ k, with zeros for
// non-isomorphisms, as an assignment for build_fiso_khalf(g, h, k).
inline std::vector<Rational> restrict_liso_to_fkhalf(const PartialMapSystem& liso, const std::vector<Rational>& x,
                                                     const PartialMapSystem& fk) {
  std::vector<Rational> out(fk.var.size());
  for (std::size_t i = 0; i < fk.var.size(); ++i) out[i] = liso.value(x, fk.var[i]);
  return out;
}

// A Fiso^{k+1/2} assignment read as a Liso^k assignment. Also reports
// whether every dropped variable (a non-isomorphism) was exactly zero.
inline std::pair<std::vector<Rational>, bool> fkhalf_to_liso(const PartialMapSystem& fk, const std::vector<Rational>& x,
                                                             const PartialMapSystem& liso) {
  std::vector<Rational> out(liso.var.size());
  bool dropped_zero = true;
  for (std::size_t i = 0; i < fk.var.size(); ++i) {
    if (auto j = liso.lookup(fk.var[i])) out[*j] = x[i];
    else if (x[i] != 0) dropped_zero = false;
  }
  return {std::move(out), dropped_zero};
}

// Witness as JSON object text {name: "p/q", ...} in variable order.
inline std::string witness_json(const RationalLinearSystem& sys, const std::vector<Rational>& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += "\"" + sys.name(i) + "\":\"" + to_string(x[i]) + "\"";
  }
  return s + "}";
}

}  // namespace homvec
