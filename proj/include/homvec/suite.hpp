#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "homvec/biso.hpp"
#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/graph_io.hpp"
#include "homvec/hom.hpp"
#include "homvec/kwl.hpp"
#include "homvec/linsys.hpp"
#include "homvec/refine.hpp"
#include "homvec/simplex.hpp"
#include "homvec/spectral.hpp"
#include "homvec/treedecomp.hpp"
#include "homvec/trees.hpp"

namespace homvec {

// All graphs up to some order, one per isomorphism class, as shipped in
// data/graphs/graphs_n<N>.g6.
struct Corpus {
  std::vector<std::vector<Graph>> by_n;

  std::size_t max_n() const { return by_n.empty() ? 0 : by_n.size() - 1; }
};

inline Corpus load_corpus(const std::string& dir, std::size_t max_n) {
  Corpus c;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto path = dir + "/graphs_n" + std::to_string(n) + ".g6";
    c.by_n.push_back(parse_graph6_lines(read_file(path)));
    for (const auto& g : c.by_n.back())
      if (g.n() != n) throw ParseError("corpus file '" + path + "' holds a graph of the wrong order", 0);
  }
  return c;
}

struct GraphPair {
  const Graph* g;
  const Graph* h;
  std::size_t n;
  std::size_t m;
};

// Unordered pairs of distinct corpus graphs with equal vertex and edge
// counts, ordered by n, then m, then corpus position.
inline std::vector<GraphPair> equal_nm_pairs(const Corpus& c, std::size_t max_n, std::size_t min_n = 0) {
  std::vector<GraphPair> out;
  for (std::size_t n = min_n; n <= std::min(max_n, c.max_n()); ++n) {
    const auto& gs = c.by_n[n];
    std::size_t max_m = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::size_t m = 0; m <= max_m; ++m)
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].m() != m) continue;
        for (std::size_t j = i + 1; j < gs.size(); ++j)
          if (gs[j].m() == m) out.push_back({&gs[i], &gs[j], n, m});
      }
  }
  return out;
}

struct SuiteConfig {
  std::size_t max_n = 6;
  std::size_t tree_probe_size = 8;
  std::size_t pattern_size = 5;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  // Suite 4 also pairs every corpus graph with 2..self_pair_max_n vertices
  // with a seeded relabeling of itself, so the transfer identity is checked
  // on real witnesses even where no corpus pair has one.
  std::size_t self_pair_max_n = 0;
  SystemBudget budget{};
};

struct Violation {
  std::string g6_g;
  std::string g6_h;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string what;
};

struct SuiteReport {
  std::string name;
  std::size_t pairs = 0;
  std::map<std::string, std::size_t> counts;
  std::vector<Violation> violations;
  double seconds = 0;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Runs fn(i) for i in [0, count) on `jobs` threads and merges the per-pair
// outcomes in index order, so the report does not depend on scheduling.
struct PairOutcome {
  std::vector<std::string> tags;
  std::vector<std::string> violations;
};

inline void run_pairs(SuiteReport& rep, const std::vector<GraphPair>& pairs, std::size_t jobs,
                      const std::function<PairOutcome(const GraphPair&)>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<PairOutcome> out(pairs.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, pairs.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = fn(pairs[i]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < pairs.size(); i += jobs) out[i] = fn(pairs[i]);
      });
    for (auto& th : pool) th.join();
  }
  rep.pairs += pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto& tag : out[i].tags) ++rep.counts[tag];
    for (const auto& v : out[i].violations)
      rep.violations.push_back({write_graph6(*pairs[i].g), write_graph6(*pairs[i].h), pairs[i].n, pairs[i].m, v});
  }
  rep.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// hom(F, G) for every pattern F, cached per corpus graph.
class HomTable {
 public:
  using Counter = std::function<BigInt(std::size_t pattern, const Graph& target)>;

  HomTable(std::vector<Graph> patterns, Counter counter, const std::vector<GraphPair>& pairs)
      : patterns_(std::move(patterns)) {
    for (const auto& p : pairs)
      for (const Graph* g : {p.g, p.h})
        if (!table_.count(g)) {
          std::vector<BigInt> v;
          for (std::size_t i = 0; i < patterns_.size(); ++i) v.push_back(counter(i, *g));
          table_.emplace(g, std::move(v));
        }
  }

  // First pattern whose counts differ.
  std::optional<std::size_t> witness(const Graph* g, const Graph* h) const {
    const auto& a = table_.at(g);
    const auto& b = table_.at(h);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return i;
    return std::nullopt;
  }

  const Graph& pattern(std::size_t i) const { return patterns_[i]; }

 private:
  std::vector<Graph> patterns_;
  std::map<const Graph*, std::vector<BigInt>> table_;
};

}  // namespace detail

// First tree with at most max_size vertices on which hom counts differ.
inline std::optional<Graph> tree_probe(const Graph& g, const Graph& h, std::size_t max_size) {
  for (const auto& t : enumerate_free_trees(max_size))
    if (hom_tree(t, g) != hom_tree(t, h)) return t;
  return std::nullopt;
}

// Suite 1: color refinement distinguishes G and H iff Fiso(G,H) has no
// nonnegative solution; a tree with differing hom counts forces both.
inline SuiteReport suite_theorem1(const Corpus& c, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.name = "theorem1";
  auto pairs = equal_nm_pairs(c, cfg.max_n);
  const auto tree_list = enumerate_free_trees(cfg.tree_probe_size);
  detail::HomTable trees(
      tree_list, [&](std::size_t i, const Graph& g) { return hom_tree(tree_list[i], g); }, pairs);
  detail::run_pairs(rep, pairs, cfg.jobs, [&](const GraphPair& p) {
    detail::PairOutcome o;
    const bool wl = distinguishes_1wl(*p.g, *p.h);
    const auto lp = solve_nonneg(build_fiso(*p.g, *p.h, cfg.budget));
    const bool probe = trees.witness(p.g, p.h).has_value();
    o.tags.push_back(wl ? "1wl_distinguished" : "1wl_equivalent");
    if (probe) o.tags.push_back("tree_probe_witness");
    if (wl == lp.feasible)
      o.violations.push_back(std::string("1-WL ") + (wl ? "distinguishes" : "does not distinguish") +
                             " but Fiso nonnegative " + (lp.feasible ? "feasible" : "infeasible"));
    if (probe && (!wl || lp.feasible)) o.violations.push_back("tree-probe witness on an equivalent pair");
    if (lp.feasible && !build_fiso(*p.g, *p.h).satisfied_by(lp.witness))
      o.violations.push_back("Fiso witness does not satisfy the system");
    return o;
  });
  return rep;
}

// Suite 2: Fiso(G,H) has a real solution iff the walk sequences agree,
// decided by fingerprints and cross-checked on s_0..s_{n_G+n_H}.
inline SuiteReport suite_theorem2(const Corpus& c, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.name = "theorem2";
  auto pairs = equal_nm_pairs(c, cfg.max_n);
  detail::run_pairs(rep, pairs, cfg.jobs, [&](const GraphPair& p) {
    detail::PairOutcome o;
    const auto sys = build_fiso(*p.g, *p.h, cfg.budget);
    const auto lp = solve_real(sys);
    const bool fp_equal = walk_fingerprint(*p.g) == walk_fingerprint(*p.h);
    const std::size_t horizon = p.g->n() + p.h->n();
    const bool walks_equal = walk_counts(*p.g, horizon) == walk_counts(*p.h, horizon);
    o.tags.push_back(lp.feasible ? "fiso_real_feasible" : "fiso_real_infeasible");
    if (lp.feasible != fp_equal)
      o.violations.push_back(std::string("Fiso real ") + (lp.feasible ? "feasible" : "infeasible") +
                             " but walk fingerprints " + (fp_equal ? "equal" : "differ"));
    if (fp_equal != walks_equal) o.violations.push_back("walk fingerprint disagrees with walk counts");
    if (lp.feasible && !sys.satisfied_by(lp.witness)) o.violations.push_back("Fiso witness does not satisfy the system");
    return o;
  });
  return rep;
}

// Suite 3 at level k: Liso^{k+1}(G,H) has a nonnegative solution iff k-WL
// does not distinguish G and H. Also checks the transfers between Liso and
// Fiso^{k+1/2} on every witness.
inline SuiteReport suite_theorem3(const Corpus& c, const SuiteConfig& cfg, std::size_t k) {
  SuiteReport rep;
  rep.name = "theorem3_k" + std::to_string(k);
  auto pairs = equal_nm_pairs(c, cfg.max_n);
  detail::run_pairs(rep, pairs, cfg.jobs, [&](const GraphPair& p) {
    detail::PairOutcome o;
    const bool wl = distinguishes_kwl(*p.g, *p.h, k);
    const auto liso = build_liso(*p.g, *p.h, k + 1, cfg.budget);
    const auto lp = solve_nonneg(liso.system);
    o.tags.push_back(wl ? "kwl_distinguished" : "kwl_equivalent");
    if (wl == lp.feasible)
      o.violations.push_back(std::to_string(k) + "-WL " + (wl ? "distinguishes" : "does not distinguish") +
                             " but Liso nonnegative " + (lp.feasible ? "feasible" : "infeasible"));
    const auto fk = build_fiso_khalf(*p.g, *p.h, k, cfg.budget);
    if (lp.feasible) {
      if (!liso.system.satisfied_by(lp.witness)) o.violations.push_back("Liso witness does not satisfy the system");
      // Liso^{k+1} solution restricted to |π| ≤ k solves Fiso^{k+1/2}.
      if (!fk.system.satisfied_by(restrict_liso_to_fkhalf(liso, lp.witness, fk)))
        o.violations.push_back("Liso witness does not restrict to a Fiso^{k+1/2} solution");
    }
    const auto fk_lp = solve_nonneg(fk.system);
    if (fk_lp.feasible == wl) o.violations.push_back("Fiso^{k+1/2} nonnegative feasibility disagrees with k-WL");
    if (fk_lp.feasible) {
      // A nonnegative Fiso^{k+1/2} solution vanishes off partial
      // isomorphisms and solves Liso^k.
      const auto liso_k = build_liso(*p.g, *p.h, k, cfg.budget);
      auto [x, dropped_zero] = fkhalf_to_liso(fk, fk_lp.witness, liso_k);
      if (!dropped_zero) o.violations.push_back("nonnegative Fiso^{k+1/2} witness is nonzero off partial isomorphisms");
      else if (!liso_k.system.satisfied_by(x)) o.violations.push_back("Fiso^{k+1/2} witness is not a Liso^k solution");
    }
    return o;
  });
  return rep;
}

// One graph per isomorphism class on exactly n vertices, by taking the
// lexicographically least upper-triangle bitstring over all relabelings.
// Meant for pattern sizes; n ≤ 6.
inline std::vector<Graph> small_graphs(std::size_t n) {
  if (n > 6) throw CapacityError("small_graphs vertex count", static_cast<double>(n), 6);
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint32_t> bit(n * n);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto [u, v] = slots[i];
    bit[u * n + v] = bit[v * n + u] = std::uint32_t{1} << (slots.size() - 1 - i);
  }
  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool least = true;
    for (const auto& p : perms) {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> (slots.size() - 1 - i) & 1) img |= bit[p[slots[i].first] * n + p[slots[i].second]];
      if (img < mask) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> (slots.size() - 1 - i) & 1) e.push_back(slots[i]);
    out.push_back(Graph::from_edges(n, e));
  }
  return out;
}

// Patterns on 1..max_size vertices with pathwidth ≤ 2, each with a
// decomposition of that width.
struct Pattern {
  Graph graph;
  TreeDecomposition decomposition;
  std::optional<PathDecomposition> shaped;  // |X| = 2 alternating shape
};

inline std::vector<Pattern> pathwidth2_patterns(std::size_t max_size) {
  std::vector<Pattern> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& f : small_graphs(n)) {
      auto pw = pathwidth(f);
      if (pw.width > 2) continue;
      out.push_back({f, pw.decomposition, find_path_decomposition(f, 2)});
    }
  return out;
}

// Transfer identity for a real Liso^{k+1} solution x and a decomposition P
// of F with |X| = k: for every tuple v̄ ∈ V(G)^k,
//   bisocond(G; v̄) = Σ_{w̄ ∈ V(H)^k} X_{{(v_i,w_i)}} · bisocond(H; w̄).
// Returns the first tuple where it fails.
inline std::optional<std::vector<Vertex>> check_biso_transfer(const Graph& f, const PathDecomposition& p,
                                                              const Graph& g, const Graph& h,
                                                              const PartialMapSystem& liso,
                                                              const std::vector<Rational>& x) {
  const std::size_t k = p.k;
  auto tuples = [k](std::size_t n) {
    std::vector<std::vector<Vertex>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= n;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<Vertex> t(k);
      std::size_t r = idx;
      for (std::size_t i = k; i-- > 0;) {
        t[i] = static_cast<Vertex>(r % n);
        r /= n;
      }
      out.push_back(std::move(t));
    }
    return out;
  };
  const auto ws = tuples(h.n());
  std::vector<BigInt> bh;
  for (const auto& w : ws) bh.push_back(biso_conditional(f, p, h, w));
  for (const auto& v : tuples(g.n())) {
    Rational rhs = 0;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (bh[j] == 0) continue;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(v[i], ws[j][i]);
      rhs += liso.value(x, PartialMap(pairs)) * Rational(bh[j]);
    }
    if (Rational(biso_conditional(f, p, g, v)) != rhs) return v;
  }
  return std::nullopt;
}

// Suite 4, level 2: a real solution of Liso^3(G,H) forces equal hom counts
// from every pattern of pathwidth ≤ 2. Each real witness is also checked
// against the conditional biso transfer identity.
inline SuiteReport suite_theorem4(const Corpus& c, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.name = "theorem4";
  auto pairs = equal_nm_pairs(c, cfg.max_n);
  std::vector<Graph> relabeled;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t n = 2; n <= std::min(cfg.self_pair_max_n, c.max_n()); ++n)
    for (const auto& g : c.by_n[n]) {
      std::vector<Vertex> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      relabeled.push_back(permute(g, perm));
    }
  {
    std::size_t r = 0;
    for (std::size_t n = 2; n <= std::min(cfg.self_pair_max_n, c.max_n()); ++n)
      for (const auto& g : c.by_n[n]) pairs.push_back({&g, &relabeled[r++], n, g.m()});
  }
  const auto patterns = pathwidth2_patterns(cfg.pattern_size);
  std::vector<Graph> pg;
  for (const auto& p : patterns) pg.push_back(p.graph);
  detail::HomTable homs(
      pg,
      [&](std::size_t i, const Graph& g) { return hom_treewidth(patterns[i].graph, patterns[i].decomposition, g); },
      pairs);
  detail::run_pairs(rep, pairs, cfg.jobs, [&](const GraphPair& p) {
    detail::PairOutcome o;
    const auto liso = build_liso(*p.g, *p.h, 3, cfg.budget);
    const auto lp = solve_real(liso.system);
    const auto wit = homs.witness(p.g, p.h);
    o.tags.push_back(lp.feasible ? "liso3_real_feasible" : "liso3_real_infeasible");
    if (wit) o.tags.push_back("pw2_pattern_witness");
    if (lp.feasible && wit)
      o.violations.push_back("Liso^3 real feasible but hom counts differ on pattern " + write_graph6(homs.pattern(*wit)));
    if (lp.feasible) {
      if (!liso.system.satisfied_by(lp.witness)) o.violations.push_back("Liso^3 witness does not satisfy the system");
      for (const auto& pat : patterns) {
        if (!pat.shaped) continue;
        if (check_biso_transfer(pat.graph, *pat.shaped, *p.g, *p.h, liso, lp.witness)) {
          o.violations.push_back("biso transfer identity fails for pattern " + write_graph6(pat.graph));
          break;
        }
        o.tags.push_back("biso_transfer_checked");
      }
    }
    return o;
  });
  return rep;
}

// The cycle pair C6 vs 2C3: Liso^3 has no real solution and the triangle, a
// pathwidth-2 pattern, has 0 vs 12 homomorphisms.
inline bool theorem4_contrapositive_fixture() {
  const Graph g = cycle(6), h = disjoint_union(cycle(3), cycle(3));
  const bool infeasible = !solve_real(build_liso(g, h, 3).system).feasible;
  const Graph tri = cycle(3);
  const auto td = pathwidth(tri).decomposition;
  return infeasible && hom_treewidth(tri, td, g) == 0 && hom_treewidth(tri, td, h) == 12;
}

// --- refinement benchmark ----------------------------------------------------

// Uniform random graph with n vertices and exactly ⌊n·avg_degree/2⌋ edges
// (capped at n(n-1)/2), so two samples of the same size always agree on n
// and m.
inline Graph random_graph(std::size_t n, double avg_degree, std::mt19937_64& rng) {
  if (n < 2) return Graph::empty(n);
  const std::size_t m = std::min(static_cast<std::size_t>(static_cast<double>(n) * avg_degree / 2.0), n * (n - 1) / 2);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * m);
  std::vector<Edge> e;
  e.reserve(m);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (e.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(static_cast<std::uint64_t>(u) << 32 | v).second) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double seconds = 0;
  bool distinguished = false;
  std::optional<double> ratio;  // time relative to the previous row
};

// Times refine_stable on G ⊎ H plus the cr comparison (equal color class
// sizes on both sides) on random pairs with equal n and m. Graph generation
// is not timed.
inline std::vector<BenchRow> bench_refine(const std::vector<std::size_t>& sizes, double avg_degree, std::uint64_t seed,
                                          std::size_t repeats = 1) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    Graph g = random_graph(n, avg_degree, rng);
    Graph h = random_graph(n, avg_degree, rng);
    BenchRow r;
    r.n = n;
    r.m = g.m() + h.m();
    double best = 1e300;
    for (std::size_t i = 0; i < std::max<std::size_t>(1, repeats); ++i) {
      auto t0 = std::chrono::steady_clock::now();
      r.distinguished = joint_refinement(g, h, RefineEngine::rounds).distinguishes();
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    r.seconds = best;
    if (!rows.empty() && rows.back().seconds > 0) r.ratio = r.seconds / rows.back().seconds;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace homvec
