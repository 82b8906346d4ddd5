#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// Rooted tree decomposition. parent[i] is the parent node of node i, or -1 for
// the root; exactly one root. Bags are sorted vertex lists of the pattern.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
  }

  // Empty when valid for f, else one message per violated condition.
  std::vector<std::string> violations(const Graph& f) const {
    std::vector<std::string> out;
    const std::size_t nodes = bags.size();
    if (parent.size() != nodes) {
      out.push_back("parent array size differs from bag count");
      return out;
    }
    if (nodes == 0) {
      if (f.n() > 0) out.push_back("no bags for a nonempty pattern");
      return out;
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < nodes; ++i) {
      if (parent[i] < 0) ++roots;
      else if (static_cast<std::size_t>(parent[i]) >= nodes) out.push_back("parent index out of range");
    }
    if (roots != 1) out.push_back("expected exactly one root, found " + std::to_string(roots));
    // Acyclic parent pointers: every node reaches the root within `nodes` steps.
    for (std::size_t i = 0; i < nodes && out.empty(); ++i) {
      int x = static_cast<int>(i);
      std::size_t steps = 0;
      while (x >= 0 && steps <= nodes) {
        x = parent[static_cast<std::size_t>(x)];
        ++steps;
      }
      if (x >= 0) out.push_back("parent pointers contain a cycle");
    }
    if (!out.empty()) return out;

    for (const auto& b : bags)
      for (Vertex v : b)
        if (v >= f.n()) {
          out.push_back("bag vertex " + std::to_string(v) + " out of range");
          return out;
        }
    std::vector<std::vector<std::size_t>> holding(f.n());
    for (std::size_t i = 0; i < nodes; ++i)
      for (Vertex v : bags[i]) holding[v].push_back(i);
    for (Vertex v = 0; v < f.n(); ++v)
      if (holding[v].empty()) out.push_back("vertex " + std::to_string(v) + " is in no bag");
    for (auto [u, v] : f.edges()) {
      bool covered = false;
      for (const auto& b : bags)
        covered = covered || (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v));
      if (!covered) out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    // Bags holding v form a subtree iff exactly one of them has a parent
    // whose bag lacks v.
    for (Vertex v = 0; v < f.n(); ++v) {
      std::size_t tops = 0;
      for (std::size_t i : holding[v]) {
        int p = parent[i];
        if (p < 0 || !std::binary_search(bags[static_cast<std::size_t>(p)].begin(),
                                         bags[static_cast<std::size_t>(p)].end(), v))
          ++tops;
      }
      if (tops > 1) out.push_back("bags containing vertex " + std::to_string(v) + " are not connected");
    }
    return out;
  }

  void validate(const Graph& f) const {
    auto v = violations(f);
    if (v.empty()) return;
    std::string msg = "invalid tree decomposition:";
    for (const auto& s : v) msg += " " + s + ";";
    throw PreconditionError(msg);
  }
};

namespace detail {

// Tree decomposition from an elimination ordering: eliminating v makes its
// remaining neighborhood a clique, bag(v) = {v} ∪ N(v), and bag(v) hangs
// below the bag of the first-eliminated vertex of N(v). Components are
// chained together at their roots.
inline TreeDecomposition decomposition_from_elimination(const Graph& f, const std::vector<Vertex>& order) {
  const std::size_t n = f.n();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : f.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td;
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex u : adj[v])
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    td.bags[i] = later;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    if (!later.empty()) {
      Vertex first = *std::min_element(later.begin(), later.end(),
                                       [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      td.parent[i] = static_cast<int>(pos[first]);
    }
  }
  // Chain component roots under the last one.
  int last_root = -1;
  for (std::size_t i = n; i-- > 0;)
    if (td.parent[i] < 0) {
      if (last_root >= 0) td.parent[i] = last_root;
      else last_root = static_cast<int>(i);
    }
  return td;
}

}  // namespace detail

// Width-≤2 decomposition by repeatedly eliminating a vertex of current degree
// ≤ 2 (the series-parallel reduction). Throws if the pattern has treewidth
// above 2.
inline TreeDecomposition treewidth2_decomposition(const Graph& f) {
  const std::size_t n = f.n();
  if (n == 0) return TreeDecomposition{{{}}, {-1}};
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : f.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  while (order.size() < n) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < n && !pick; ++v)
      if (!gone[v] && adj[v].size() <= 2) pick = v;
    if (!pick) throw PreconditionError("pattern has treewidth greater than 2");
    Vertex v = *pick;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (Vertex u : nb) adj[u].erase(v);
    adj[v].clear();
    gone[v] = 1;
    order.push_back(v);
  }
  return detail::decomposition_from_elimination(f, order);
}

// Vertex-separation number of an ordering prefix set S: vertices of S with a
// neighbor outside S.
namespace detail {
inline std::size_t boundary_size(const Graph& f, std::uint32_t s) {
  std::size_t c = 0;
  for (Vertex v = 0; v < f.n(); ++v) {
    if (!((s >> v) & 1U)) continue;
    for (Vertex u : f.neighbors(v))
      if (!((s >> u) & 1U)) {
        ++c;
        break;
      }
  }
  return c;
}
}  // namespace detail

// Exact pathwidth together with an optimal path decomposition (a chain of
// bags, node i the parent of node i+1). Subset DP over vertex-separation
// orderings; patterns up to 20 vertices.
struct PathwidthResult {
  std::size_t width = 0;
  TreeDecomposition decomposition;
};

inline PathwidthResult pathwidth(const Graph& f) {
  const std::size_t n = f.n();
  if (n > 20) throw CapacityError("pathwidth subset DP vertex count", static_cast<double>(n), 20);
  if (n == 0) return {0, TreeDecomposition{{{}}, {-1}}};
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(full + 1, kInf);
  std::vector<Vertex> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::size_t here = detail::boundary_size(f, s);
    for (Vertex v = 0; v < n; ++v) {
      if (!((s >> v) & 1U)) continue;
      std::size_t cand = std::max(best[s & ~(std::uint32_t{1} << v)], here);
      if (cand < best[s]) {
        best[s] = cand;
        choice[s] = v;
      }
    }
  }
  std::vector<Vertex> order;
  for (std::uint32_t s = full; s != 0; s &= ~(std::uint32_t{1} << choice[s])) order.push_back(choice[s]);
  std::reverse(order.begin(), order.end());

  // bag_i = boundary(prefix before v_i) ∪ {v_i}.
  PathwidthResult r;
  r.width = best[full];
  std::uint32_t prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> bag{order[i]};
    for (Vertex v = 0; v < n; ++v) {
      if (!((prefix >> v) & 1U)) continue;
      for (Vertex u : f.neighbors(v))
        if (!((prefix >> u) & 1U)) {
          bag.push_back(v);
          break;
        }
    }
    std::sort(bag.begin(), bag.end());
    r.decomposition.bags.push_back(std::move(bag));
    r.decomposition.parent.push_back(static_cast<int>(i) - 1);
    prefix |= std::uint32_t{1} << order[i];
  }
  return r;
}

struct HomTwOptions {
  // Largest admissible table size n_G^{|bag|}.
  double max_table = 1e7;
};

// hom(F, G) by dynamic programming over a tree decomposition of F. The table
// of node t maps each assignment bag(t) → V(G) that respects the edges of F
// inside the bag to the number of ways to extend it over the subtree of t;
// children contribute marginals over the vertices they do not share with t.
inline BigInt hom_treewidth(const Graph& f, const TreeDecomposition& td, const Graph& g,
                            const HomTwOptions& opt = {}) {
  td.validate(f);
  const std::size_t nodes = td.bags.size();
  const std::size_t n = g.n();
  for (const auto& b : td.bags) {
    double size = std::pow(static_cast<double>(n), static_cast<double>(b.size()));
    if (size > opt.max_table) throw CapacityError("hom_treewidth table size", size, opt.max_table);
  }
  if (f.n() == 0) return 1;
  if (n == 0) return 0;

  std::vector<std::vector<std::size_t>> children(nodes);
  std::size_t root = 0;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (td.parent[i] < 0) root = i;
    else children[static_cast<std::size_t>(td.parent[i])].push_back(i);
  }
  std::vector<std::size_t> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t c : children[order[i]]) order.push_back(c);

  auto table_size = [&](std::size_t k) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < k; ++i) s *= n;
    return s;
  };
  // Assignment index: bag position 0 is the most significant digit.
  auto decode = [&](std::size_t idx, std::size_t k, std::vector<Vertex>& img) {
    img.resize(k);
    for (std::size_t i = k; i-- > 0;) {
      img[i] = static_cast<Vertex>(idx % n);
      idx /= n;
    }
  };

  std::vector<std::vector<BigInt>> table(nodes);
  std::vector<Vertex> img, shared_img;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t t = *it;
    const auto& bag = td.bags[t];
    const std::size_t k = bag.size();
    std::vector<BigInt> tab(table_size(k));

    // Marginal of each child over the bag intersection, indexed like a table
    // over the shared vertices (in child-bag order).
    struct Marginal {
      std::vector<std::size_t> pos_in_parent;
      std::vector<BigInt> values;
    };
    std::vector<Marginal> margs;
    for (std::size_t c : children[t]) {
      const auto& cb = td.bags[c];
      Marginal mg;
      std::vector<std::size_t> pos_in_child;
      for (std::size_t i = 0; i < cb.size(); ++i) {
        auto p = std::lower_bound(bag.begin(), bag.end(), cb[i]);
        if (p != bag.end() && *p == cb[i]) {
          pos_in_child.push_back(i);
          mg.pos_in_parent.push_back(static_cast<std::size_t>(p - bag.begin()));
        }
      }
      mg.values.assign(table_size(pos_in_child.size()), 0);
      for (std::size_t idx = 0; idx < table[c].size(); ++idx) {
        if (table[c][idx] == 0) continue;
        decode(idx, cb.size(), img);
        std::size_t key = 0;
        for (std::size_t p : pos_in_child) key = key * n + img[p];
        mg.values[key] += table[c][idx];
      }
      table[c].clear();
      margs.push_back(std::move(mg));
    }

    for (std::size_t idx = 0; idx < tab.size(); ++idx) {
      decode(idx, k, img);
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a)
        for (std::size_t b = a + 1; b < k && ok; ++b)
          if (f.has_edge(bag[a], bag[b]) && !g.has_edge(img[a], img[b])) ok = false;
      if (!ok) continue;
      BigInt val = 1;
      for (const auto& mg : margs) {
        std::size_t key = 0;
        for (std::size_t p : mg.pos_in_parent) key = key * n + img[p];
        val *= mg.values[key];
        if (val == 0) break;
      }
      tab[idx] = std::move(val);
    }
    table[t] = std::move(tab);
  }
  BigInt total = 0;
  for (const auto& v : table[root]) total += v;
  return total;
}

}  // namespace homvec
