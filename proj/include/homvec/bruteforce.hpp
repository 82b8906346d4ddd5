#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// Counts obtained by enumerating every map V(F) → V(G). These are the
// reference values the faster counters are checked against.
struct MapCounts {
  BigInt hom;     // edges to edges
  BigInt inj;     // injective homs
  BigInt strhom;  // edges to edges and non-edges to non-edges
  BigInt strinj;  // injective strong homs (induced embeddings)
};

struct BruteforceOptions {
  double max_maps = 2e7;
};

namespace detail {

inline void check_map_budget(std::size_t nf, std::size_t ng, const BruteforceOptions& opt) {
  double maps = std::pow(static_cast<double>(ng), static_cast<double>(nf));
  if (maps > opt.max_maps) throw CapacityError("brute-force map count n_G^n_F", maps, opt.max_maps);
}

}  // namespace detail

inline MapCounts count_maps(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  detail::check_map_budget(f.n(), g.n(), opt);
  MapCounts c{0, 0, 0, 0};
  const std::size_t nf = f.n(), ng = g.n();
  if (nf == 0) return {1, 1, 1, 1};
  if (ng == 0) return c;
  std::vector<Vertex> h(nf, 0);
  std::vector<unsigned> used(ng, 0);
  // Extends h on vertices 0..i-1 one vertex at a time so that a failed edge
  // check prunes the whole subtree; strong/injective flags ride along.
  std::function<void(std::size_t, bool, bool)> rec = [&](std::size_t i, bool strong, bool injective) {
    if (i == nf) {
      ++c.hom;
      if (injective) ++c.inj;
      if (strong) ++c.strhom;
      if (strong && injective) ++c.strinj;
      return;
    }
    for (Vertex x = 0; x < ng; ++x) {
      bool ok = true, st = strong;
      for (Vertex j = 0; j < i && ok; ++j) {
        bool fe = f.has_edge(j, static_cast<Vertex>(i));
        bool ge = h[j] != x && g.has_edge(h[j], x);
        if (fe && !ge) ok = false;
        if (!fe && ge) st = false;
      }
      if (!ok) continue;
      h[i] = x;
      ++used[x];
      rec(i + 1, st, injective && used[x] == 1);
      --used[x];
    }
  };
  rec(0, true, true);
  return c;
}

inline BigInt hom_bruteforce(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  return count_maps(f, g, opt).hom;
}
inline BigInt inj_bruteforce(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  return count_maps(f, g, opt).inj;
}
inline BigInt strhom_bruteforce(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  return count_maps(f, g, opt).strhom;
}
inline BigInt aut_bruteforce(const Graph& f, const BruteforceOptions& opt = {}) {
  return count_maps(f, f, opt).strinj;
}
// Subgraphs of G isomorphic to F.
inline BigInt sub_bruteforce(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  return count_maps(f, g, opt).inj / aut_bruteforce(f, opt);
}
// Induced subgraphs of G isomorphic to F.
inline BigInt ind_bruteforce(const Graph& f, const Graph& g, const BruteforceOptions& opt = {}) {
  return count_maps(f, g, opt).strinj / aut_bruteforce(f, opt);
}

// --- rooted trees ----------------------------------------------------------

struct DepthMapCounts {
  BigInt all;         // depth-preserving homs
  BigInt surjective;  // ... hitting every vertex of the target
  BigInt injective;
};

namespace detail {

struct RootedLayout {
  std::vector<int> parent;
  std::vector<std::size_t> depth;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> bfs;
  std::size_t height = 0;
};

inline RootedLayout layout(const RootedGraph& t) {
  if (!is_tree(t.graph)) throw PreconditionError("rooted tree expected");
  RootedLayout l;
  const std::size_t n = t.graph.n();
  l.parent.assign(n, -1);
  l.depth.assign(n, 0);
  l.children.resize(n);
  l.bfs.push_back(t.root);
  std::vector<char> seen(n, 0);
  seen[t.root] = 1;
  for (std::size_t i = 0; i < l.bfs.size(); ++i) {
    Vertex x = l.bfs[i];
    for (Vertex y : t.graph.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        l.parent[y] = static_cast<int>(x);
        l.depth[y] = l.depth[x] + 1;
        l.height = std::max(l.height, l.depth[y]);
        l.children[x].push_back(y);
        l.bfs.push_back(y);
      }
  }
  return l;
}

}  // namespace detail

// Enumerates depth-preserving homs T → T' (root to root, every child to a
// child of its parent's image).
inline DepthMapCounts depth_maps(const RootedGraph& t, const RootedGraph& tp, const BruteforceOptions& opt = {}) {
  detail::check_map_budget(t.graph.n(), tp.graph.n(), opt);
  auto a = detail::layout(t);
  auto b = detail::layout(tp);
  DepthMapCounts c{0, 0, 0};
  const std::size_t n = t.graph.n(), np = tp.graph.n();
  std::vector<Vertex> h(n);
  std::vector<unsigned> hits(np, 0);
  std::size_t distinct = 0;
  h[t.root] = tp.root;
  hits[tp.root] = 1;
  distinct = 1;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool injective) {
    if (i == n) {
      ++c.all;
      if (distinct == np) ++c.surjective;
      if (injective) ++c.injective;
      return;
    }
    Vertex x = a.bfs[i];
    Vertex px = static_cast<Vertex>(a.parent[x]);
    for (Vertex y : b.children[h[px]]) {
      h[x] = y;
      if (hits[y]++ == 0) ++distinct;
      rec(i + 1, injective && hits[y] == 1);
      if (--hits[y] == 0) --distinct;
    }
  };
  rec(1, true);
  return c;
}

inline std::size_t rooted_depth(const RootedGraph& t) { return detail::layout(t).height; }

// Depth-preserving, depth-surjective homs; zero when the depths differ.
inline BigInt dhom_oracle(const RootedGraph& t, const RootedGraph& tp, const BruteforceOptions& opt = {}) {
  if (rooted_depth(t) != rooted_depth(tp)) return 0;
  return depth_maps(t, tp, opt).all;
}

inline BigInt dsurj_oracle(const RootedGraph& t, const RootedGraph& tp, const BruteforceOptions& opt = {}) {
  return depth_maps(t, tp, opt).surjective;
}

// Root-preserving subtrees of T' isomorphic to T; zero when depths differ.
inline BigInt dsub_oracle(const RootedGraph& t, const RootedGraph& tp, const BruteforceOptions& opt = {}) {
  if (rooted_depth(t) != rooted_depth(tp)) return 0;
  BigInt emb = depth_maps(t, tp, opt).injective;
  BigInt aut = depth_maps(t, t, opt).injective;
  return emb / aut;
}

}  // namespace homvec
