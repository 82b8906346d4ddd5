#pragma once

#include <cstddef>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// hom(T, G) for a tree T. Roots T at vertex 0 and sweeps bottom-up:
// count_t(u) is the number of homs of the subtree at t sending t to u, and a
// child contributes Σ_{u' ∈ N(u)} count_child(u').
inline BigInt hom_tree(const Graph& t, const Graph& g) {
  if (!is_tree(t)) throw PreconditionError("hom_tree: pattern is not a tree");
  const std::size_t n = g.n();
  std::vector<int> parent(t.n(), -1);
  std::vector<Vertex> order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : t.neighbors(order[i]))
      if (parent[c] < 0) {
        parent[c] = static_cast<int>(order[i]);
        order.push_back(c);
      }

  std::vector<std::vector<BigInt>> count(t.n(), std::vector<BigInt>(n, 1));
  std::vector<BigInt> lifted(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex x = *it;
    if (x == 0) break;
    const auto& cx = count[x];
    for (Vertex u = 0; u < n; ++u) {
      BigInt s = 0;
      for (Vertex w : g.neighbors(u)) s += cx[w];
      lifted[u] = std::move(s);
    }
    auto& cp = count[static_cast<Vertex>(parent[x])];
    for (Vertex u = 0; u < n; ++u) cp[u] *= lifted[u];
    count[x].clear();
  }
  BigInt total = 0;
  for (const auto& c : count[0]) total += c;
  return total;
}

// Walk counts s_0..s_len with s_l = 1ᵀAˡ1, by repeated A·x from x = 1.
inline std::vector<BigInt> walk_counts(const Graph& g, std::size_t len) {
  std::vector<BigInt> x(g.n(), 1), y(g.n());
  std::vector<BigInt> out;
  out.reserve(len + 1);
  for (std::size_t l = 0;; ++l) {
    BigInt s = 0;
    for (const auto& v : x) s += v;
    out.push_back(std::move(s));
    if (l == len) break;
    for (Vertex u = 0; u < g.n(); ++u) {
      BigInt acc = 0;
      for (Vertex w : g.neighbors(u)) acc += x[w];
      y[u] = std::move(acc);
    }
    std::swap(x, y);
  }
  return out;
}

inline BigInt walk_count(const Graph& g, std::size_t len) { return walk_counts(g, len).back(); }

// Closed walk counts tr(A^0)..tr(A^len).
inline std::vector<BigInt> closed_walk_counts(const Graph& g, std::size_t len) {
  AdjacencyMatrix a(g);
  AdjacencyMatrix p(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) p.at(i, i) = 1;
  std::vector<BigInt> out;
  out.reserve(len + 1);
  for (std::size_t l = 0;; ++l) {
    out.push_back(p.trace());
    if (l == len) break;
    p = p * a;
  }
  return out;
}

inline BigInt closed_walk_count(const Graph& g, std::size_t len) { return closed_walk_counts(g, len).back(); }

}  // namespace homvec
