#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected finite graph on vertices 0..n-1.
//
// Neighbor lists are strictly sorted. Bitset rows are kept for graphs up to
// kBitsetLimit vertices; larger graphs answer has_edge() by binary search.
class Graph {
 public:
  static constexpr std::size_t kBitsetLimit = 4096;

  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // collapse; loops and out-of-range endpoints throw PreconditionError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
      if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return Graph(std::move(adj));
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph empty(std::size_t n) { return Graph(std::vector<std::vector<Vertex>>(n)); }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (!rows_.empty()) return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
    std::size_t deg_sum = 0;
    for (const auto& a : adj_) deg_sum += a.size();
    m_ = deg_sum / 2;
    if (n() <= kBitsetLimit && n() > 0) {
      words_ = (n() + 63) / 64;
      rows_.assign(n() * words_, 0);
      for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u]) rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
};

struct RootedGraph {
  Graph graph;
  Vertex root = 0;

  RootedGraph() = default;
  RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r) {
    if (root >= graph.n()) throw PreconditionError("root out of range");
  }
};

// Dense square matrix of big integers.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

  explicit AdjacencyMatrix(const Graph& g) : AdjacencyMatrix(g.n()) {
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v : g.neighbors(u)) at(u, v) = 1;
  }

  std::size_t n() const noexcept { return n_; }
  BigInt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  AdjacencyMatrix operator*(const AdjacencyMatrix& o) const {
    AdjacencyMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> a_;
};

// --- graph algebra -------------------------------------------------------

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  const auto off = static_cast<Vertex>(g.n());
  for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
  return Graph::from_edges(g.n() + h.n(), e);
}

// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw PreconditionError("permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(g.m());
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.n(), e);
}

inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(keep.size(), e);
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n();
}

inline bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() + 1 == g.n() && is_connected(g); }

inline std::size_t isolated_count(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.n(); ++v) c += g.degree(v) == 0;
  return c;
}

// --- generators ----------------------------------------------------------
//
// path(l) has l edges; cycle(0) is the single vertex (degenerate cycle).

inline Graph path(std::size_t length) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < length; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(length + 1, e);
}

inline Graph cycle(std::size_t length) {
  if (length == 0) return Graph::empty(1);
  if (length < 3) throw PreconditionError("cycle length must be 0 or >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < length; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length));
  return Graph::from_edges(length, e);
}

// K_{1,k}; the center is vertex 0.
inline Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= k; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(k + 1, e);
}

// Center 0 with `legs` paths of `leg_length` edges each.
inline Graph spider(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace homvec
