#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homvec/graph.hpp"
#include "homvec/refine.hpp"
#include "homvec/trees.hpp"

namespace homvec {

// Depth-d truncation of the tree unfolding at every vertex, computed level
// by level straight from the adjacency lists. An isolated vertex has an
// unfolding only at depth 0 (nullopt otherwise).
inline std::vector<std::optional<RootedTreeCode>> unfold_all(const Graph& g, std::size_t depth) {
  const std::size_t n = g.n();
  std::vector<std::string> level(n, "()");
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<std::string> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::string> kids;
      kids.reserve(g.degree(v));
      for (Vertex u : g.neighbors(v)) kids.push_back(level[u]);
      next[v] = RootedTreeCode::node(std::move(kids)).code;
    }
    level = std::move(next);
  }
  std::vector<std::optional<RootedTreeCode>> out(n);
  for (Vertex v = 0; v < n; ++v)
    if (depth == 0 || g.degree(v) > 0) out[v] = RootedTreeCode{std::move(level[v])};
  return out;
}

inline std::optional<RootedTreeCode> unfold(const Graph& g, Vertex v, std::size_t depth) {
  if (v >= g.n()) throw PreconditionError("unfold: vertex out of range");
  if (depth > 0 && g.degree(v) == 0) return std::nullopt;
  // Only vertices within distance `depth` matter; a full level sweep is
  // simple and the trees themselves dominate the cost.
  return unfold_all(g, depth)[v];
}

using CrVector = std::map<RootedTreeCode, std::size_t>;

// cr-vector at depth d, built from the stable coloring: the depth-j unfolding
// of a vertex depends only on its stable color, so codes are memoized per
// (color, depth) instead of per vertex.
inline CrVector cr_vector(const Graph& g, std::size_t depth) {
  const Coloring stable = stable_partition(g);
  const std::size_t k = stable.num_classes();
  // Neighbor color multiset of one representative per class.
  std::vector<std::vector<Color>> nbr(k);
  for (Color c = 0; c < k; ++c) {
    Vertex rep = stable.classes[c].front();
    for (Vertex u : g.neighbors(rep)) nbr[c].push_back(stable.color[u]);
  }
  std::vector<std::string> level(k, "()");
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<std::string> next(k);
    for (Color c = 0; c < k; ++c) {
      std::vector<std::string> kids;
      for (Color x : nbr[c]) kids.push_back(level[x]);
      next[c] = RootedTreeCode::node(std::move(kids)).code;
    }
    level = std::move(next);
  }
  CrVector out;
  for (Color c = 0; c < k; ++c) {
    if (depth > 0 && nbr[c].empty()) continue;
    out[RootedTreeCode{level[c]}] += stable.classes[c].size();
  }
  return out;
}

// Number of vertices whose depth-d unfolding (d = depth of t) equals t.
// Zero for malformed codes or trees with leaves at differing depths.
inline std::size_t cr_count(const RootedTreeCode& t, const Graph& g) {
  if (!t.well_formed() || !t.leaves_at_uniform_depth()) return 0;
  RootedTreeCode canon = RootedTreeCode::canonicalize(t.code);
  auto cr = cr_vector(g, canon.depth());
  auto it = cr.find(canon);
  return it == cr.end() ? 0 : it->second;
}

}  // namespace homvec
