#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"

namespace homvec {

// Canonical balanced-parenthesis code of an unlabeled rooted tree: a node is
// "(" + its children's codes in sorted order + ")". Two rooted trees are
// isomorphic iff their codes are equal.
struct RootedTreeCode {
  std::string code;

  auto operator<=>(const RootedTreeCode&) const = default;

  static RootedTreeCode leaf() { return {"()"}; }

  // Node from child codes (any order).
  static RootedTreeCode node(std::vector<std::string> children) {
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (auto& c : children) s += c;
    s += ")";
    return {std::move(s)};
  }

  std::size_t size() const { return code.size() / 2; }

  // Balanced, nonempty, single outer node.
  bool well_formed() const {
    if (code.size() < 2) return false;
    int depth = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i] == '(') ++depth;
      else if (code[i] == ')') --depth;
      else return false;
      if (depth < 0 || (depth == 0 && i + 1 != code.size())) return false;
    }
    return depth == 0;
  }

  // Height of the tree (root alone = 0).
  std::size_t depth() const {
    int d = 0, best = 0;
    for (char c : code) {
      d += c == '(' ? 1 : -1;
      best = std::max(best, d);
    }
    return static_cast<std::size_t>(best > 0 ? best - 1 : 0);
  }

  // True iff every leaf sits at the same depth.
  bool leaves_at_uniform_depth() const {
    int d = 0;
    std::optional<int> leaf_depth;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i] == '(') {
        ++d;
        if (i + 1 < code.size() && code[i + 1] == ')') {
          if (leaf_depth && *leaf_depth != d) return false;
          leaf_depth = d;
        }
      } else {
        --d;
      }
    }
    return true;
  }

  // Sorted-order canonical form of an arbitrary parenthesis string.
  static RootedTreeCode canonicalize(const std::string& s) {
    RootedTreeCode raw{s};
    if (!raw.well_formed()) throw PreconditionError("malformed rooted tree code '" + s + "'");
    auto [g, root] = raw.to_graph_impl();
    return of(g, root);
  }

  // Materializes the tree; vertex 0 is the root, children get increasing ids
  // in code order.
  RootedGraph to_rooted_graph() const {
    if (!well_formed()) throw PreconditionError("malformed rooted tree code '" + code + "'");
    auto [g, root] = to_graph_impl();
    return RootedGraph(std::move(g), root);
  }

  // Canonical code of the tree g rooted at r (g must be a tree).
  static RootedTreeCode of(const Graph& g, Vertex r) {
    std::vector<int> parent(g.n(), -1);
    std::vector<Vertex> order{r};
    parent[r] = static_cast<int>(r);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex u : g.neighbors(order[i]))
        if (parent[u] < 0) {
          parent[u] = static_cast<int>(order[i]);
          order.push_back(u);
        }
    std::vector<std::vector<std::string>> kids(g.n());
    std::vector<std::string> codes(g.n());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      codes[v] = node(std::move(kids[v])).code;
      if (v != r) kids[static_cast<Vertex>(parent[v])].push_back(std::move(codes[v]));
    }
    return {codes[r]};
  }

 private:
  std::pair<Graph, Vertex> to_graph_impl() const {
    std::vector<Edge> e;
    std::vector<Vertex> stack;
    Vertex next = 0;
    for (char c : code) {
      if (c == '(') {
        Vertex v = next++;
        if (!stack.empty()) e.emplace_back(stack.back(), v);
        stack.push_back(v);
      } else {
        stack.pop_back();
      }
    }
    return {Graph::from_edges(next, e), 0};
  }
};

namespace detail {

// All rooted trees with exactly `size` nodes, as canonical codes in sorted
// order. Built from multisets of smaller subtrees.
inline const std::vector<std::string>& rooted_trees_of_size(std::size_t size) {
  static std::map<std::size_t, std::vector<std::string>> memo;
  if (auto it = memo.find(size); it != memo.end()) return it->second;
  std::set<std::string> out;
  if (size == 1) {
    out.insert("()");
  } else if (size > 1) {
    // Choose children as a nondecreasing sequence of (size, index) keys.
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    auto rec = [&](auto&& self, std::size_t remaining, std::pair<std::size_t, std::size_t> min_key) -> void {
      if (remaining == 0) {
        std::vector<std::string> kids;
        for (auto [s, i] : chosen) kids.push_back(rooted_trees_of_size(s)[i]);
        out.insert(RootedTreeCode::node(std::move(kids)).code);
        return;
      }
      for (std::size_t s = min_key.first; s <= remaining; ++s) {
        const auto& list = rooted_trees_of_size(s);
        for (std::size_t i = (s == min_key.first ? min_key.second : 0); i < list.size(); ++i) {
          chosen.emplace_back(s, i);
          self(self, remaining - s, {s, i});
          chosen.pop_back();
        }
      }
    };
    rec(rec, size - 1, {1, 0});
  }
  return memo[size] = std::vector<std::string>(out.begin(), out.end());
}

}  // namespace detail

// All unlabeled rooted trees with 1..max_size nodes, ordered by size then code.
inline std::vector<RootedTreeCode> enumerate_rooted_trees(std::size_t max_size) {
  std::vector<RootedTreeCode> out;
  for (std::size_t s = 1; s <= max_size; ++s)
    for (const auto& c : detail::rooted_trees_of_size(s)) out.push_back({c});
  return out;
}

// Center(s) of a tree by repeated leaf stripping.
inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.n();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Canonical code of an unrooted tree: minimum rooted code over its centers.
inline RootedTreeCode free_tree_code(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("free_tree_code: input is not a tree");
  std::optional<RootedTreeCode> best;
  for (Vertex c : tree_centers(t)) {
    auto code = RootedTreeCode::of(t, c);
    if (!best || code < *best) best = code;
  }
  return *best;
}

// All unlabeled (free) trees with 1..max_size vertices, ordered by size and
// then canonical code. Vertex 0 of each returned graph is a center.
inline std::vector<Graph> enumerate_free_trees(std::size_t max_size) {
  std::vector<Graph> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::set<RootedTreeCode> seen;
    for (const auto& c : detail::rooted_trees_of_size(s)) {
      RootedTreeCode code{c};
      auto rg = code.to_rooted_graph();
      seen.insert(free_tree_code(rg.graph));
    }
    for (const auto& code : seen) out.push_back(code.to_rooted_graph().graph);
  }
  return out;
}

}  // namespace homvec
