#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "homvec/graph.hpp"

namespace homvec {

using Color = std::uint32_t;

// A vertex coloring together with its class lists. `round` is the refinement
// round that produced it.
struct Coloring {
  std::vector<Color> color;
  std::vector<std::vector<Vertex>> classes;
  std::size_t round = 0;

  std::size_t num_classes() const { return classes.size(); }

  static Coloring from_colors(std::vector<Color> colors, std::size_t round) {
    Coloring c;
    Color max_color = 0;
    for (Color x : colors) max_color = std::max(max_color, x);
    c.classes.resize(colors.empty() ? 0 : max_color + 1);
    for (Vertex v = 0; v < colors.size(); ++v) c.classes[colors[v]].push_back(v);
    c.color = std::move(colors);
    c.round = round;
    return c;
  }
};

// Partition of the vertex set as a sorted list of sorted classes; lets two
// colorings with unrelated color ids be compared.
inline std::vector<std::vector<Vertex>> partition_of(const Coloring& c) {
  auto p = c.classes;
  std::erase_if(p, [](const auto& cls) { return cls.empty(); });
  for (auto& cls : p) std::sort(cls.begin(), cls.end());
  std::sort(p.begin(), p.end());
  return p;
}

// Color refinement run round by round. Round i+1 recolors each vertex by
// (round-i color, sorted multiset of neighbor round-i colors); new ids are
// ranks of these signatures, so ids are canonical for the vertex-labeled
// input. Returns C_0 .. C_s with C_s the first stable coloring.
inline std::vector<Coloring> refinement_rounds(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Coloring> rounds;
  rounds.push_back(Coloring::from_colors(std::vector<Color>(n, 0), 0));
  if (n == 0) return rounds;

  using Signature = std::pair<Color, std::vector<Color>>;
  while (true) {
    const auto& cur = rounds.back().color;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = cur[v];
      auto& ms = sig[v].second;
      ms.reserve(g.degree(v));
      for (Vertex u : g.neighbors(v)) ms.push_back(cur[u]);
      std::sort(ms.begin(), ms.end());
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    std::vector<Color> next(n);
    Color id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    const std::size_t before = rounds.back().num_classes();
    if (static_cast<std::size_t>(id) + 1 == before) break;
    rounds.push_back(Coloring::from_colors(std::move(next), rounds.size()));
  }
  return rounds;
}

// Coarsest stable coloring reached from the uniform coloring, with canonical
// per-round ids and the index of the first stable round.
inline Coloring refine_stable(const Graph& g) { return refinement_rounds(g).back(); }

// Coarsest equitable partition by worklist refinement: a class is split by
// the number of neighbors its vertices have in a splitter class, and after a
// split all parts but the largest become splitters. Runs in O((n+m) log n)
// splitter work. Classes are numbered by their smallest vertex.
inline Coloring stable_partition(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return Coloring{};

  std::vector<Vertex> elems(n);
  std::iota(elems.begin(), elems.end(), Vertex{0});
  std::vector<std::uint32_t> pos(n);
  std::iota(pos.begin(), pos.end(), 0U);
  std::vector<Color> cls(n, 0);
  std::vector<std::uint32_t> begin{0}, end{static_cast<std::uint32_t>(n)};
  std::vector<char> queued{1};
  std::vector<Color> worklist{0};

  std::vector<std::uint32_t> count(n, 0);
  std::vector<Vertex> touched;
  std::vector<Vertex> splitter;
  std::vector<Color> touched_classes;
  std::vector<std::vector<Vertex>> bucket;  // touched vertices per class
  bucket.reserve(n);
  bucket.emplace_back();

  while (!worklist.empty()) {
    const Color s = worklist.back();
    worklist.pop_back();
    queued[s] = 0;
    splitter.assign(elems.begin() + begin[s], elems.begin() + end[s]);

    for (Vertex v : splitter)
      for (Vertex u : g.neighbors(v)) {
        if (count[u]++ == 0) touched.push_back(u);
      }
    for (Vertex u : touched) {
      auto& b = bucket[cls[u]];
      if (b.empty()) touched_classes.push_back(cls[u]);
      b.push_back(u);
    }

    for (Color c : touched_classes) {
      auto& b = bucket[c];
      const std::uint32_t size = end[c] - begin[c];
      bool uniform = b.size() == size;
      if (uniform)
        for (Vertex u : b) uniform = uniform && count[u] == count[b.front()];
      if (uniform) {
        b.clear();
        continue;
      }
      std::sort(b.begin(), b.end(), [&](Vertex x, Vertex y) { return count[x] < count[y]; });
      // Move touched vertices to the tail of the class range, grouped by count.
      std::uint32_t tail = end[c];
      for (auto it = b.rbegin(); it != b.rend(); ++it) {
        Vertex u = *it;
        --tail;
        Vertex w = elems[tail];
        std::swap(elems[pos[u]], elems[tail]);
        std::swap(pos[u], pos[w]);
      }
      // Groups: [begin, tail) untouched (count 0), then runs of equal count.
      std::vector<std::pair<std::uint32_t, std::uint32_t>> parts;
      if (tail > begin[c]) parts.emplace_back(begin[c], tail);
      std::uint32_t run = tail;
      for (std::uint32_t i = tail; i < end[c]; ++i) {
        if (i + 1 == end[c] || count[elems[i + 1]] != count[elems[i]]) {
          parts.emplace_back(run, i + 1);
          run = i + 1;
        }
      }
      b.clear();
      if (parts.size() == 1) continue;

      std::size_t largest = 0;
      for (std::size_t p = 1; p < parts.size(); ++p)
        if (parts[p].second - parts[p].first > parts[largest].second - parts[largest].first) largest = p;
      const bool was_queued = queued[c];
      for (std::size_t p = 0; p < parts.size(); ++p) {
        Color id = c;
        if (p > 0) {
          id = static_cast<Color>(begin.size());
          begin.push_back(parts[p].first);
          end.push_back(parts[p].second);
          queued.push_back(0);
          bucket.emplace_back();
          for (std::uint32_t i = parts[p].first; i < parts[p].second; ++i) cls[elems[i]] = id;
        } else {
          begin[c] = parts[0].first;
          end[c] = parts[0].second;
        }
        if ((was_queued || p != largest) && !queued[id]) {
          queued[id] = 1;
          worklist.push_back(id);
        }
      }
    }
    for (Vertex u : touched) count[u] = 0;
    touched.clear();
    touched_classes.clear();
  }

  // Renumber classes by smallest member.
  std::vector<Color> first_seen(begin.size(), static_cast<Color>(-1));
  std::vector<Color> out(n);
  Color next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (first_seen[cls[v]] == static_cast<Color>(-1)) first_seen[cls[v]] = next++;
    out[v] = first_seen[cls[v]];
  }
  return Coloring::from_colors(std::move(out), 0);
}

// Refinement of G ⊎ H with a shared color space. Vertices 0..n_g-1 come
// from G, the rest from H.
struct JointColoring {
  Coloring coloring;
  std::size_t n_g = 0;
  std::size_t n_h = 0;

  bool from_g(Vertex v) const { return v < n_g; }

  // Per color: (#vertices from G, #vertices from H).
  std::vector<std::pair<std::size_t, std::size_t>> side_counts() const {
    std::vector<std::pair<std::size_t, std::size_t>> out(coloring.num_classes());
    for (Vertex v = 0; v < coloring.color.size(); ++v) {
      auto& c = out[coloring.color[v]];
      (from_g(v) ? c.first : c.second)++;
    }
    return out;
  }

  // True iff the color multisets of the two sides differ.
  bool distinguishes() const {
    if (n_g != n_h) return true;
    for (auto [a, b] : side_counts())
      if (a != b) return true;
    return false;
  }

  // The partition this coloring induces on V(G) (or V(H), relabeled from 0).
  Coloring restrict_to_g() const { return restrict(0, n_g); }
  Coloring restrict_to_h() const { return restrict(n_g, n_g + n_h); }

 private:
  Coloring restrict(std::size_t lo, std::size_t hi) const {
    std::map<Color, Color> renum;
    std::vector<Color> out;
    for (std::size_t v = lo; v < hi; ++v) {
      auto [it, _] = renum.try_emplace(coloring.color[v], static_cast<Color>(renum.size()));
      out.push_back(it->second);
    }
    return Coloring::from_colors(std::move(out), coloring.round);
  }
};

enum class RefineEngine { rounds, smaller_half };

inline JointColoring joint_refinement(const Graph& g, const Graph& h,
                                      RefineEngine engine = RefineEngine::smaller_half) {
  Graph u = disjoint_union(g, h);
  JointColoring jc;
  jc.coloring = engine == RefineEngine::rounds ? refine_stable(u) : stable_partition(u);
  jc.n_g = g.n();
  jc.n_h = h.n();
  return jc;
}

// Whether color refinement distinguishes G and H: some round's color
// multisets differ. Decided on the joint stable coloring, which differs
// between the sides iff some earlier round already did.
inline bool distinguishes_1wl(const Graph& g, const Graph& h,
                              RefineEngine engine = RefineEngine::smaller_half) {
  if (g.n() != h.n() || g.m() != h.m()) return true;
  return joint_refinement(g, h, engine).distinguishes();
}

}  // namespace homvec
