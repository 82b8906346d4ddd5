#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/refine.hpp"

namespace homvec {

// k×k matrix over {0,1,2}: 2 where the tuple repeats a vertex (always on the
// diagonal), 1 for an edge, 0 otherwise. Equal atomic types on two tuples
// means the tuples span a partial isomorphism.
struct AtomicType {
  std::size_t k = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
  bool operator==(const AtomicType&) const = default;

  // Base-3 code over the strict upper triangle; the diagonal is always 2.
  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) c = c * 3 + entries[i * k + j];
    return c;
  }
};

inline AtomicType atp(const Graph& g, std::span<const Vertex> tuple) {
  AtomicType a;
  a.k = tuple.size();
  a.entries.assign(a.k * a.k, 0);
  for (std::size_t i = 0; i < a.k; ++i) {
    if (tuple[i] >= g.n()) throw PreconditionError("atp: vertex out of range");
    for (std::size_t j = 0; j < a.k; ++j) {
      if (tuple[i] == tuple[j]) a.entries[i * a.k + j] = 2;
      else if (g.has_edge(tuple[i], tuple[j])) a.entries[i * a.k + j] = 1;
    }
  }
  return a;
}

// Coloring of V^k; tuple (v_1..v_k) is stored at index Σ v_i n^{k-i}.
struct TupleColoring {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Color> color;
  std::size_t round = 0;

  std::size_t num_colors() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  std::vector<Vertex> tuple(std::size_t index) const {
    std::vector<Vertex> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<Vertex>(index % n);
      index /= n;
    }
    return t;
  }
};

struct KwlOptions {
  // Largest admissible n^k, summed over all graphs refined jointly.
  double max_tuples = 1 << 22;
};

namespace detail {

inline std::size_t checked_tuple_count(std::size_t n, std::size_t k, double budget) {
  if (k == 0) throw PreconditionError("k-WL needs k >= 1");
  double count = std::pow(static_cast<double>(n), static_cast<double>(k));
  if (count > budget) throw CapacityError("k-WL tuple count n^k", count, budget);
  return static_cast<std::size_t>(std::llround(count));
}

// One block of the joint refinement: a graph and where its tuples start in
// the shared color array.
struct KwlBlock {
  const Graph* g;
  std::size_t offset;
  std::size_t count;
};

// Joint k-WL over several graphs with one color dictionary. Returns the
// stable colors and the round index at which they became stable, and
// optionally every intermediate round.
inline std::pair<std::vector<Color>, std::size_t> kwl_joint(
    std::span<const Graph* const> graphs, std::size_t k, const KwlOptions& opt,
    std::vector<std::vector<Color>>* history = nullptr) {
  std::vector<KwlBlock> blocks;
  std::size_t total = 0;
  double budget_left = opt.max_tuples;
  for (const Graph* g : graphs) {
    std::size_t c = checked_tuple_count(g->n(), k, budget_left);
    budget_left -= static_cast<double>(c);
    blocks.push_back({g, total, c});
    total += c;
  }

  // Initial coloring: rank of atomic type code.
  std::vector<Color> color(total);
  {
    std::vector<std::uint64_t> code(total);
    std::vector<Vertex> tup(k);
    for (const auto& b : blocks) {
      const std::size_t n = b.g->n();
      for (std::size_t idx = 0; idx < b.count; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          tup[i] = static_cast<Vertex>(rest % n);
          rest /= n;
        }
        code[b.offset + idx] = atp(*b.g, tup).code();
      }
    }
    std::vector<std::uint64_t> sorted = code;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < total; ++i)
      color[i] = static_cast<Color>(std::lower_bound(sorted.begin(), sorted.end(), code[i]) - sorted.begin());
  }
  if (history) history->push_back(color);

  auto count_colors = [](const std::vector<Color>& c) {
    return c.empty() ? std::size_t{0} : static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
  };

  std::size_t round = 0;
  std::vector<std::uint32_t> entry(k + 1);
  std::vector<Vertex> tup(k), sub(k + 1);
  while (true) {
    // Signature of a tuple: (old color, sorted list of per-w entries), each
    // entry (atp(v̄,w), C(v̄[1<-w]), ..., C(v̄[k<-w])) flattened.
    std::vector<std::vector<std::uint32_t>> sig(total);
    for (const auto& b : blocks) {
      const std::size_t n = b.g->n();
      std::vector<std::size_t> place(k, 1);
      for (std::size_t i = k - 1; i-- > 0;) place[i] = place[i + 1] * n;
      for (std::size_t idx = 0; idx < b.count; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          tup[i] = static_cast<Vertex>(rest % n);
          rest /= n;
        }
        std::vector<std::vector<std::uint32_t>> entries;
        entries.reserve(n);
        for (Vertex w = 0; w < n; ++w) {
          std::copy(tup.begin(), tup.end(), sub.begin());
          sub[k] = w;
          entry[0] = static_cast<std::uint32_t>(atp(*b.g, sub).code());
          for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = idx - tup[i] * place[i] + w * place[i];
            entry[i + 1] = color[b.offset + j];
          }
          entries.push_back(entry);
        }
        std::sort(entries.begin(), entries.end());
        auto& s = sig[b.offset + idx];
        s.reserve(1 + n * (k + 1));
        s.push_back(color[b.offset + idx]);
        for (const auto& e : entries) s.insert(s.end(), e.begin(), e.end());
      }
    }
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::vector<Color> next(total);
    Color id = 0;
    for (std::size_t i = 0; i < total; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    if (total == 0 || static_cast<std::size_t>(id) + 1 == count_colors(color)) break;
    color = std::move(next);
    ++round;
    if (history) history->push_back(color);
  }
  return {std::move(color), round};
}

}  // namespace detail

// Stable k-WL coloring of V(G)^k.
inline TupleColoring kwl_stable(const Graph& g, std::size_t k, const KwlOptions& opt = {}) {
  if (g.n() == 0) throw PreconditionError("k-WL needs n >= 1");
  const Graph* gs[] = {&g};
  auto [color, round] = detail::kwl_joint(gs, k, opt);
  return TupleColoring{g.n(), k, std::move(color), round};
}

// Every round C_0 .. C_s of k-WL on G.
inline std::vector<TupleColoring> kwl_rounds(const Graph& g, std::size_t k, const KwlOptions& opt = {}) {
  if (g.n() == 0) throw PreconditionError("k-WL needs n >= 1");
  const Graph* gs[] = {&g};
  std::vector<std::vector<Color>> hist;
  detail::kwl_joint(gs, k, opt, &hist);
  std::vector<TupleColoring> out;
  for (std::size_t r = 0; r < hist.size(); ++r) out.push_back(TupleColoring{g.n(), k, std::move(hist[r]), r});
  return out;
}

// Stable joint coloring over V(G)^k ⊎ V(H)^k; the first n_G^k entries belong
// to G.
struct JointTupleColoring {
  TupleColoring g_part;
  TupleColoring h_part;
  std::size_t rounds = 0;

  // Sorted color multisets differ.
  bool distinguishes() const {
    if (g_part.color.size() != h_part.color.size()) return true;
    auto a = g_part.color, b = h_part.color;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a != b;
  }
};

inline JointTupleColoring kwl_joint(const Graph& g, const Graph& h, std::size_t k, const KwlOptions& opt = {}) {
  const Graph* gs[] = {&g, &h};
  auto [color, round] = detail::kwl_joint(gs, k, opt);
  const std::size_t ng = detail::checked_tuple_count(g.n(), k, opt.max_tuples);
  JointTupleColoring jc;
  jc.g_part = TupleColoring{g.n(), k, std::vector<Color>(color.begin(), color.begin() + ng), round};
  jc.h_part = TupleColoring{h.n(), k, std::vector<Color>(color.begin() + ng, color.end()), round};
  jc.rounds = round;
  return jc;
}

inline bool distinguishes_kwl(const Graph& g, const Graph& h, std::size_t k, const KwlOptions& opt = {}) {
  if (k == 0) throw PreconditionError("k-WL needs k >= 1");
  if (g.n() != h.n()) return true;
  if (g.n() == 0) return false;
  return kwl_joint(g, h, k, opt).distinguishes();
}

}  // namespace homvec
