#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homvec/bruteforce.hpp"
#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/numeric.hpp"

namespace homvec {

// Path decomposition in the alternating shape X_1, Y_1, X_2, ..., X_l where
// every X bag has k vertices, Y_i = X_i plus one introduced vertex, and
// X_{i+1} = Y_i minus one forgotten vertex. Bags keep their vertex order:
// the introduced vertex is appended, the forgotten one removed in place.
struct PathDecomposition {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> x;  // l bags of size k
  std::vector<Vertex> introduced;      // l-1 vertices
  std::vector<Vertex> forgotten;       // l-1 vertices

  std::size_t length() const { return x.size(); }

  std::vector<Vertex> y(std::size_t i) const {
    auto b = x[i];
    b.push_back(introduced[i]);
    return b;
  }

  // Empty when valid for f.
  std::vector<std::string> violations(const Graph& f) const {
    std::vector<std::string> out;
    if (x.empty()) return {"no bags"};
    if (introduced.size() + 1 != x.size() || forgotten.size() + 1 != x.size()) return {"bag count mismatch"};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].size() != k) out.push_back("X bag " + std::to_string(i) + " has wrong size");
      std::set<Vertex> s(x[i].begin(), x[i].end());
      if (s.size() != x[i].size()) out.push_back("X bag " + std::to_string(i) + " repeats a vertex");
      for (Vertex v : x[i])
        if (v >= f.n()) return {"vertex out of range"};
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      auto yi = y(i);
      std::set<Vertex> ys(yi.begin(), yi.end());
      if (ys.size() != k + 1) out.push_back("Y bag " + std::to_string(i) + " does not grow by one vertex");
      auto expect = yi;
      auto it = std::find(expect.begin(), expect.end(), forgotten[i]);
      if (it == expect.end()) {
        out.push_back("forgotten vertex not in Y bag " + std::to_string(i));
        continue;
      }
      expect.erase(it);
      if (expect != x[i + 1]) out.push_back("X bag " + std::to_string(i + 1) + " is not Y minus the forgotten vertex");
    }
    if (!out.empty()) return out;
    // Coverage and contiguity over the bag sequence X_1, Y_1, ..., X_l.
    std::vector<std::vector<Vertex>> seq;
    for (std::size_t i = 0; i < x.size(); ++i) {
      seq.push_back(x[i]);
      if (i + 1 < x.size()) seq.push_back(y(i));
    }
    for (Vertex v = 0; v < f.n(); ++v) {
      int first = -1, last = -1, count = 0;
      for (std::size_t i = 0; i < seq.size(); ++i)
        if (std::find(seq[i].begin(), seq[i].end(), v) != seq[i].end()) {
          if (first < 0) first = static_cast<int>(i);
          last = static_cast<int>(i);
          ++count;
        }
      if (first < 0) out.push_back("vertex " + std::to_string(v) + " is in no bag");
      else if (last - first + 1 != count) out.push_back("bags of vertex " + std::to_string(v) + " are not contiguous");
    }
    for (auto [u, v] : f.edges()) {
      bool covered = false;
      for (const auto& b : seq)
        covered = covered || (std::find(b.begin(), b.end(), u) != b.end() && std::find(b.begin(), b.end(), v) != b.end());
      if (!covered) out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    return out;
  }

  void validate(const Graph& f) const {
    auto v = violations(f);
    if (v.empty()) return;
    std::string msg = "invalid path decomposition:";
    for (const auto& s : v) msg += " " + s + ";";
    throw PreconditionError(msg);
  }
};

// Some decomposition of f of the alternating shape with |X| = k, or nullopt
// if none exists. Depth-first search over (current X, introduced set): a
// vertex may be introduced only if none of its neighbors was forgotten, and
// forgotten only once all its neighbors have been introduced.
inline std::optional<PathDecomposition> find_path_decomposition(const Graph& f, std::size_t k) {
  const std::size_t n = f.n();
  if (n > 24) throw CapacityError("path decomposition search vertex count", static_cast<double>(n), 24);
  if (k == 0 || k > n) return std::nullopt;
  using Mask = std::uint32_t;
  std::vector<Mask> nbr(n, 0);
  for (auto [u, v] : f.edges()) {
    nbr[u] |= Mask{1} << v;
    nbr[v] |= Mask{1} << u;
  }
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::set<std::pair<Mask, Mask>> dead;
  PathDecomposition pd;
  pd.k = k;

  std::function<bool(std::vector<Vertex>&, Mask)> extend = [&](std::vector<Vertex>& bag, Mask introduced) -> bool {
    if (introduced == all) return true;
    Mask bag_mask = 0;
    for (Vertex v : bag) bag_mask |= Mask{1} << v;
    if (dead.count({bag_mask, introduced})) return false;
    Mask forgotten = introduced & ~bag_mask;
    for (Vertex u = 0; u < n; ++u) {
      if ((introduced >> u) & 1U) continue;
      if (nbr[u] & forgotten) continue;
      Mask intro2 = introduced | (Mask{1} << u);
      for (std::size_t j = 0; j < bag.size() + 1; ++j) {
        Vertex out = j < bag.size() ? bag[j] : u;
        if ((nbr[out] & ~intro2) != 0) continue;
        std::vector<Vertex> next = bag;
        next.push_back(u);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
        pd.x.push_back(next);
        pd.introduced.push_back(u);
        pd.forgotten.push_back(out);
        if (extend(next, intro2)) return true;
        pd.x.pop_back();
        pd.introduced.pop_back();
        pd.forgotten.pop_back();
      }
    }
    dead.insert({bag_mask, introduced});
    return false;
  };

  // First bag: every k-subset in lexicographic order.
  std::vector<Vertex> first(k);
  std::function<bool(std::size_t, Vertex)> choose = [&](std::size_t i, Vertex from) -> bool {
    if (i == k) {
      Mask m = 0;
      for (Vertex v : first) m |= Mask{1} << v;
      pd.x = {first};
      pd.introduced.clear();
      pd.forgotten.clear();
      std::vector<Vertex> bag = first;
      return extend(bag, m);
    }
    for (Vertex v = from; v < n; ++v) {
      first[i] = v;
      if (choose(i + 1, v + 1)) return true;
    }
    return false;
  };
  if (!choose(0, 0)) return std::nullopt;
  return pd;
}

namespace detail {

// h restricted to the bag is injective and maps edges and non-edges exactly.
inline bool bag_isomorphic(const Graph& f, const Graph& g, const std::vector<Vertex>& bag,
                           const std::vector<Vertex>& img) {
  for (std::size_t a = 0; a < bag.size(); ++a)
    for (std::size_t b = a + 1; b < bag.size(); ++b) {
      if (img[a] == img[b]) return false;
      if (f.has_edge(bag[a], bag[b]) != g.has_edge(img[a], img[b])) return false;
    }
  return true;
}

}  // namespace detail

// Homomorphisms F → G that are isomorphisms on every bag and send the first
// bag X_1 to `pins` position by position. Dynamic programming along the
// path: the state is the image tuple of the current X bag.
inline BigInt biso_conditional(const Graph& f, const PathDecomposition& p, const Graph& g,
                               const std::vector<Vertex>& pins) {
  p.validate(f);
  if (pins.size() != p.k) throw PreconditionError("biso_conditional: pin count differs from |X_1|");
  for (Vertex w : pins)
    if (w >= g.n()) throw PreconditionError("biso_conditional: pin out of range");
  if (!detail::bag_isomorphic(f, g, p.x[0], pins)) return 0;
  std::map<std::vector<Vertex>, BigInt> state{{pins, 1}};
  for (std::size_t i = 0; i + 1 < p.length(); ++i) {
    std::map<std::vector<Vertex>, BigInt> next;
    const auto ybag = p.y(i);
    const auto fpos = static_cast<std::size_t>(std::find(ybag.begin(), ybag.end(), p.forgotten[i]) - ybag.begin());
    for (const auto& [img, cnt] : state) {
      std::vector<Vertex> yimg = img;
      yimg.push_back(0);
      for (Vertex w = 0; w < g.n(); ++w) {
        yimg.back() = w;
        if (!detail::bag_isomorphic(f, g, ybag, yimg)) continue;
        auto ximg = yimg;
        ximg.erase(ximg.begin() + static_cast<std::ptrdiff_t>(fpos));
        next[ximg] += cnt;
      }
    }
    state = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [img, cnt] : state) total += cnt;
  return total;
}

// Bag-wise isomorphic homomorphisms by enumerating every map, optionally
// restricted to maps that send X_1 to `pins`.
inline BigInt biso_bruteforce(const Graph& f, const PathDecomposition& p, const Graph& g,
                              const std::optional<std::vector<Vertex>>& pins = std::nullopt,
                              const BruteforceOptions& opt = {}) {
  p.validate(f);
  detail::check_map_budget(f.n(), g.n(), opt);
  std::vector<std::vector<Vertex>> bags;
  for (std::size_t i = 0; i < p.length(); ++i) {
    bags.push_back(p.x[i]);
    if (i + 1 < p.length()) bags.push_back(p.y(i));
  }
  BigInt count = 0;
  std::vector<Vertex> h(f.n(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == f.n()) {
      for (auto [u, v] : f.edges())
        if (!g.has_edge(h[u], h[v])) return;
      if (pins)
        for (std::size_t j = 0; j < p.k; ++j)
          if (h[p.x[0][j]] != (*pins)[j]) return;
      std::vector<Vertex> img;
      for (const auto& b : bags) {
        img.clear();
        for (Vertex v : b) img.push_back(h[v]);
        if (!detail::bag_isomorphic(f, g, b, img)) return;
      }
      ++count;
      return;
    }
    for (Vertex w = 0; w < g.n(); ++w) {
      h[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace homvec
