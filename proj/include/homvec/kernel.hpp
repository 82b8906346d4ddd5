#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/hom.hpp"
#include "homvec/numeric.hpp"
#include "homvec/trees.hpp"

namespace homvec {

enum class PatternFamily { trees, paths, cycles };

inline PatternFamily parse_family(const std::string& s) {
  if (s == "trees") return PatternFamily::trees;
  if (s == "paths") return PatternFamily::paths;
  if (s == "cycles") return PatternFamily::cycles;
  throw PreconditionError("unknown pattern family '" + s + "' (expected trees, paths or cycles)");
}

// Patterns of the family with exactly k vertices. Cycles: F_1 = {K1}
// (the length-0 cycle), F_2 = ∅, F_k = {C_k} for k ≥ 3.
inline std::vector<Graph> family_members(PatternFamily fam, std::size_t k) {
  switch (fam) {
    case PatternFamily::trees: {
      std::vector<Graph> out;
      for (auto& t : enumerate_free_trees(k))
        if (t.n() == k) out.push_back(std::move(t));
      return out;
    }
    case PatternFamily::paths: return {path(k - 1)};
    case PatternFamily::cycles:
      if (k == 1) return {cycle(0)};
      if (k == 2) return {};
      return {cycle(k)};
  }
  return {};
}

// hom(F, G) for a member of the family.
inline BigInt family_hom(PatternFamily fam, const Graph& f, const Graph& g) {
  if (fam == PatternFamily::cycles && f.n() >= 3) return closed_walk_count(g, f.n());
  if (fam == PatternFamily::paths) return walk_count(g, f.n() - 1);
  return hom_tree(f, g);
}

struct KernelOptions {
  std::size_t max_size = 8;
  std::size_t max_size_budget = 14;
};

// Truncated homomorphism kernel
//   K(G,H) = Σ_{k ≤ bound, F_k ≠ ∅} 1/(k^k |F_k|) Σ_{F ∈ F_k} hom(F,G)·hom(F,H)
// for every pair of the corpus, as exact rationals.
inline std::vector<std::vector<Rational>> kernel_matrix(const std::vector<Graph>& corpus, PatternFamily fam,
                                                        const KernelOptions& opt = {}) {
  if (opt.max_size > opt.max_size_budget)
    throw CapacityError("kernel pattern size bound", static_cast<double>(opt.max_size),
                        static_cast<double>(opt.max_size_budget));
  const std::size_t c = corpus.size();
  std::vector<std::vector<Rational>> k(c, std::vector<Rational>(c, 0));
  for (std::size_t size = 1; size <= opt.max_size; ++size) {
    auto members = family_members(fam, size);
    if (members.empty()) continue;
    const Rational weight = Rational(1) / Rational(pow_int(static_cast<long>(size), size) * members.size());
    for (const auto& f : members) {
      std::vector<BigInt> hv;
      hv.reserve(c);
      for (const auto& g : corpus) hv.push_back(family_hom(fam, f, g));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) k[i][j] += weight * Rational(hv[i] * hv[j]);
    }
  }
  for (auto& row : k)
    for (auto& x : row) x.canonicalize();
  return k;
}

// Kernel-induced squared distance K(G,G) − 2K(G,H) + K(H,H).
inline Rational kernel_distance2(const std::vector<std::vector<Rational>>& k, std::size_t i, std::size_t j) {
  Rational d = k[i][i] - 2 * k[i][j] + k[j][j];
  d.canonicalize();
  return d;
}

}  // namespace homvec
