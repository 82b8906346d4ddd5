#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homvec/error.hpp"
#include "homvec/graph.hpp"
#include "homvec/graph_io.hpp"
#include "homvec/hom.hpp"
#include "homvec/kwl.hpp"
#include "homvec/linsys.hpp"
#include "homvec/refine.hpp"
#include "homvec/simplex.hpp"
#include "homvec/spectral.hpp"
#include "homvec/suite.hpp"
#include "homvec/trees.hpp"

namespace homvec {

struct CompareOptions {
  bool wl1 = true;
  bool wl2 = true;
  bool fiso = true;
  bool liso = true;
  bool spectral = true;
  bool probes = true;
  std::size_t liso_k = 3;
  std::size_t tree_probe_size = 8;
  std::size_t pattern_size = 5;
  SystemBudget budget{};
  KwlOptions kwl{};
};

// Verdicts of every decider run on one pair. An empty optional means the
// decider was not requested or hit its budget (see `skipped`).
struct VerdictReport {
  std::string g_name, h_name;
  std::size_t g_n = 0, h_n = 0, g_m = 0, h_m = 0;

  std::optional<bool> wl1_distinguished;
  std::optional<bool> wl2_distinguished;
  std::optional<bool> fiso_real;
  std::optional<bool> fiso_nonneg;
  std::size_t liso_k = 0;
  std::optional<bool> liso_real;
  std::optional<bool> liso_nonneg;
  std::optional<bool> cospectral;
  std::optional<bool> fingerprint_equal;

  // Falsifying patterns: hom counts differ on these.
  std::optional<Graph> tree_witness;
  std::optional<Graph> tw2_witness;
  std::pair<BigInt, BigInt> tree_witness_homs, tw2_witness_homs;

  // Feasible systems keep their witness as JSON text, keyed by system name.
  std::map<std::string, std::string> witnesses;
  std::map<std::string, std::string> skipped;

  std::vector<std::string> inconsistencies() const;
  nlohmann::ordered_json to_json() const;
};

// Implications between the verdicts that hold for every pair of graphs.
// A non-empty result means one of the deciders is wrong.
inline std::vector<std::string> VerdictReport::inconsistencies() const {
  std::vector<std::string> out;
  auto check = [&](const std::optional<bool>& a, const std::optional<bool>& b, bool must_equal, const char* what) {
    if (a && b && ((*a == *b) != must_equal)) out.emplace_back(what);
  };
  check(wl1_distinguished, fiso_nonneg, false, "1-WL distinguishes iff Fiso has no nonnegative solution");
  check(fiso_real, fingerprint_equal, true, "Fiso has a real solution iff the walk fingerprints are equal");
  if (liso_k == 2) check(wl1_distinguished, liso_nonneg, false, "1-WL distinguishes iff Liso^2 is nonnegative infeasible");
  if (liso_k == 3) check(wl2_distinguished, liso_nonneg, false, "2-WL distinguishes iff Liso^3 is nonnegative infeasible");
  if (fiso_nonneg && *fiso_nonneg && fiso_real && !*fiso_real) out.emplace_back("Fiso nonnegative feasible but real infeasible");
  if (liso_nonneg && *liso_nonneg && liso_real && !*liso_real) out.emplace_back("Liso nonnegative feasible but real infeasible");
  if (wl1_distinguished && *wl1_distinguished && wl2_distinguished && !*wl2_distinguished)
    out.emplace_back("1-WL distinguishes but 2-WL does not");
  if (wl1_distinguished && !*wl1_distinguished && fingerprint_equal && !*fingerprint_equal)
    out.emplace_back("1-WL equivalent but walk fingerprints differ");
  if (wl2_distinguished && !*wl2_distinguished && cospectral && !*cospectral)
    out.emplace_back("2-WL equivalent but not cospectral");
  if (tree_witness) {
    if (wl1_distinguished && !*wl1_distinguished) out.emplace_back("tree witness on a 1-WL equivalent pair");
    if (fiso_nonneg && *fiso_nonneg) out.emplace_back("tree witness but Fiso nonnegative feasible");
  }
  if (tw2_witness) {
    if (wl2_distinguished && !*wl2_distinguished) out.emplace_back("treewidth-2 witness on a 2-WL equivalent pair");
    if (liso_k == 3 && liso_real && *liso_real) out.emplace_back("pathwidth-2 witness but Liso^3 real feasible");
  }
  return out;
}

inline nlohmann::ordered_json VerdictReport::to_json() const {
  using nlohmann::ordered_json;
  auto tri = [](const std::optional<bool>& v, const char* yes, const char* no) -> ordered_json {
    if (!v) return nullptr;
    return *v ? yes : no;
  };
  ordered_json j;
  j["schema"] = 1;
  j["pair"] = {{"g", {{"name", g_name}, {"n", g_n}, {"m", g_m}}}, {"h", {{"name", h_name}, {"n", h_n}, {"m", h_m}}}};
  ordered_json v;
  v["1wl"] = tri(wl1_distinguished, "distinguished", "equivalent");
  v["2wl"] = tri(wl2_distinguished, "distinguished", "equivalent");
  v["fiso_real"] = tri(fiso_real, "feasible", "infeasible");
  v["fiso_nonneg"] = tri(fiso_nonneg, "feasible", "infeasible");
  const std::string lk = "liso" + std::to_string(liso_k);
  v[lk + "_real"] = tri(liso_real, "feasible", "infeasible");
  v[lk + "_nonneg"] = tri(liso_nonneg, "feasible", "infeasible");
  v["cospectral"] = cospectral ? ordered_json(*cospectral) : ordered_json(nullptr);
  v["walk_fingerprint"] = tri(fingerprint_equal, "equal", "differ");
  j["verdicts"] = v;
  ordered_json w = ordered_json::object();
  if (tree_witness)
    w["tree"] = {{"code", free_tree_code(*tree_witness).code},
                 {"graph6", write_graph6(*tree_witness)},
                 {"hom_g", to_string(tree_witness_homs.first)},
                 {"hom_h", to_string(tree_witness_homs.second)}};
  if (tw2_witness)
    w["pathwidth2_pattern"] = {{"graph6", write_graph6(*tw2_witness)},
                               {"hom_g", to_string(tw2_witness_homs.first)},
                               {"hom_h", to_string(tw2_witness_homs.second)}};
  j["witnesses"] = w;
  j["skipped"] = skipped;
  j["inconsistencies"] = inconsistencies();
  return j;
}

// Runs the requested deciders on (G, H). Deciders that exceed their budget
// are recorded in `skipped` rather than aborting the comparison.
inline VerdictReport compare(const Graph& g, const Graph& h, const CompareOptions& opt = {}) {
  VerdictReport r;
  r.g_n = g.n();
  r.h_n = h.n();
  r.g_m = g.m();
  r.h_m = h.m();
  r.liso_k = opt.liso_k;
  auto guarded = [&](const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const CapacityError& e) {
      r.skipped[name] = e.what();
    }
  };
  if (opt.wl1) r.wl1_distinguished = distinguishes_1wl(g, h);
  if (opt.wl2) guarded("2wl", [&] { r.wl2_distinguished = distinguishes_kwl(g, h, 2, opt.kwl); });
  if (opt.fiso) {
    guarded("fiso", [&] {
      const auto sys = build_fiso(g, h, opt.budget);
      const auto real = solve_real(sys);
      r.fiso_real = real.feasible;
      if (real.feasible) r.witnesses["fiso_real"] = witness_json(sys, real.witness);
      const auto nn = solve_nonneg(sys);
      r.fiso_nonneg = nn.feasible;
      if (nn.feasible) r.witnesses["fiso_nonneg"] = witness_json(sys, nn.witness);
    });
  }
  if (opt.liso) {
    guarded("liso", [&] {
      const auto ps = build_liso(g, h, opt.liso_k, opt.budget);
      const std::string name = "liso" + std::to_string(opt.liso_k);
      const auto real = solve_real(ps.system);
      r.liso_real = real.feasible;
      if (real.feasible) r.witnesses[name + "_real"] = witness_json(ps.system, real.witness);
      if (!real.feasible) {
        r.liso_nonneg = false;
        return;
      }
      const auto nn = solve_nonneg(ps.system);
      r.liso_nonneg = nn.feasible;
      if (nn.feasible) r.witnesses[name + "_nonneg"] = witness_json(ps.system, nn.witness);
    });
  }
  if (opt.spectral) {
    r.cospectral = cospectral(g, h);
    r.fingerprint_equal = walk_fingerprint(g) == walk_fingerprint(h);
  }
  if (opt.probes) {
    for (const auto& t : enumerate_free_trees(opt.tree_probe_size)) {
      BigInt a = hom_tree(t, g), b = hom_tree(t, h);
      if (a != b) {
        r.tree_witness = t;
        r.tree_witness_homs = {a, b};
        break;
      }
    }
    guarded("pathwidth2_probe", [&] {
      for (const auto& p : pathwidth2_patterns(opt.pattern_size)) {
        BigInt a = hom_treewidth(p.graph, p.decomposition, g), b = hom_treewidth(p.graph, p.decomposition, h);
        if (a != b) {
          r.tw2_witness = p.graph;
          r.tw2_witness_homs = {a, b};
          break;
        }
      }
    });
  }
  return r;
}

inline nlohmann::ordered_json suite_json(const SuiteReport& s) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = s.name;
  j["pairs"] = s.pairs;
  j["counts"] = s.counts;
  auto v = nlohmann::ordered_json::array();
  for (const auto& x : s.violations)
    v.push_back({{"g", x.g6_g}, {"h", x.g6_h}, {"n", x.n}, {"m", x.m}, {"what", x.what}});
  j["violations"] = v;
  return j;
}

}  // namespace homvec
