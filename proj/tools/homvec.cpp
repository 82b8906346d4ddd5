// homvec: command-line front end for the homvec library.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homvec/homvec.hpp"

#ifndef HOMVEC_DATA_DIR
#define HOMVEC_DATA_DIR "data"
#endif

using namespace homvec;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerdict = 1, kInput = 2, kCapacity = 3, kSuite = 4 };

struct Globals {
  std::string format = "text";
  double budget_vars = 2e5;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool exit_code_verdict = false;

  bool as_json() const { return format == "json"; }
  SystemBudget budget() const { return SystemBudget{budget_vars}; }
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.as_json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

const char* feasible_word(bool f) { return f ? "feasible" : "infeasible"; }

json string_array(const std::vector<BigInt>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json string_array(const std::vector<Rational>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> strings(const std::vector<BigInt>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return s;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return s;
}

// --- compare -----------------------------------------------------------------

struct CompareArgs {
  std::string g, h;
  bool all = false, wl1 = false, wl2 = false, fiso = false, liso = false, spectral = false, probes = false;
  std::size_t liso_k = 3;
  std::string witness_dir;
};

int cmd_compare(const Globals& gl, const CompareArgs& a) {
  CompareOptions opt;
  const bool any = a.wl1 || a.wl2 || a.fiso || a.liso || a.spectral || a.probes;
  if (a.all || !any) {
    opt.wl1 = opt.wl2 = opt.fiso = opt.liso = opt.spectral = opt.probes = true;
  } else {
    opt.wl1 = a.wl1;
    opt.wl2 = a.wl2;
    opt.fiso = a.fiso;
    opt.liso = a.liso;
    opt.spectral = a.spectral;
    opt.probes = a.probes;
  }
  opt.liso_k = a.liso_k;
  opt.budget = gl.budget();
  const Graph g = load_graph(a.g), h = load_graph(a.h);
  VerdictReport r = compare(g, h, opt);
  r.g_name = a.g;
  r.h_name = a.h;
  json j = r.to_json();
  if (!a.witness_dir.empty()) {
    json paths = json::object();
    for (const auto& [name, text] : r.witnesses) {
      const std::string path = a.witness_dir + "/" + name + ".json";
      std::ofstream(path) << text << "\n";
      paths[name] = path;
    }
    j["witness_files"] = paths;
  }
  std::ostringstream t;
  for (const auto& [k, v] : j["verdicts"].items())
    t << k << ": " << (v.is_null() ? "not run" : v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.get<std::string>())
      << "\n";
  if (r.tree_witness)
    t << "tree witness: " << free_tree_code(*r.tree_witness).code << " (hom " << r.tree_witness_homs.first << " vs "
      << r.tree_witness_homs.second << ")\n";
  if (r.tw2_witness)
    t << "pathwidth-2 witness: " << write_graph6(*r.tw2_witness) << " (hom " << r.tw2_witness_homs.first << " vs "
      << r.tw2_witness_homs.second << ")\n";
  for (const auto& [k, why] : r.skipped) t << "skipped " << k << ": " << why << "\n";
  const auto bad = r.inconsistencies();
  for (const auto& b : bad) t << "INCONSISTENT: " << b << "\n";
  emit(gl, j, t.str());
  if (!bad.empty()) return kSuite;
  const bool distinguished = (r.wl1_distinguished && *r.wl1_distinguished) ||
                             (r.wl2_distinguished && *r.wl2_distinguished) || (r.fiso_real && !*r.fiso_real) ||
                             (r.fiso_nonneg && !*r.fiso_nonneg) || (r.liso_real && !*r.liso_real) ||
                             (r.liso_nonneg && !*r.liso_nonneg) || (r.cospectral && !*r.cospectral) ||
                             (r.fingerprint_equal && !*r.fingerprint_equal) || r.tree_witness || r.tw2_witness;
  return gl.exit_code_verdict && distinguished ? kVerdict : kOk;
}

// --- hom ---------------------------------------------------------------------

int cmd_hom(const Globals& gl, const std::string& fpath, const std::string& gpath, const std::string& method) {
  const Graph f = load_graph(fpath), g = load_graph(gpath);
  BigInt count;
  std::string used = method;
  if (method == "auto") {
    if (is_tree(f)) used = "tree";
    else if (f.n() <= 20) used = "treewidth";
    else used = "bruteforce";
  }
  if (used == "tree") count = hom_tree(f, g);
  else if (used == "treewidth") count = hom_treewidth(f, pathwidth(f).decomposition, g);
  else if (used == "bruteforce") count = hom_bruteforce(f, g);
  else throw PreconditionError("unknown method '" + method + "'");
  json j{{"schema", 1}, {"method", used}, {"hom", to_string(count)}};
  emit(gl, j, to_string(count) + "\n");
  return kOk;
}

// --- refine / kwl ------------------------------------------------------------

int cmd_refine(const Globals& gl, const std::string& gpath, const std::string& hpath, bool show_rounds) {
  const Graph g = load_graph(gpath);
  if (!hpath.empty()) {
    const Graph h = load_graph(hpath);
    const auto jr = joint_refinement(g, h);
    const bool d = jr.distinguishes();
    json j{{"schema", 1}, {"distinguishes", d}, {"classes", jr.coloring.num_classes()}};
    emit(gl, j, std::string(d ? "distinguished" : "equivalent") + "\n");
    return gl.exit_code_verdict && d ? kVerdict : kOk;
  }
  const auto rounds = refinement_rounds(g);
  json j{{"schema", 1}, {"rounds", rounds.size() - 1}, {"colors", rounds.back().color}};
  if (show_rounds) {
    auto all = json::array();
    for (const auto& r : rounds) all.push_back(r.color);
    j["history"] = all;
  }
  std::ostringstream t;
  t << "stable after " << rounds.size() - 1 << " round(s), " << rounds.back().num_classes() << " class(es)\n";
  for (std::size_t c = 0; c < rounds.back().classes.size(); ++c) {
    t << "  color " << c << ":";
    for (Vertex v : rounds.back().classes[c]) t << " " << v;
    t << "\n";
  }
  emit(gl, j, t.str());
  return kOk;
}

int cmd_kwl(const Globals& gl, const std::string& gpath, const std::string& hpath, std::size_t k) {
  const Graph g = load_graph(gpath);
  if (!hpath.empty()) {
    const Graph h = load_graph(hpath);
    const bool d = distinguishes_kwl(g, h, k);
    json j{{"schema", 1}, {"k", k}, {"distinguishes", d}};
    emit(gl, j, std::to_string(k) + "-WL: " + (d ? "distinguished" : "equivalent") + "\n");
    return gl.exit_code_verdict && d ? kVerdict : kOk;
  }
  const auto c = kwl_stable(g, k);
  json j{{"schema", 1}, {"k", k}, {"rounds", c.round}, {"num_colors", c.num_colors()}, {"colors", c.color}};
  emit(gl, j,
       std::to_string(k) + "-WL stable after " + std::to_string(c.round) + " round(s), " +
           std::to_string(c.num_colors()) + " tuple color(s)\n");
  return kOk;
}

// --- lp ----------------------------------------------------------------------

struct LpArgs {
  std::string system, mode, g, h, export_path, witness_path;
  std::size_t k = 2;
  bool force_exact = false;
};

int cmd_lp(const Globals& gl, const LpArgs& a) {
  const Graph g = load_graph(a.g), h = load_graph(a.h);
  RationalLinearSystem sys;
  if (a.system == "fiso") sys = build_fiso(g, h, gl.budget());
  else if (a.system == "liso") sys = build_liso(g, h, a.k, gl.budget()).system;
  else if (a.system == "fkhalf") sys = build_fiso_khalf(g, h, a.k, gl.budget()).system;
  else throw PreconditionError("unknown system '" + a.system + "'");
  const bool nonneg = a.mode == "nonneg";
  if (!nonneg && a.mode != "real") throw PreconditionError("unknown mode '" + a.mode + "'");
  if (!a.export_path.empty()) std::ofstream(a.export_path) << sys.to_lp(nonneg);
  const Feasibility f = nonneg ? solve_nonneg(sys, NonnegOptions{a.force_exact}) : solve_real(sys);
  json j{{"schema", 1},
         {"system", a.system},
         {"mode", a.mode},
         {"variables", sys.num_vars()},
         {"rows", sys.num_rows()},
         {"rank", f.rank},
         {"feasible", f.feasible},
         {"certificate", to_string(f.certificate)},
         {"method", f.method}};
  if (a.system != "fiso") j["k"] = a.k;
  if (f.feasible && !a.witness_path.empty()) {
    std::ofstream(a.witness_path) << witness_json(sys, f.witness) << "\n";
    j["witness_file"] = a.witness_path;
  }
  std::ostringstream t;
  t << a.system << (a.system == "fiso" ? "" : "^" + std::to_string(a.k)) << " " << a.mode << ": "
    << feasible_word(f.feasible) << " (" << to_string(f.certificate) << ", " << f.method << "; " << sys.num_vars()
    << " variables, " << sys.num_rows() << " rows, rank " << f.rank << ")\n";
  emit(gl, j, t.str());
  return gl.exit_code_verdict && !f.feasible ? kVerdict : kOk;
}

// --- spectral / fingerprint --------------------------------------------------

int cmd_spectral(const Globals& gl, const std::string& gpath, const std::string& hpath) {
  const Graph g = load_graph(gpath);
  const auto cp = char_poly(g);
  const auto e = eigen_float(g);
  json j{{"schema", 1}, {"char_poly", string_array(cp.coeffs)}, {"eigenvalues", e.values}, {"max_residual", e.max_residual}};
  std::ostringstream t;
  t << "char_poly: [" << join(strings(cp.coeffs), ", ") << "]\neigenvalues:";
  for (double x : e.values) t << " " << x;
  t << "\n";
  int rc = kOk;
  if (!hpath.empty()) {
    const bool cs = cospectral(g, load_graph(hpath));
    j["cospectral"] = cs;
    t << "cospectral: " << (cs ? "true" : "false") << "\n";
    if (gl.exit_code_verdict && !cs) rc = kVerdict;
  }
  emit(gl, j, t.str());
  return rc;
}

int cmd_fingerprint(const Globals& gl, const std::string& gpath, const std::string& hpath) {
  const auto fp = walk_fingerprint(load_graph(gpath));
  json j{{"schema", 1}, {"recurrence", string_array(fp.recurrence)}, {"initial", string_array(fp.initial)}};
  std::string t = "recurrence: [" + join(strings(fp.recurrence), ", ") + "]\ninitial: [" +
                  join(strings(fp.initial), ", ") + "]\n";
  int rc = kOk;
  if (!hpath.empty()) {
    const bool eq = fp == walk_fingerprint(load_graph(hpath));
    j["equal"] = eq;
    t += std::string("equal: ") + (eq ? "true" : "false") + "\n";
    if (gl.exit_code_verdict && !eq) rc = kVerdict;
  }
  emit(gl, j, t);
  return rc;
}

// --- verify-theorems ---------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> theorems{"1", "2", "3", "4"};
  std::size_t max_n = 6;
  std::size_t max_n_high = 5;  // suite 3 at k ≥ 2 and suite 4
  std::vector<std::size_t> ks{1, 2};
  std::size_t tree_probe_size = 8;
  std::size_t pattern_size = 5;
  std::size_t self_pairs = 5;
  std::string corpus_dir = std::string(HOMVEC_DATA_DIR) + "/graphs";
  bool timings = false;
};

int cmd_verify(const Globals& gl, const VerifyArgs& a) {
  const std::size_t top = std::max(a.max_n, a.max_n_high);
  const Corpus corpus = load_corpus(a.corpus_dir, top);
  SuiteConfig base;
  base.tree_probe_size = a.tree_probe_size;
  base.pattern_size = a.pattern_size;
  base.jobs = gl.jobs;
  base.seed = gl.seed;
  base.budget = gl.budget();
  std::vector<SuiteReport> reports;
  for (const auto& th : a.theorems) {
    SuiteConfig cfg = base;
    cfg.max_n = a.max_n;
    if (th == "1") reports.push_back(suite_theorem1(corpus, cfg));
    else if (th == "2") reports.push_back(suite_theorem2(corpus, cfg));
    else if (th == "3") {
      for (std::size_t k : a.ks) {
        cfg.max_n = k >= 2 ? a.max_n_high : a.max_n;
        reports.push_back(suite_theorem3(corpus, cfg, k));
      }
    } else if (th == "4") {
      cfg.max_n = a.max_n_high;
      cfg.self_pair_max_n = a.self_pairs;
      reports.push_back(suite_theorem4(corpus, cfg));
    } else {
      throw PreconditionError("unknown theorem '" + th + "' (expected 1, 2, 3 or 4)");
    }
  }
  json j{{"schema", 1}};
  auto arr = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& r : reports) {
    json s = suite_json(r);
    if (a.timings) s["seconds"] = r.seconds;
    arr.push_back(s);
    ok = ok && r.ok();
    t << r.name << ": " << r.pairs << " pairs, " << r.violations.size() << " violation(s), " << r.seconds << " s\n";
    for (const auto& [k, v] : r.counts) t << "  " << k << " = " << v << "\n";
    if (!r.ok()) {
      const auto& v = r.violations.front();
      t << "  minimal counterexample: " << v.g6_g << " " << v.g6_h << " (n=" << v.n << ", m=" << v.m
        << "): " << v.what << "\n";
    }
  }
  j["suites"] = arr;
  j["ok"] = ok;
  emit(gl, j, t.str());
  return ok ? kOk : kSuite;
}

// --- bench -------------------------------------------------------------------

int cmd_bench(const Globals& gl, const std::vector<std::size_t>& sizes, double degree, std::size_t repeats) {
  const auto rows = bench_refine(sizes, degree, gl.seed, repeats);
  auto arr = json::array();
  std::ostringstream t;
  t << "n\tm\tseconds\tratio\tdistinguished\n";
  for (const auto& r : rows) {
    json row{{"n", r.n}, {"m", r.m}, {"seconds", r.seconds}, {"ratio", nullptr}, {"distinguished", r.distinguished}};
    if (r.ratio) row["ratio"] = *r.ratio;
    arr.push_back(row);
    t << r.n << "\t" << r.m << "\t" << r.seconds << "\t" << (r.ratio ? std::to_string(*r.ratio) : "-") << "\t"
      << (r.distinguished ? "yes" : "no") << "\n";
  }
  emit(gl, json{{"schema", 1}, {"rows", arr}}, t.str());
  return kOk;
}

// --- kernel ------------------------------------------------------------------

int cmd_kernel(const Globals& gl, const std::string& corpus_path, const std::string& family, std::size_t bound) {
  const auto corpus = parse_graph6_lines(read_file(corpus_path));
  KernelOptions opt;
  opt.max_size = bound;
  const auto k = kernel_matrix(corpus, parse_family(family), opt);
  auto m = json::array();
  std::ostringstream t;
  for (const auto& row : k) {
    m.push_back(string_array(row));
    t << join(strings(row), "\t") << "\n";
  }
  auto d = json::array();
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto dr = json::array();
    for (std::size_t j = 0; j < k.size(); ++j) dr.push_back(to_string(kernel_distance2(k, i, j)));
    d.push_back(dr);
  }
  emit(gl, json{{"schema", 1}, {"family", family}, {"size_bound", bound}, {"kernel", m}, {"distance2", d}}, t.str());
  return kOk;
}

int report_error(const Globals& gl, const char* kind, const std::string& msg, int code, json extra = json::object()) {
  if (gl.as_json()) {
    json e{{"kind", kind}, {"message", msg}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    std::cout << json{{"schema", 1}, {"error", e}}.dump(2) << "\n";
  } else {
    std::cerr << "homvec: " << kind << " error: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Homomorphism-vector equivalence toolkit: color refinement, k-WL, the Fiso/Liso linear systems, "
      "spectral invariants and exhaustive theorem checks on small graphs.\n"
      "Tree and pathwidth-2 hom probes only falsify equivalence; verdicts come from the WL and LP deciders."};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget-vars", gl.budget_vars, "Largest linear system variable count")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for sampled graphs and relabelings");
  app.add_option("--jobs", gl.jobs, "Worker threads for theorem suites")->check(CLI::PositiveNumber);
  app.add_flag("--exit-code-verdict", gl.exit_code_verdict, "Exit 1 when the pair is distinguished or infeasible");
  app.fallthrough();

  CompareArgs ca;
  auto* compare_cmd = app.add_subcommand("compare", "Run the equivalence deciders on two graphs");
  compare_cmd->add_option("G", ca.g, "First graph (graph6 or edge list)")->required();
  compare_cmd->add_option("H", ca.h, "Second graph")->required();
  compare_cmd->add_flag("--all", ca.all, "Run every decider (default when none is selected)");
  compare_cmd->add_flag("--1wl", ca.wl1, "Color refinement");
  compare_cmd->add_flag("--2wl", ca.wl2, "2-WL");
  compare_cmd->add_flag("--fiso", ca.fiso, "Fiso real and nonnegative feasibility");
  compare_cmd->add_flag("--liso", ca.liso, "Liso^k real and nonnegative feasibility");
  compare_cmd->add_flag("--spectral", ca.spectral, "Cospectrality and walk fingerprints");
  compare_cmd->add_flag("--probes", ca.probes, "Tree and pathwidth-2 hom probes");
  compare_cmd->add_option("--liso-k", ca.liso_k, "Level k of Liso^k")->check(CLI::Range(1, 4));
  compare_cmd->add_option("--witness-dir", ca.witness_dir, "Write LP witnesses as JSON files here");

  std::string hom_f, hom_g, hom_method = "auto";
  auto* hom_cmd = app.add_subcommand("hom", "Count homomorphisms F -> G");
  hom_cmd->add_option("F", hom_f, "Pattern graph")->required();
  hom_cmd->add_option("G", hom_g, "Target graph")->required();
  hom_cmd->add_option("--method", hom_method, "Counting method")
      ->check(CLI::IsMember({"auto", "tree", "treewidth", "bruteforce"}));

  std::string ref_g, ref_h;
  bool ref_rounds = false;
  auto* refine_cmd = app.add_subcommand("refine", "Color refinement of a graph, or a 1-WL comparison");
  refine_cmd->add_option("G", ref_g, "Graph")->required();
  refine_cmd->add_option("H", ref_h, "Compare against this graph");
  refine_cmd->add_flag("--rounds", ref_rounds, "Include the coloring of every round");

  std::string kwl_g, kwl_h;
  std::size_t kwl_k = 2;
  auto* kwl_cmd = app.add_subcommand("kwl", "k-dimensional Weisfeiler-Leman");
  kwl_cmd->add_option("G", kwl_g, "Graph")->required();
  kwl_cmd->add_option("H", kwl_h, "Compare against this graph");
  kwl_cmd->add_option("-k", kwl_k, "Dimension")->check(CLI::Range(1, 6));

  LpArgs la;
  auto* lp_cmd = app.add_subcommand("lp", "Build and solve Fiso, Liso^k or Fiso^{k+1/2}");
  lp_cmd->add_option("system", la.system, "fiso, liso or fkhalf")->required()->check(CLI::IsMember({"fiso", "liso", "fkhalf"}));
  lp_cmd->add_option("mode", la.mode, "real or nonneg")->required()->check(CLI::IsMember({"real", "nonneg"}));
  lp_cmd->add_option("G", la.g, "First graph")->required();
  lp_cmd->add_option("H", la.h, "Second graph")->required();
  lp_cmd->add_option("-k", la.k, "Level for liso and fkhalf")->check(CLI::Range(1, 4));
  lp_cmd->add_option("--export", la.export_path, "Write the system in LP format");
  lp_cmd->add_option("--witness", la.witness_path, "Write a feasible witness as JSON");
  lp_cmd->add_flag("--force-exact", la.force_exact, "Nonnegative mode: skip the floating-point warm start");

  std::string sp_g, sp_h;
  auto* spectral_cmd = app.add_subcommand("spectral", "Characteristic polynomial and eigenvalues");
  spectral_cmd->add_option("G", sp_g, "Graph")->required();
  spectral_cmd->add_option("H", sp_h, "Test cospectrality against this graph");

  std::string fp_g, fp_h;
  auto* fp_cmd = app.add_subcommand("fingerprint", "Minimal recurrence of the walk counts");
  fp_cmd->add_option("G", fp_g, "Graph")->required();
  fp_cmd->add_option("H", fp_h, "Compare against this graph");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-theorems", "Exhaustive equivalence checks over the bundled corpus");
  verify_cmd->add_option("--theorem", va.theorems, "Which suites (1 2 3 4)")->delimiter(',');
  verify_cmd->add_option("--max-n", va.max_n, "Largest order for suites 1, 2 and 3 at k = 1");
  verify_cmd->add_option("--max-n-high", va.max_n_high, "Largest order for suite 3 at k >= 2 and suite 4");
  verify_cmd->add_option("-k", va.ks, "WL levels for suite 3")->delimiter(',');
  verify_cmd->add_option("--tree-probe-size", va.tree_probe_size, "Largest probe tree");
  verify_cmd->add_option("--pattern-size", va.pattern_size, "Largest pathwidth-2 pattern");
  verify_cmd->add_option("--self-pairs", va.self_pairs, "Suite 4: also pair graphs up to this order with a relabeling");
  verify_cmd->add_option("--corpus-dir", va.corpus_dir, "Directory with graphs_n<N>.g6");
  verify_cmd->add_flag("--timings", va.timings, "Include wall times in JSON output");

  std::vector<std::size_t> bench_sizes{12500, 25000, 50000, 100000};
  double bench_degree = 20;
  std::size_t bench_repeats = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time color refinement on random graph pairs");
  bench_cmd->add_option("--sizes", bench_sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--degree", bench_degree, "Average degree");
  bench_cmd->add_option("--repeats", bench_repeats, "Best of this many runs");

  std::string k_corpus, k_family = "trees";
  std::size_t k_bound = 8;
  auto* kernel_cmd = app.add_subcommand("kernel", "Truncated homomorphism kernel over a graph6 corpus");
  kernel_cmd->add_option("corpus", k_corpus, "File with one graph6 string per line")->required();
  kernel_cmd->add_option("--family", k_family, "Pattern family")->check(CLI::IsMember({"trees", "paths", "cycles"}));
  kernel_cmd->add_option("--size-bound", k_bound, "Largest pattern size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*compare_cmd) return cmd_compare(gl, ca);
    if (*hom_cmd) return cmd_hom(gl, hom_f, hom_g, hom_method);
    if (*refine_cmd) return cmd_refine(gl, ref_g, ref_h, ref_rounds);
    if (*kwl_cmd) return cmd_kwl(gl, kwl_g, kwl_h, kwl_k);
    if (*lp_cmd) return cmd_lp(gl, la);
    if (*spectral_cmd) return cmd_spectral(gl, sp_g, sp_h);
    if (*fp_cmd) return cmd_fingerprint(gl, fp_g, fp_h);
    if (*verify_cmd) return cmd_verify(gl, va);
    if (*bench_cmd) return cmd_bench(gl, bench_sizes, bench_degree, bench_repeats);
    if (*kernel_cmd) return cmd_kernel(gl, k_corpus, k_family, k_bound);
  } catch (const ParseError& e) {
    return report_error(gl, "parse", e.what(), kInput, json{{"offset", e.offset()}});
  } catch (const CapacityError& e) {
    return report_error(gl, "capacity", e.what(), kCapacity, json{{"requested", e.requested()}, {"budget", e.budget()}});
  } catch (const PreconditionError& e) {
    return report_error(gl, "input", e.what(), kInput);
  }
  return kOk;
}
