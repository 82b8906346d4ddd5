#include <gtest/gtest.h>

#include <random>

#include "homvec/biso.hpp"
#include "homvec/exact_solve.hpp"
#include "homvec/kwl.hpp"
#include "homvec/linsys.hpp"
#include "homvec/refine.hpp"
#include "homvec/simplex.hpp"
#include "homvec/suite.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace homvec;

namespace {

const Graph kC6 = cycle(6);
const Graph k2C3 = disjoint_union(cycle(3), cycle(3));
const Graph kSpider = spider(3, 2);
const Graph kC6K1 = disjoint_union(cycle(6), Graph::empty(1));

void expect_valid_witness(const RationalLinearSystem& sys, const Feasibility& f, bool nonneg) {
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.certificate, Certificate::solution);
  ASSERT_EQ(f.witness.size(), sys.num_vars());
  EXPECT_TRUE(sys.satisfied_by(f.witness));
  if (nonneg) {
    for (const auto& v : f.witness) EXPECT_GE(v, 0);
  }
}

void expect_certified_infeasible(const RationalLinearSystem& sys, const Feasibility& f) {
  ASSERT_FALSE(f.feasible);
  if (f.certificate == Certificate::farkas) {
    EXPECT_TRUE(check_farkas(sys, f.farkas));
  } else if (f.certificate == Certificate::rank_mismatch) {
    EXPECT_FALSE(solve_real(sys).feasible);
  }
}

std::vector<std::pair<Graph, Graph>> equal_nm_pairs_upto(std::size_t max_n) {
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto gs = oracle::load_corpus(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i].m() == gs[j].m()) out.emplace_back(gs[i], gs[j]);
  }
  return out;
}

}  // namespace

TEST(PartialMap, Basics) {
  const PartialMap p({{2, 0}, {0, 1}, {2, 0}});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.pairs.front(), (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_TRUE(p.contains({2, 0}));
  EXPECT_TRUE(p.is_partial_bijection());
  EXPECT_FALSE(p.with(0, 2).is_partial_bijection());
  EXPECT_FALSE(p.with(1, 0).is_partial_bijection());
  EXPECT_EQ(p.with(2, 0), p);
  EXPECT_TRUE(PartialMap{}.is_partial_isomorphism(kC6, k2C3));
  EXPECT_TRUE(PartialMap({{0, 0}, {1, 1}}).is_partial_isomorphism(kC6, k2C3));
  EXPECT_FALSE(PartialMap({{0, 0}, {3, 1}}).is_partial_isomorphism(kC6, k2C3));
  EXPECT_NE(p.name(), PartialMap({{0, 1}}).name());
}

TEST(Solvers, TinySystems) {
  RationalLinearSystem s;
  s.add_var("x");
  s.add_var("y");
  s.add_row({{0, 1}, {1, 1}}, 1);
  s.add_row({{0, 1}, {1, -1}}, 0);
  auto r = solve_real(s);
  expect_valid_witness(s, r, false);
  EXPECT_EQ(r.witness[0], Rational(1, 2));
  EXPECT_EQ(r.rank, 2u);
  expect_valid_witness(s, solve_nonneg(s), true);

  RationalLinearSystem bad;
  bad.add_var("x");
  bad.add_row({{0, 1}}, 1);
  bad.add_row({{0, 2}}, 3);
  EXPECT_FALSE(solve_real(bad).feasible);
  EXPECT_EQ(solve_real(bad).certificate, Certificate::rank_mismatch);
  EXPECT_FALSE(solve_nonneg(bad).feasible);

  // Real solutions exist, nonnegative ones do not.
  RationalLinearSystem neg;
  neg.add_var("x");
  neg.add_var("y");
  neg.add_row({{0, 1}, {1, 1}}, -1);
  EXPECT_TRUE(solve_real(neg).feasible);
  for (bool exact : {false, true}) {
    const auto f = solve_nonneg(neg, {exact});
    expect_certified_infeasible(neg, f);
    EXPECT_NE(f.certificate, Certificate::rank_mismatch);
  }

  RationalLinearSystem diff;
  diff.add_var("x");
  diff.add_var("y");
  diff.add_row({{0, 1}, {1, -1}}, Rational(7, 3));
  expect_valid_witness(diff, solve_nonneg(diff), true);
  expect_valid_witness(diff, solve_nonneg(diff, {true}), true);
}

TEST(Solvers, EmptySystems) {
  RationalLinearSystem s;
  EXPECT_TRUE(solve_real(s).feasible);
  EXPECT_TRUE(solve_nonneg(s).feasible);
  s.add_var("x");
  s.add_row({}, 1);
  EXPECT_FALSE(solve_real(s).feasible);
  EXPECT_FALSE(solve_nonneg(s).feasible);
}

TEST(Solvers, RandomSystemsFloatAndExactPathsAgree) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5, m = 1 + rng() % 6;
    RationalLinearSystem s;
    for (std::size_t i = 0; i < n; ++i) s.add_var("x" + std::to_string(i));
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<std::pair<std::size_t, Rational>> t;
      for (std::size_t i = 0; i < n; ++i) t.emplace_back(i, coef(rng));
      s.add_row(t, coef(rng));
    }
    const auto real = solve_real(s);
    if (real.feasible) {
      EXPECT_TRUE(s.satisfied_by(real.witness));
    }
    const auto a = solve_nonneg(s), b = solve_nonneg(s, {true});
    EXPECT_EQ(a.feasible, b.feasible) << s.to_lp(true);
    if (a.feasible) {
      EXPECT_TRUE(real.feasible);
      expect_valid_witness(s, a, true);
      expect_valid_witness(s, b, true);
    } else {
      expect_certified_infeasible(s, a);
      expect_certified_infeasible(s, b);
    }
  }
}

TEST(Fiso, Examples) {
  const Graph k1 = Graph::empty(1);
  const auto s = build_fiso(k1, k1);
  EXPECT_EQ(s.num_vars(), 1u);
  const auto f = solve_nonneg(s);
  expect_valid_witness(s, f, true);
  EXPECT_EQ(f.witness[0], 1);

  const auto two = build_fiso(k1, Graph::empty(2));
  EXPECT_FALSE(solve_real(two).feasible);
  EXPECT_FALSE(solve_nonneg(two).feasible);

  for (const Graph& g : {kC6, kSpider, complete(4), path(3)}) {
    const auto sys = build_fiso(g, g);
    std::vector<Rational> id(g.n() * g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) id[v * g.n() + v] = 1;
    EXPECT_TRUE(sys.satisfied_by(id));
    id[0] = 2;
    EXPECT_FALSE(sys.satisfied_by(id));
  }

  const auto cyc = build_fiso(kC6, k2C3);
  expect_valid_witness(cyc, solve_nonneg(cyc), true);
  EXPECT_TRUE(cyc.satisfied_by(std::vector<Rational>(36, Rational(1, 6))));
}

TEST(Fiso, SpiderPairIsRealButNotNonnegFeasible) {
  const auto s = build_fiso(kSpider, kC6K1);
  expect_valid_witness(s, solve_real(s), false);
  for (bool exact : {false, true}) expect_certified_infeasible(s, solve_nonneg(s, {exact}));
}

TEST(Fiso, NonnegFeasibilityMatchesColorRefinementOracle) {
  for (const auto& [g, h] : equal_nm_pairs_upto(6)) {
    const auto s = build_fiso(g, h);
    const auto f = solve_nonneg(s);
    EXPECT_EQ(f.feasible, !oracle::distinguishes_1wl(g, h)) << write_graph6(g) << " " << write_graph6(h);
    if (f.feasible) {
      expect_valid_witness(s, f, true);
    } else {
      expect_certified_infeasible(s, f);
    }
  }
}

TEST(Fiso, ForceExactAgreesWithFloatPath) {
  for (const auto& [g, h] : equal_nm_pairs_upto(5)) {
    const auto s = build_fiso(g, h);
    const auto a = solve_nonneg(s), b = solve_nonneg(s, {true});
    EXPECT_EQ(a.feasible, b.feasible);
    EXPECT_EQ(b.method == "exact simplex" || b.method == "elimination", true) << b.method;
  }
}

TEST(Liso, Examples) {
  for (const auto& [g, h] : equal_nm_pairs_upto(4)) {
    const auto l1 = build_liso(g, h, 1);
    expect_valid_witness(l1.system, solve_nonneg(l1.system), true);
  }
  EXPECT_FALSE(solve_real(build_liso(complete(3), Graph::empty(4), 1).system).feasible);

  const auto l2 = build_liso(kC6, k2C3, 2);
  expect_valid_witness(l2.system, solve_nonneg(l2.system), true);
  const auto l3 = build_liso(kC6, k2C3, 3);
  const auto r3 = solve_real(l3.system);
  EXPECT_FALSE(r3.feasible);
  EXPECT_EQ(r3.certificate, Certificate::rank_mismatch);
}

TEST(Liso, OnlyPartialIsomorphismsGetVariables) {
  const auto l = build_liso(kSpider, kC6K1, 2);
  EXPECT_EQ(l.k, 2u);
  for (const auto& p : l.var) {
    EXPECT_LE(p.size(), 2u);
    EXPECT_TRUE(p.is_partial_bijection());
    EXPECT_TRUE(p.is_partial_isomorphism(kSpider, kC6K1));
  }
  EXPECT_TRUE(l.lookup(PartialMap{}).has_value());
  EXPECT_FALSE(l.lookup(PartialMap({{0, 0}, {1, 2}})).has_value());
  const auto f = build_fiso_khalf(kSpider, kC6K1, 2);
  EXPECT_GT(f.var.size(), l.var.size());
}

TEST(Liso, NonnegMatchesKwlOnSmallPairs) {
  for (const auto& [g, h] : equal_nm_pairs_upto(5))
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto l = build_liso(g, h, k + 1);
      EXPECT_EQ(solve_nonneg(l.system).feasible, !distinguishes_kwl(g, h, k));
    }
}

// Restricting a Liso^{k+1} solution gives an Fiso^{k+1/2} solution, and an
// Fiso^{k+1/2} nonnegative solution vanishes off the partial isomorphisms.
TEST(Transfer, LisoAndFisoKHalf) {
  std::vector<std::pair<Graph, Graph>> pairs{{kC6, k2C3}, {kSpider, kC6K1}};
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& g : oracle::load_corpus(n)) pairs.emplace_back(g, oracle::relabel(g, oracle::random_permutation(n, rng)));
  std::size_t checked = 0;
  for (const auto& [g, h] : pairs)
    for (std::size_t k = 1; k <= 2; ++k) {
      if (g.n() * h.n() > 16 && k == 2) continue;
      const auto liso = build_liso(g, h, k + 1);
      const auto fk = build_fiso_khalf(g, h, k);
      const auto lsol = solve_nonneg(liso.system);
      const auto fsol = solve_nonneg(fk.system);
      EXPECT_EQ(lsol.feasible, fsol.feasible) << write_graph6(g) << " " << write_graph6(h) << " k=" << k;
      if (lsol.feasible) {
        EXPECT_TRUE(fk.system.satisfied_by(restrict_liso_to_fkhalf(liso, lsol.witness, fk)));
        ++checked;
      }
      if (fsol.feasible) {
        const auto lk = build_liso(g, h, k);
        auto [x, dropped_zero] = fkhalf_to_liso(fk, fsol.witness, lk);
        EXPECT_TRUE(dropped_zero);
        EXPECT_TRUE(lk.system.satisfied_by(x));
      }
    }
  EXPECT_GT(checked, 10u);
}

TEST(Transfer, BisoIdentityOnSelfPairs) {
  std::mt19937_64 rng(12);
  const auto patterns = pathwidth2_patterns(4);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& g : oracle::load_corpus(n)) {
      const Graph h = oracle::relabel(g, oracle::random_permutation(n, rng));
      const auto liso = build_liso(g, h, 3);
      const auto sol = solve_real(liso.system);
      ASSERT_TRUE(sol.feasible);
      for (const auto& p : patterns) {
        if (!p.shaped) continue;
        EXPECT_FALSE(check_biso_transfer(p.graph, *p.shaped, g, h, liso, sol.witness).has_value());
        ++checked;
      }
    }
  EXPECT_GT(checked, 50u);
}

TEST(Transfer, BisoIdentityRejectsPerturbedWitness) {
  const Graph g = path(2);
  const Graph h = oracle::relabel(g, {2, 0, 1});  // edges 2-0 and 0-1
  const auto liso = build_liso(g, h, 3);
  auto sol = solve_real(liso.system);
  ASSERT_TRUE(sol.feasible);
  const Graph k2 = complete(2);
  const auto p = find_path_decomposition(k2, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_FALSE(check_biso_transfer(k2, *p, g, h, liso, sol.witness).has_value());
  const auto idx = liso.lookup(PartialMap({{0, 2}, {1, 0}}));
  ASSERT_TRUE(idx.has_value());
  sol.witness[*idx] += 1;
  EXPECT_TRUE(check_biso_transfer(k2, *p, g, h, liso, sol.witness).has_value());
}

TEST(Export, LpTextAndWitnessJson) {
  const auto s = build_fiso(complete(2), complete(2));
  const std::string lp = s.to_lp(true);
  EXPECT_NE(lp.find("Subject To"), std::string::npos);
  EXPECT_NE(lp.find(" x3 >= 0"), std::string::npos);
  EXPECT_EQ(lp.find("free"), std::string::npos);
  EXPECT_NE(s.to_lp(false).find(" x0 free"), std::string::npos);
  std::size_t constraint_lines = 0;
  for (std::size_t pos = 0; (pos = lp.find("\n r", pos)) != std::string::npos; ++pos) ++constraint_lines;
  EXPECT_EQ(constraint_lines, s.num_rows());

  const auto f = solve_nonneg(s);
  ASSERT_TRUE(f.feasible);
  const auto j = nlohmann::json::parse(witness_json(s, f.witness));
  EXPECT_EQ(j.size(), 4u);
  Rational sum = 0;
  for (const auto& [name, v] : j.items()) sum += Rational(v.get<std::string>());
  EXPECT_EQ(sum, 2);
}

TEST(Budget, LargeSystemsAreRefused) {
  SystemBudget tight{10};
  EXPECT_THROW(build_fiso(kC6, k2C3, tight), CapacityError);
  EXPECT_NO_THROW(build_fiso(path(2), path(2), tight));
  EXPECT_THROW(build_liso(kC6, k2C3, 3, tight), CapacityError);
  EXPECT_THROW(build_fiso_khalf(kC6, k2C3, 2, tight), CapacityError);
  try {
    build_liso(complete(40), complete(40), 3);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_GT(e.requested(), e.budget());
  }
}
