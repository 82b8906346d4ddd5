#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "homvec/graph_io.hpp"
#include "homvec/hom.hpp"
#include "homvec/linsys.hpp"
#include "homvec/refine.hpp"
#include "homvec/simplex.hpp"
#include "homvec/spectral.hpp"
#include "oracles.hpp"

using namespace homvec;

namespace {

const Graph kC6 = cycle(6);
const Graph k2C3 = disjoint_union(cycle(3), cycle(3));

Graph fixture(const std::string& name) { return load_graph(std::string(HOMVEC_DATA_DIR) + "/fixtures/" + name); }

std::vector<BigInt> coeffs(std::initializer_list<long> c) {
  std::vector<BigInt> out;
  for (long x : c) out.emplace_back(x);
  return out;
}

std::vector<std::pair<Graph, Graph>> equal_n_pairs_upto(std::size_t max_n) {
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto gs = oracle::load_corpus(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) out.emplace_back(gs[i], gs[j]);
  }
  return out;
}

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(Graph::empty(0)).coeffs, coeffs({1}));
  EXPECT_EQ(char_poly(Graph::empty(1)).coeffs, coeffs({1, 0}));
  EXPECT_EQ(char_poly(complete(2)).coeffs, coeffs({1, 0, -1}));
  EXPECT_EQ(char_poly(complete(3)).coeffs, coeffs({1, 0, -3, -2}));
  EXPECT_EQ(char_poly(star(4)).coeffs, coeffs({1, 0, -4, 0, 0, 0}));
  EXPECT_EQ(char_poly(kC6).coeffs, coeffs({1, 0, -6, 0, 9, 0, -4}));
  EXPECT_EQ(char_poly(k2C3).coeffs, coeffs({1, 0, -6, -4, 9, 12, 4}));
  const auto spider_poly = coeffs({1, 0, -6, 0, 9, 0, -4, 0});
  EXPECT_EQ(char_poly(spider(3, 2)).coeffs, spider_poly);
  EXPECT_EQ(char_poly(disjoint_union(kC6, Graph::empty(1))).coeffs, spider_poly);
  EXPECT_EQ(char_poly(kC6).degree(), 6u);
}

TEST(CharPoly, MatchesLeibnizExpansion) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& g : oracle::load_corpus(n))
      EXPECT_EQ(char_poly(g).coeffs, oracle::leibniz_charpoly(g)) << write_graph6(g);
  const auto seven = oracle::load_corpus(7);
  for (std::size_t i = 0; i < seven.size(); i += 13) EXPECT_EQ(char_poly(seven[i]).coeffs, oracle::leibniz_charpoly(seven[i]));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 4; ++i) {
    const Graph g = oracle::random_graph(8, 0.5, rng);
    EXPECT_EQ(char_poly(g).coeffs, oracle::leibniz_charpoly(g));
  }
}

TEST(CharPoly, LowOrderCoefficients) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(3 + rng() % 20, 0.3, rng);
    const auto c = char_poly(g).coeffs;
    ASSERT_GE(c.size(), 4u);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], 0);
    EXPECT_EQ(c[2], -BigInt(g.m()));
    // −c_3 counts closed walks of length 3 divided by 3, i.e. twice the triangles.
    EXPECT_EQ(BigInt(-3 * c[3]), closed_walk_count(g, 3));
  }
}

TEST(CharPoly, UnionIsProductAndRelabelingInvariant) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Graph a = oracle::random_graph(rng() % 7, 0.5, rng), b = oracle::random_graph(rng() % 7, 0.5, rng);
    EXPECT_EQ(char_poly(disjoint_union(a, b)), char_poly(a) * char_poly(b));
    EXPECT_EQ(char_poly(oracle::relabel(a, oracle::random_permutation(a.n(), rng))), char_poly(a));
  }
}

TEST(CharPoly, LargeGraphStaysExact) {
  // The path on 40 vertices has Chebyshev-type coefficients; check against the
  // recurrence p_n = x p_{n-1} − p_{n-2}.
  std::vector<BigInt> prev{1}, cur{1, 0};
  for (std::size_t n = 2; n <= 40; ++n) {
    std::vector<BigInt> next = cur;
    next.push_back(0);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + 2] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  EXPECT_EQ(char_poly(path(39)).coeffs, cur);
}

// Equal characteristic polynomials are the same as equal closed-walk counts
// of every length up to n.
TEST(Cospectral, MatchesClosedWalkCounts) {
  std::size_t cospectral_pairs = 0;
  for (const auto& [g, h] : equal_n_pairs_upto(6)) {
    const auto a = closed_walk_counts(g, g.n()), b = closed_walk_counts(h, h.n());
    const bool same = cospectral(g, h);
    EXPECT_EQ(same, a == b) << write_graph6(g) << " " << write_graph6(h);
    cospectral_pairs += same;
  }
  EXPECT_GT(cospectral_pairs, 0u);
}

TEST(Fingerprint, ReproducesWalkCounts) {
  std::mt19937_64 rng(21);
  std::vector<Graph> gs;
  for (std::size_t n = 0; n <= 5; ++n)
    for (auto& g : oracle::load_corpus(n)) gs.push_back(std::move(g));
  for (int i = 0; i < 10; ++i) gs.push_back(oracle::random_graph(12, 0.3, rng));
  for (const auto& g : gs) {
    const auto fp = walk_fingerprint(g);
    EXPECT_LE(fp.order(), g.n());
    const auto t = fp.terms(3 * g.n() + 2);
    const auto w = walk_counts(g, 3 * g.n() + 2);
    for (std::size_t l = 0; l < w.size(); ++l) EXPECT_EQ(t[l], Rational(w[l])) << write_graph6(g) << " l=" << l;
  }
  EXPECT_EQ(walk_fingerprint(Graph::empty(0)).order(), 0u);
  const auto k1 = walk_fingerprint(Graph::empty(1));
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_EQ(k1.recurrence, std::vector<Rational>{0});
  EXPECT_EQ(walk_fingerprint(kC6).order(), 1u);
  EXPECT_EQ(walk_fingerprint(kC6).recurrence, std::vector<Rational>{2});
}

TEST(Fingerprint, EqualIffWalkCountsAgree) {
  std::size_t equal_pairs = 0;
  for (const auto& [g, h] : equal_n_pairs_upto(6)) {
    const std::size_t horizon = g.n() + h.n();
    const bool same = walk_fingerprint(g) == walk_fingerprint(h);
    EXPECT_EQ(same, walk_counts(g, horizon) == walk_counts(h, horizon)) << write_graph6(g) << " " << write_graph6(h);
    equal_pairs += same;
  }
  EXPECT_GT(equal_pairs, 0u);
}

TEST(Fingerprint, EqualIffFisoRealFeasible) {
  std::size_t n_pairs = 0;
  for (const auto& [g, h] : equal_n_pairs_upto(6)) {
    if (g.m() != h.m()) continue;
    EXPECT_EQ(walk_fingerprint(g) == walk_fingerprint(h), solve_real(build_fiso(g, h)).feasible)
        << write_graph6(g) << " " << write_graph6(h);
    ++n_pairs;
  }
  EXPECT_EQ(n_pairs, 1340u);
}

TEST(Eigen, Examples) {
  const auto k2 = eigen_float(complete(2));
  ASSERT_EQ(k2.values.size(), 2u);
  EXPECT_NEAR(k2.values[0], -1, 1e-12);
  EXPECT_NEAR(k2.values[1], 1, 1e-12);
  auto c6 = eigen_float(kC6);
  std::vector<double> expect;
  for (int j = 0; j < 6; ++j) expect.push_back(2 * std::cos(2 * std::numbers::pi * j / 6));
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(c6.values[i], expect[i], 1e-9);
  EXPECT_TRUE(eigen_float(Graph::empty(0)).values.empty());
}

TEST(Eigen, TraceIdentitiesAndResiduals) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(2 + rng() % 40, 0.2, rng);
    const auto e = eigen_float(g);
    double s1 = 0, s2 = 0;
    for (double l : e.values) {
      s1 += l;
      s2 += l * l;
    }
    EXPECT_NEAR(s1, 0, 1e-8);
    EXPECT_NEAR(s2, 2.0 * static_cast<double>(g.m()), 1e-8);
    EXPECT_LE(e.max_residual, 1e-9);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
  }
}

TEST(SpectralSolution, SatisfiesFisoWithinTolerance) {
  std::vector<std::pair<Graph, Graph>> pairs{{kC6, k2C3}, {spider(3, 2), disjoint_union(kC6, Graph::empty(1))}};
  for (const auto& [g, h] : equal_n_pairs_upto(6))
    if (walk_fingerprint(g) == walk_fingerprint(h)) pairs.emplace_back(g, h);
  EXPECT_GT(pairs.size(), 2u);
  for (const auto& [g, h] : pairs) {
    const auto s = spectral_fiso_solution(g, h);
    EXPECT_LE(s.residual_commute, 1e-9) << write_graph6(g) << " " << write_graph6(h);
    EXPECT_LE(s.residual_rows, 1e-9);
    EXPECT_LE(s.residual_cols, 1e-9);
  }
  const auto self = spectral_fiso_solution(kC6, kC6);
  EXPECT_LE(self.residual_commute, 1e-9);
}

TEST(SpectralSolution, RefusesDifferentFingerprints) {
  EXPECT_THROW(spectral_fiso_solution(path(3), star(3)), PreconditionError);
  EXPECT_THROW(spectral_fiso_solution(star(4), disjoint_union(cycle(4), Graph::empty(1))), PreconditionError);
}

// Cospectrality is incomparable with both color refinement and equal walk
// counts.
TEST(Incomparability, Fixtures) {
  const Graph s1 = fixture("spider_3_2.g6"), c1 = fixture("c6_plus_k1.g6");
  const Graph s2 = fixture("star4.g6"), c2 = fixture("c4_plus_k1.g6");
  const Graph c6 = fixture("c6.g6"), tc3 = fixture("two_c3.g6");
  EXPECT_TRUE(oracle::isomorphic(s1, spider(3, 2)));
  EXPECT_TRUE(oracle::isomorphic(c1, disjoint_union(kC6, Graph::empty(1))));
  EXPECT_TRUE(oracle::isomorphic(s2, star(4)));
  EXPECT_TRUE(oracle::isomorphic(c2, disjoint_union(cycle(4), Graph::empty(1))));
  EXPECT_TRUE(oracle::isomorphic(c6, kC6));
  EXPECT_TRUE(oracle::isomorphic(tc3, k2C3));

  // Same walk counts, separated by color refinement. This pair is also cospectral.
  EXPECT_TRUE(walk_fingerprint(s1) == walk_fingerprint(c1));
  EXPECT_TRUE(distinguishes_1wl(s1, c1));
  EXPECT_TRUE(cospectral(s1, c1));

  // Cospectral, yet color refinement and walk counts both separate them.
  EXPECT_TRUE(cospectral(s2, c2));
  EXPECT_TRUE(distinguishes_1wl(s2, c2));
  EXPECT_FALSE(walk_fingerprint(s2) == walk_fingerprint(c2));

  // Not cospectral, yet equal under color refinement and walk counts.
  EXPECT_FALSE(cospectral(c6, tc3));
  EXPECT_FALSE(distinguishes_1wl(c6, tc3));
  EXPECT_TRUE(walk_fingerprint(c6) == walk_fingerprint(tc3));
}
