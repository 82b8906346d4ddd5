#include <gtest/gtest.h>

#include <random>

#include "homvec/graph.hpp"
#include "homvec/graph_io.hpp"
#include "oracles.hpp"

using namespace homvec;

namespace {

void expect_well_formed(const Graph& g) {
  std::size_t deg_sum = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    deg_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], v);
      if (i) {
        EXPECT_LT(nb[i - 1], nb[i]);
      }
      EXPECT_TRUE(g.has_edge(nb[i], v));
    }
    for (Vertex u = 0; u < g.n(); ++u)
      EXPECT_EQ(g.has_edge(v, u), std::binary_search(nb.begin(), nb.end(), u));
  }
  EXPECT_EQ(g.m() * 2, deg_sum);
}

}  // namespace

TEST(Graph6, DecodesHandExamples) {
  Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.n(), 2u);
  EXPECT_EQ(k2.m(), 1u);
  EXPECT_TRUE(k2.has_edge(0, 1));
  Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.n(), 1u);
  EXPECT_EQ(k1.m(), 0u);
  EXPECT_EQ(parse_graph6("?").n(), 0u);
}

TEST(Graph6, MatchesReferenceEncoder) {
  // Strings produced by networkx.to_graph6_bytes.
  EXPECT_EQ(write_graph6(path(3)), "Ch");
  EXPECT_EQ(write_graph6(complete(5)), "D~{");
  const Graph petersen = Graph::from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                                {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  EXPECT_EQ(write_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen);
}

TEST(Graph6, LongHeaderForSeventyVertices) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 70; ++i) {
    Vertex j = (i * 7 + 3) % 70;
    if (i != j) e.emplace_back(i, j);
  }
  const Graph g = Graph::from_edges(70, e);
  EXPECT_EQ(g.m(), 69u);
  const std::string s = write_graph6(g);
  ASSERT_EQ(s.substr(0, 4), "~?@E");
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RoundTripsFiveVertexExample) { EXPECT_EQ(write_graph6(parse_graph6("D?{")), "D?{"); }

TEST(Graph6, RoundTripsWholeCorpus) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const std::string text = read_file(std::string(HOMVEC_DATA_DIR) + "/graphs/graphs_n" + std::to_string(n) + ".g6");
    std::size_t start = 0;
    for (const auto& g : parse_graph6_lines(text)) {
      const std::size_t end = text.find('\n', start);
      EXPECT_EQ(write_graph6(g), text.substr(start, end - start));
      expect_well_formed(g);
      start = end + 1;
    }
  }
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0, 1, 2, 5, 62, 63, 64, 130}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);      // missing adjacency byte
  EXPECT_THROW(parse_graph6("A_?"), ParseError);    // trailing garbage
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);  // byte above '~'
  EXPECT_THROW(parse_graph6(" _"), ParseError);     // byte below '?'
  try {
    parse_graph6("D?{x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(EdgeList, ParsesExamples) {
  EXPECT_EQ(parse_edgelist("3\n0 1\n1 2"), path(2));
  EXPECT_EQ(parse_edgelist("1"), Graph::empty(1));
  const Graph g = parse_edgelist("4\n0 1\n0 1\n2 3");
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g, Graph::from_edges(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(parse_edgelist(write_edgelist(complete(4))), complete(4));
}

TEST(EdgeList, RejectsLoopsAndRange) {
  EXPECT_THROW(parse_edgelist("3\n1 1"), ParseError);
  EXPECT_THROW(parse_edgelist("3\n0 3"), ParseError);
  EXPECT_THROW(parse_edgelist("x"), ParseError);
  EXPECT_THROW(parse_edgelist(""), ParseError);
}

TEST(Generators, Shapes) {
  EXPECT_EQ(path(0), Graph::empty(1));
  EXPECT_EQ(path(4).n(), 5u);
  EXPECT_EQ(path(4).m(), 4u);
  EXPECT_EQ(cycle(0), Graph::empty(1));
  EXPECT_THROW(cycle(1), PreconditionError);
  EXPECT_THROW(cycle(2), PreconditionError);
  EXPECT_EQ(cycle(6).m(), 6u);
  const Graph s = star(4);
  EXPECT_EQ(s.n(), 5u);
  EXPECT_EQ(s.max_degree(), 4u);
  const Graph sp = spider(3, 2);
  EXPECT_EQ(sp.n(), 7u);
  EXPECT_EQ(sp.m(), 6u);
  EXPECT_TRUE(is_tree(sp));
  EXPECT_EQ(complete(5).m(), 10u);
  for (const Graph& g : {path(3), cycle(5), star(3), spider(2, 3), complete(4)}) expect_well_formed(g);
}

TEST(Algebra, DisjointUnion) {
  EXPECT_EQ(disjoint_union(Graph::empty(1), Graph::empty(1)), Graph::empty(2));
  const Graph h = disjoint_union(cycle(3), cycle(3));
  EXPECT_EQ(h.n(), 6u);
  EXPECT_EQ(h.m(), 6u);
  EXPECT_TRUE(h.has_edge(3, 4));
  EXPECT_FALSE(h.has_edge(2, 3));
  EXPECT_EQ(disjoint_union(spider(3, 2), Graph::empty(0)), spider(3, 2));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph a = oracle::random_graph(rng() % 8, 0.4, rng), b = oracle::random_graph(rng() % 8, 0.4, rng);
    const Graph u = disjoint_union(a, b);
    EXPECT_EQ(u.n(), a.n() + b.n());
    EXPECT_EQ(u.m(), a.m() + b.m());
    expect_well_formed(u);
  }
}

TEST(Algebra, LargeGraphWithoutBitsets) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < 5000; ++i) e.emplace_back(i, i + 1);
  const Graph g = Graph::from_edges(5000, e);
  EXPECT_TRUE(g.has_edge(4998, 4999));
  EXPECT_FALSE(g.has_edge(0, 4999));
}

TEST(LoadGraph, DetectsFormat) {
  EXPECT_EQ(load_graph(std::string(HOMVEC_DATA_DIR) + "/fixtures/c6.g6"), cycle(6));
  EXPECT_THROW(load_graph("/nonexistent/graph.g6"), ParseError);
}
