#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tlab/generators.hpp"
#include "tlab/graph.hpp"
#include "tlab/isomorphism.hpp"

using namespace tlab;

TEST(Parse, Triangle) {
  Graph g = parse_edge_list("3 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Parse, K4WithComments) {
  Graph g = parse_edge_list("# K4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n\n# end\n");
  EXPECT_EQ(g, complete_graph(4));
}

TEST(Parse, RejectsLoop) {
  try {
    parse_edge_list("2 1\n0 0");
    FAIL() << "loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 0"), ParseError);
}

TEST(Parse, CrLfTolerated) { EXPECT_EQ(parse_edge_list("2 1\r\n0 1\r\n"), path_graph(1)); }

TEST(Serialize, Format) {
  EXPECT_EQ(serialize_edge_list(Graph(3, {{1, 2}, {0, 1}})), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(serialize_edge_list(Graph(0)), "0 0\n");
}

TEST(Serialize, RoundTripRandom) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng.uniform(0, 15), 3, 10, rng);
    Graph back = parse_edge_list(serialize_edge_list(g));
    ASSERT_EQ(back, g);
    ASSERT_EQ(back.edges(), g.edges());
  }
}

TEST(Graph, ConstructionValidates) {
  EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph(-1), GraphError);
}

TEST(Graph, EdgesSortedAndCanonical) {
  Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
  EXPECT_EQ(g.find_edge(3, 2), std::optional<EdgeId>(2));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(OneSum, Bowtie) {
  Graph b = one_sum(complete_graph(3), 0, complete_graph(3), 0);
  EXPECT_EQ(b.num_nodes(), 5);
  EXPECT_EQ(b.num_edges(), 6);
  EXPECT_TRUE(oracle::isomorphic(b, bowtie_graph()));
}

TEST(OneSum, TwoEdgesMakeAPath) {
  EXPECT_TRUE(oracle::isomorphic(one_sum(path_graph(1), 1, path_graph(1), 0), path_graph(2)));
}

TEST(OneSum, K4AndTriangle) {
  Graph g = one_sum(complete_graph(4), 2, complete_graph(3), 1);
  EXPECT_EQ(g.num_nodes(), 6);
  EXPECT_EQ(g.num_edges(), 9);
}

TEST(OneSum, OutOfRange) { EXPECT_THROW(one_sum(complete_graph(3), 3, complete_graph(3), 0), GraphError); }

TEST(OneSum, CountsOnRandomGraphs) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph a = random_graph(rng.uniform(1, 8), 4, 10, rng), b = random_graph(rng.uniform(1, 8), 4, 10, rng);
    Graph s = one_sum(a, rng.uniform(0, a.num_nodes() - 1), b, rng.uniform(0, b.num_nodes() - 1));
    ASSERT_EQ(s.num_nodes(), a.num_nodes() + b.num_nodes() - 1);
    ASSERT_EQ(s.num_edges(), a.num_edges() + b.num_edges());
  }
}

TEST(Smooth, PathMiddle) {
  auto r = smooth_degree_two(path_graph(2), 1);
  EXPECT_EQ(r.graph, path_graph(1));
  EXPECT_EQ(r.id_map, (std::vector<NodeId>{0, kNoNode, 1}));
}

TEST(Smooth, C4ToC3) { EXPECT_TRUE(oracle::isomorphic(smooth_degree_two(cycle_graph(4), 2).graph, cycle_graph(3))); }

TEST(Smooth, Errors) {
  EXPECT_THROW(smooth_degree_two(cycle_graph(3), 0), GraphError);
  EXPECT_THROW(smooth_degree_two(complete_graph(4), 0), GraphError);
  EXPECT_THROW(smooth_degree_two(path_graph(2), 0), GraphError);
  EXPECT_THROW(smooth_degree_two(path_graph(2), 7), GraphError);
}

TEST(Subdivide, Examples) {
  EXPECT_EQ(subdivide_edge(path_graph(1), 0).num_nodes(), 3);
  EXPECT_TRUE(oracle::isomorphic(subdivide_edge(path_graph(1), 0), path_graph(2)));
  EXPECT_TRUE(oracle::isomorphic(subdivide_edge(cycle_graph(3), 1), cycle_graph(4)));
  EXPECT_THROW(subdivide_edge(cycle_graph(3), 3), GraphError);
}

TEST(Subdivide, AllEdgesOfK5) {
  Graph k5 = complete_graph(5);
  Graph g = k5;
  for (const auto& e : k5.edges()) g = subdivide_edge(g, *g.find_edge(e.u, e.v));
  EXPECT_EQ(g.num_nodes(), 15);
  EXPECT_EQ(g.num_edges(), 20);
  for (NodeId v = 5; v < 15; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(Smooth, SubdivideInvertsSmoothingOnRandomGraphs) {
  Rng rng(3);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 300; ++i) {
    Graph g = random_graph(rng.uniform(3, 10), 3, 10, rng);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (g.degree(v) != 2 || g.has_edge(g.neighbors(v)[0], g.neighbors(v)[1])) continue;
      auto r = smooth_degree_two(g, v);
      NodeId x = r.id_map[g.neighbors(v)[0]], y = r.id_map[g.neighbors(v)[1]];
      Graph back = subdivide_edge(r.graph, *r.graph.find_edge(x, y));
      ASSERT_TRUE(oracle::isomorphic(back, g));
      ++checked;
      break;
    }
  }
  EXPECT_GE(checked, 300);
}

TEST(Subgraph, Examples) {
  Graph k4 = complete_graph(4);
  Graph none = subgraph(k4, EdgeSet(k4));
  EXPECT_EQ(none.num_nodes(), 4);
  EXPECT_EQ(none.num_edges(), 0);
  EXPECT_EQ(subgraph(k4, EdgeSet::all(k4)), k4);
  Graph one = subgraph(cycle_graph(3), std::vector<EdgeId>{1});
  EXPECT_EQ(one.num_nodes(), 3);
  EXPECT_EQ(one.num_edges(), 1);
}

TEST(Subgraph, HostMismatch) {
  EXPECT_THROW(subgraph(complete_graph(4), EdgeSet(cycle_graph(4))), GraphError);
  EXPECT_THROW(EdgeSet(complete_graph(3), {3}), GraphError);
}

TEST(Subgraph, KeepsNodeCount) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(rng.uniform(0, 10), 5, 10, rng);
    EdgeSet es(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (rng.chance(1, 2)) es.insert(e);
    Graph s = subgraph(g, es);
    ASSERT_EQ(s.num_nodes(), g.num_nodes());
    ASSERT_EQ(s.num_edges(), es.size());
  }
}

TEST(Apex, Examples) {
  EXPECT_EQ(add_apex(cycle_graph(3)), complete_graph(4));
  EXPECT_EQ(add_apex(Graph(0)), Graph(1));
  Graph w4 = add_apex(cycle_graph(4));
  EXPECT_EQ(w4.num_nodes(), 5);
  EXPECT_EQ(w4.num_edges(), 8);
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_k_regular(complete_graph(4), 3));
  EXPECT_TRUE(is_k_regular(petersen_graph(), 3));
  EXPECT_FALSE(is_k_regular(path_graph(2), 1));
  EXPECT_TRUE(is_k_regular(Graph(0), 5));
}

TEST(Components, Counts) {
  EXPECT_EQ(connected_components(disjoint_union(cycle_graph(3), cycle_graph(4))).count, 2);
  EXPECT_EQ(connected_components(Graph(3)).count, 3);
  EXPECT_EQ(connected_components(petersen_graph()).count, 1);
}

TEST(NodeSet, Validation) {
  EXPECT_THROW(NodeSet(3, {3}), GraphError);
  NodeSet s(4, {2, 0, 2});
  EXPECT_EQ(s.ids(), (std::vector<NodeId>{0, 2}));
  EXPECT_TRUE(is_independent(cycle_graph(4), s));
  EXPECT_FALSE(is_independent(cycle_graph(4), NodeSet(4, {0, 1})));
}

TEST(Generators, RandomRegular) {
  Rng rng(1);
  for (int k = 3; k <= 5; ++k)
    for (int i = 0; i < 20; ++i) {
      int n = 2 * rng.uniform(3, 15);
      ASSERT_TRUE(is_k_regular(random_regular_graph(n, k, rng), k));
    }
  EXPECT_THROW(random_regular_graph(5, 3, rng), GraphError);
}

TEST(Generators, Deterministic) {
  Rng a(42), b(42);
  EXPECT_EQ(random_graph(12, 1, 3, a), random_graph(12, 1, 3, b));
}

TEST(Isomorphism, NonisomorphicCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), expected[n]);
}

TEST(Isomorphism, AgreesWithBacktracking) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    int n = rng.uniform(1, 8);
    Graph a = random_graph(n, 1, 2, rng);
    Graph b = rng.chance(1, 2) ? random_graph(n, 1, 2, rng) : a;
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<Edge> es;
    for (const auto& e : b.edges()) es.push_back(make_edge(perm[e.u], perm[e.v]));
    Graph pb(n, es);
    ASSERT_EQ(are_isomorphic(a, pb), oracle::isomorphic(a, pb));
  }
}
