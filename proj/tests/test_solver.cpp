#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tlab/classes.hpp"
#include "tlab/generators.hpp"
#include "tlab/isomorphism.hpp"
#include "tlab/solver.hpp"

using namespace tlab;

namespace {

const ClassDescriptor& cls(const std::string& name) {
  static std::map<std::string, ClassDescriptor> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, builtin_descriptor(name)).first;
  return it->second;
}

Decision decide(const Graph& g, const std::string& f, int k) { return thickness_decide(g, cls(f), k).decision; }

}  // namespace

TEST(Thickness, Examples) {
  EXPECT_EQ(decide(cycle_graph(3), "forest", 1), Decision::No);
  EXPECT_EQ(decide(cycle_graph(3), "forest", 2), Decision::Yes);
  EXPECT_EQ(decide(complete_graph(4), "outerplanar", 2), Decision::Yes);
  EXPECT_EQ(decide(complete_graph(5), "outerplanar", 1), Decision::No);
  EXPECT_EQ(decide(complete_graph(5), "outerplanar", 2), Decision::Yes);
  EXPECT_EQ(decide(bowtie_graph(), "pseudoforest", 1), Decision::No);
  EXPECT_EQ(decide(bowtie_graph(), "pseudoforest", 2), Decision::Yes);
}

TEST(Thickness, CompleteGraphAboveEdgeBudget) {
  // C(12,2) = 66 > 3 * (2*12 - 3) = 63
  auto r = thickness_decide(complete_graph(12), cls("outerplanar"), 3);
  EXPECT_EQ(r.decision, Decision::No);
  EXPECT_GT(r.stats.density_prunes, 0u);
}

TEST(Thickness, ZeroParts) {
  EXPECT_EQ(decide(Graph(3), "outerplanar", 0), Decision::Yes);
  EXPECT_EQ(decide(path_graph(1), "outerplanar", 0), Decision::No);
  EXPECT_THROW(thickness_decide(path_graph(1), cls("forest"), -1), std::invalid_argument);
}

TEST(Thickness, CertificatesVerify) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng.uniform(2, 9), 5, 10, rng);
    for (const char* f : {"forest", "outerplanar", "cactus", "planar", "eulerian"}) {
      auto r = thickness_decide(g, cls(f), 2);
      if (r.decision == Decision::Yes) {
        ASSERT_TRUE(r.partition);
        ASSERT_TRUE(verify_partition(g, cls(f), *r.partition)) << f;
      }
    }
  }
}

TEST(ThicknessExact, Values) {
  EXPECT_EQ(thickness_exact(cycle_graph(5), cls("outerplanar")), 1);
  EXPECT_EQ(thickness_exact(complete_graph(4), cls("outerplanar")), 2);
  EXPECT_EQ(thickness_exact(complete_graph(5), cls("outerplanar")), 2);
  EXPECT_EQ(thickness_exact(complete_graph(4), cls("forest")), 2);
  EXPECT_EQ(thickness_exact(Graph(5), cls("forest")), 0);
  EXPECT_EQ(thickness_exact(complete_graph(6), cls("planar")), 2);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(thickness_exact(cycle_graph(n), cls("outerplanar")), 1);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(thickness_oracle(complete_graph(4), cls("outerplanar"), 2).decision, Decision::Yes);
  EXPECT_EQ(thickness_oracle(cycle_graph(3), cls("forest"), 1).decision, Decision::No);
  EXPECT_EQ(thickness_oracle(bowtie_graph(), cls("pseudoforest"), 1).decision, Decision::No);
  EXPECT_EQ(thickness_oracle(bowtie_graph(), cls("pseudoforest"), 2).decision, Decision::Yes);
  EXPECT_THROW(thickness_oracle(complete_graph(7), cls("outerplanar"), 3), SizeGuardError);
}

TEST(Oracle, AgreesOnSmallGraphsIncludingNonMonotone) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (const char* f : {"planar", "partial-2-tree", "eulerian"})
        for (int k = 1; k <= 2; ++k) {
          auto a = thickness_decide(g, cls(f), k), b = thickness_oracle(g, cls(f), k);
          ASSERT_EQ(a.decision, b.decision) << f << " k=" << k << "\n" << serialize_edge_list(g);
          if (b.partition) {
            ASSERT_TRUE(verify_partition(g, cls(f), *b.partition));
          }
        }
}

TEST(Thickness, MonotoneUnderEdgeAddition) {
  Rng rng(4);
  for (int i = 0; i < 120; ++i) {
    Graph g = random_graph(rng.uniform(3, 7), 5, 10, rng);
    std::vector<Edge> non;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
      for (NodeId v = u + 1; v < g.num_nodes(); ++v)
        if (!g.has_edge(u, v)) non.push_back({u, v});
    if (non.empty()) continue;
    Edge e = non[rng.below(non.size())];
    for (const char* f : {"forest", "outerplanar", "cactus", "pseudoforest"}) {
      int before = *thickness_exact(g, cls(f)), after = *thickness_exact(with_edge(g, e.u, e.v), cls(f));
      ASSERT_LE(before, after) << f;
    }
  }
}

// Classes with conditions (a) and (c) contain a single edge, so one more edge
// costs at most one more part.
TEST(Thickness, PlusOne) {
  Rng rng(6);
  for (const char* f : {"outerplanar", "cactus", "planar", "partial-2-tree", "pseudoforest"}) {
    int tested = 0;
    for (int i = 0; i < 2000 && tested < 60; ++i) {
      Graph g = random_graph(rng.uniform(3, 8), static_cast<std::uint64_t>(rng.uniform(2, 8)), 10, rng);
      std::vector<Edge> non;
      for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v = u + 1; v < g.num_nodes(); ++v)
          if (!g.has_edge(u, v)) non.push_back({u, v});
      if (non.empty()) continue;
      bool member = cls(f).member(g);
      if (!member && tested % 2 == 0) continue;  // half members, half arbitrary graphs
      Edge e = non[rng.below(non.size())];
      int before = *thickness_exact(g, cls(f)), after = *thickness_exact(with_edge(g, e.u, e.v), cls(f));
      ASSERT_LE(after, before + 1) << f;
      if (member) {
        ASSERT_LE(after, 2) << f;
      }
      ++tested;
    }
    EXPECT_EQ(tested, 60) << f;
  }
}

TEST(Thickness, ThreadCountDoesNotChangeResult) {
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(rng.uniform(5, 9), 6, 10, rng);
    for (int k = 1; k <= 2; ++k) {
      auto a = thickness_decide(g, cls("outerplanar"), k, {}, ThicknessOptions{1});
      auto b = thickness_decide(g, cls("outerplanar"), k, {}, ThicknessOptions{3});
      ASSERT_EQ(a.decision, b.decision);
      ASSERT_EQ(a.partition, b.partition);
    }
  }
}

TEST(Thickness, BudgetGivesUnknown) {
  Budget tiny;
  tiny.max_nodes = 50;
  auto r = thickness_decide(complete_graph(7), cls("outerplanar"), 2, tiny);
  EXPECT_EQ(r.decision, Decision::Unknown);
  EXPECT_FALSE(r.partition);
  EXPECT_EQ(thickness_exact(complete_graph(7), cls("outerplanar"), tiny), std::nullopt);
  auto p = thickness_decide(complete_graph(7), cls("outerplanar"), 2, tiny, ThicknessOptions{2});
  EXPECT_EQ(p.decision, Decision::Unknown);
}

TEST(VerifyPartition, Examples) {
  Graph k4 = complete_graph(4);
  EdgePartition p(k4, 2);
  // 0-1-3-2-0 is a 4-cycle; the diagonals 0-3 and 1-2 form a matching
  for (EdgeId e = 0; e < k4.num_edges(); ++e) {
    Edge ed = k4.edge(e);
    p.assign[e] = (ed == Edge{0, 3} || ed == Edge{1, 2}) ? 1 : 0;
  }
  EXPECT_TRUE(verify_partition(k4, cls("outerplanar"), p));
  EdgePartition one(k4, 1);
  EXPECT_FALSE(verify_partition(k4, cls("outerplanar"), one));
  EXPECT_TRUE(verify_partition(Graph(0), cls("forest"), EdgePartition(Graph(0), 3)));
  EXPECT_THROW(verify_partition(cycle_graph(4), cls("forest"), p), GraphError);
  p.assign[0] = 2;
  EXPECT_FALSE(verify_partition(k4, cls("outerplanar"), p));
}

TEST(EdgeColor, Examples) {
  EXPECT_EQ(edge_color_decide(complete_graph(4), 3).decision, Decision::Yes);
  EXPECT_EQ(edge_color_decide(petersen_graph(), 3).decision, Decision::No);
  EXPECT_EQ(edge_color_decide(petersen_graph(), 4).decision, Decision::Yes);
  EXPECT_EQ(edge_color_decide(cycle_graph(5), 2).decision, Decision::No);
  EXPECT_EQ(edge_color_decide(cycle_graph(5), 3).decision, Decision::Yes);
  auto r = edge_color_decide(complete_bipartite(3, 3), 3);
  ASSERT_TRUE(r.coloring);
  EXPECT_TRUE(verify_coloring(complete_bipartite(3, 3), *r.coloring));
}

TEST(EdgeColor, ChromaticIndexValues) {
  EXPECT_EQ(chromatic_index(complete_graph(4)), 3);
  EXPECT_EQ(chromatic_index(complete_bipartite(3, 3)), 3);
  EXPECT_EQ(chromatic_index(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_index(petersen_graph()), 4);
  EXPECT_EQ(chromatic_index(complete_graph(5)), 5);
  EXPECT_EQ(chromatic_index(Graph(4)), 0);
}

TEST(EdgeColor, AgreesWithEnumerationOracle) {
  Rng rng(12);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_graph(rng.uniform(2, 7), 4, 10, rng);
    if (g.num_edges() > 10) continue;
    for (int k = 1; k <= 4; ++k)
      ASSERT_EQ(edge_color_decide(g, k).decision == Decision::Yes, oracle::edge_colorable(g, k))
          << serialize_edge_list(g) << " k=" << k;
  }
}

TEST(EdgeColor, VizingRange) {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_graph(rng.uniform(2, 10), 4, 10, rng);
    auto chi = chromatic_index(g);
    ASSERT_TRUE(chi);
    int d = max_degree(g);
    ASSERT_TRUE(*chi == d || *chi == d + 1) << serialize_edge_list(g);
  }
}

TEST(EdgeColor, EnumerationIsCompleteAndProper) {
  auto all = enumerate_edge_colorings(complete_graph(4), 3, 1000);
  EXPECT_EQ(all.size(), 6u);
  for (const auto& c : all) EXPECT_TRUE(verify_coloring(complete_graph(4), c));
  EXPECT_TRUE(enumerate_edge_colorings(petersen_graph(), 3, 10).empty());
  EXPECT_EQ(enumerate_edge_colorings(cycle_graph(4), 2, 100).size(), 2u);
  EXPECT_EQ(enumerate_edge_colorings(complete_graph(4), 3, 4).size(), 4u);
}

TEST(IndependentSet, Examples) {
  auto c4 = independent_set_atleast(cycle_graph(4), 2);
  ASSERT_EQ(c4.decision, Decision::Yes);
  EXPECT_TRUE(is_independent(cycle_graph(4), c4.nodes));
  EXPECT_GE(c4.nodes.size(), 2);
  EXPECT_EQ(independent_set_atleast(complete_graph(4), 2).decision, Decision::No);
  EXPECT_EQ(independent_set_atleast(Graph(0), 0).decision, Decision::Yes);
}

TEST(IndependentSet, MatchesBruteForce) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng.uniform(1, 14), 4, 10, rng);
    int alpha = oracle::independence_number(g);
    for (int t : {alpha, alpha + 1}) {
      auto r = independent_set_atleast(g, t);
      ASSERT_EQ(r.decision, t <= alpha ? Decision::Yes : Decision::No);
      ASSERT_TRUE(is_independent(g, r.nodes));
    }
  }
}

TEST(IndependentSet, CaroWeiBound) {
  EXPECT_EQ(caro_wei_bound(Graph(5)), 5);
  EXPECT_EQ(caro_wei_bound(complete_graph(4)), 1);
  EXPECT_EQ(caro_wei_bound(cycle_graph(4)), 2);  // 16 / 12
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng.uniform(1, 25), static_cast<std::uint64_t>(rng.uniform(1, 9)), 10, rng);
    auto r = independent_set_atleast(g, caro_wei_bound(g));
    ASSERT_EQ(r.decision, Decision::Yes);
    ASSERT_TRUE(is_independent(g, r.nodes));
  }
}
