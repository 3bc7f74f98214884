#include <gtest/gtest.h>

#include "json.hpp"
#include "tlab/generators.hpp"
#include "tlab/laboratory.hpp"

using namespace tlab;

TEST(Observation, K4MinusEdge) {
  auto rep = campaign_observation({});
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.count(CheckStatus::Pass), 8);
  ASSERT_TRUE(rep.find("outerplanar/z1/part1/len0/b"));
  EXPECT_EQ(rep.find("outerplanar/z1/part1/len2/b")->detail, "2 cases outside class, 10 adjacent pairs without claim");
  EXPECT_EQ(rep.find("outerplanar/z1/part1/len3/a")->detail, "4 cases in class");
}

TEST(Observation, CactusChecksOnlyCaseB) {
  ObservationOptions o;
  o.class_name = "cactus";
  o.C = 5;
  auto rep = campaign_observation(o);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.count(CheckStatus::Pass), 4);
  EXPECT_EQ(rep.count(CheckStatus::Skipped), 4);
}

TEST(Observation, CaseBNeedsMaximality) {
  // Q = path 0-1-2 is not edge-maximal; joining 0 and 2 through x closes a
  // 4-cycle, which is outerplanar.
  Graph q = path_graph(2);
  EdgePartition w(q, 1);
  Graph s = detail::extra_path_graph(q, w, 0, 0, 0, 2);
  EXPECT_EQ(s.num_edges(), 4);
  EXPECT_TRUE(is_outerplanar(s));
}

TEST(Conditions, AllPass) {
  auto rep = campaign_conditions();
  EXPECT_TRUE(rep.ok());
  for (const char* name : {"witness/a/eulerian", "witness/b/pseudoforest", "witness/c/forest", "refusal/forest"}) {
    ASSERT_TRUE(rep.find(name)) << name;
    EXPECT_EQ(rep.find(name)->status, CheckStatus::Pass) << name;
  }
  EXPECT_EQ(rep.find("closure/pseudoforest/one-sum")->status, CheckStatus::Skipped);
}

TEST(Forward, DefaultCampaign) {
  auto rep = campaign_reduction_forward();
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.count(CheckStatus::Pass), 12);
  EXPECT_EQ(rep.count(CheckStatus::Skipped), 4);
  EXPECT_NE(rep.find("forward/outerplanar/petersen")->detail.find("class 2"), std::string::npos);
}

TEST(Claims, Micro) {
  auto rep = campaign_claims_micro();
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.count(CheckStatus::Pass), 5);
}

TEST(Report, SortedAndDeterministic) {
  CampaignReport r;
  r.campaign = "demo";
  r.pass("b");
  r.fail("a", "broken", cycle_graph(3));
  r.skip("c", "why");
  r.seconds = 1.25;
  std::string text = format_report(r, ReportFormat::Text);
  EXPECT_EQ(text,
            "campaign demo\nseed 0\n"
            "fail a: broken\n  | 3 3\n  | 0 1\n  | 0 2\n  | 1 2\n"
            "pass b\n"
            "skipped c: why\n"
            "summary pass 1 fail 1 skipped 1\n");
  EXPECT_EQ(format_report(r, ReportFormat::Text, true).find("seconds 1.25"), text.size());
  EXPECT_FALSE(r.ok());

  auto j = nlohmann::json::parse(format_report(r, ReportFormat::Structured));
  EXPECT_EQ(j["checks"][0]["name"], "a");
  EXPECT_EQ(j["checks"][0]["counterexample"], "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(Report, CampaignsAreReproducible) {
  EXPECT_EQ(format_report(campaign_conditions(), ReportFormat::Text),
            format_report(campaign_conditions(), ReportFormat::Text));
  ConditionsOptions other;
  other.seed = 99;
  EXPECT_TRUE(campaign_conditions(other).ok());
}

TEST(Dot, Triangle) {
  std::string dot = emit_dot(cycle_graph(3));
  EXPECT_EQ(dot, "graph G {\n  node [shape=circle];\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST(Dot, RelaxedK4Instance) {
  auto inst = reduce(complete_graph(4), builtin_descriptor("outerplanar"), 3, ReduceMode::Relaxed);
  std::string dot = emit_dot(inst);
  std::size_t dashed = 0, pos = 0;
  while ((pos = dot.find("style=dashed", pos)) != std::string::npos) ++dashed, ++pos;
  EXPECT_EQ(dashed, 12u);  // 6 connector pairs
  EXPECT_NE(dot.find("label=\"w6\""), std::string::npos);
  EXPECT_EQ(dot, emit_dot(inst));
}

TEST(Dot, GadgetEdgesGray) {
  auto inst = reduce(path_graph(1), builtin_descriptor("outerplanar"), 1, ReduceMode::Paper);
  std::string dot = emit_dot(inst);
  std::size_t gray = 0, pos = 0;
  while ((pos = dot.find("color=gray", pos)) != std::string::npos) ++gray, ++pos;
  EXPECT_EQ(gray, static_cast<std::size_t>(inst.gadget.h.num_edges()));
}
