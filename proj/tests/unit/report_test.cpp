#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lip/report.hpp"

using namespace lip;

TEST(Report, RunFieldsInOrder) {
  const GraphPair pair(lip::testing::complete(3));
  AlgParams p;
  p.record_trace = true;
  const auto r = run(pair, p);
  const auto j = to_json(pair, r, 7u, 2u, true);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected{"n",        "mG",         "mGPrime", "dMin",   "sigmaSeed",
                                          "targetLen", "bestLen",   "bestPath", "rounds", "stopReason",
                                          "s1Size",   "s2Size",     "workCounter", "trace"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["bestLen"], 1);
  EXPECT_EQ(j["sigmaSeed"], 7);
  EXPECT_EQ(j["trace"][0]["action"], "StartNewPath");
  EXPECT_FALSE(to_json(pair, r, std::nullopt, std::nullopt, false).contains("trace"));
  EXPECT_TRUE(to_json(pair, r, std::nullopt, std::nullopt, false)["sigmaSeed"].is_null());
}

TEST(Report, CertificateWitnessOnlyWhenPresent) {
  Certificate c;
  c.kind = "ndlambda";
  c.lambda = 2.0;
  c.conditions.push_back({"a", 1.0, 2.0, true, true, true, std::nullopt, std::nullopt});
  c.conditions.push_back({"b", 3.0, 2.0, true, false, true, std::vector<Vertex>{1}, std::vector<Vertex>{2}});
  const auto j = to_json(c);
  EXPECT_EQ(j["certificate"], "ndlambda");
  EXPECT_FALSE(j["conditions"][0].contains("witnessX"));
  EXPECT_EQ(j["conditions"][1]["witnessY"][0], 2);
  EXPECT_FALSE(j.contains("samples"));
}

TEST(Report, ConditionReportConclusiveness) {
  ConditionReport r;
  r.exhaustive = false;
  r.cond1_holds = r.cond2_holds = true;
  r.worst1 = r.worst2 = {VertexSet(3), VertexSet(3), 0};
  EXPECT_FALSE(to_json(r)["conclusive"].get<bool>());
  r.cond2_holds = false;
  EXPECT_TRUE(to_json(r)["conclusive"].get<bool>());
}

TEST(Report, StableSerialisation) {
  const GraphPair pair(lip::testing::petersen());
  const auto r = run(pair);
  EXPECT_EQ(to_json(pair, r, std::nullopt, std::nullopt, false).dump(),
            to_json(pair, run(pair), std::nullopt, std::nullopt, false).dump());
}
