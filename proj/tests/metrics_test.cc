// Copyright 2026 The ltsrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ltsrank/metrics.h"

#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "ltsrank/error.h"
#include "oracles.h"

namespace ltsrank {
namespace {

LtsDesign Chain3() { return {"chain", 3, 0, {{0, "a", 1}, {1, "b", 2}}}; }
LtsDesign Triangle() {
  return {"tri", 3, 0, {{0, "a", 1}, {1, "b", 2}, {2, "c", 0}}};
}
LtsDesign Single() { return {"one", 1, 0, {}}; }

MetricReport WithAlbin(std::string id, int albin) {
  MetricReport r;
  r.design_id = std::move(id);
  r.albin = albin;
  return r;
}

oracle::IntMatrix Undirected(const LtsDesign& d) {
  return oracle::UndirectedAdjacency(d);
}

TEST(CyclomaticTest, Examples) {
  EXPECT_EQ(Cyclomatic(Chain3()), 1);
  EXPECT_EQ(Cyclomatic(Triangle()), 2);
  EXPECT_EQ(Cyclomatic({"", 4, 0, {{0, "a", 1}, {2, "b", 3}}}), 2);
}

TEST(CyclomaticTest, CountsSelfLoopsAndParallelTransitions) {
  // E=4 (loop + two parallel labels + one more), N=2, P=1.
  const LtsDesign d{"", 2, 0, {{0, "t", 0}, {0, "a", 1}, {0, "b", 1}, {1, "c", 0}}};
  EXPECT_EQ(Cyclomatic(d), 4);
}

TEST(StateSpaceSizeTest, Examples) {
  EXPECT_EQ(StateSpaceSize(Single()), 1);
  EXPECT_EQ(StateSpaceSize(Triangle()), 3);
  EXPECT_EQ(StateSpaceSize(GenerateRandom(12, 1.5, 3, 42)), 12);
}

TEST(AvgBranchingTest, Examples) {
  EXPECT_DOUBLE_EQ(AvgBranching(Chain3()), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(AvgBranching(Triangle()), 1.0);
  EXPECT_DOUBLE_EQ(
      AvgBranching({"", 4, 0, {{0, "a", 1}, {0, "b", 2}, {0, "c", 3}}}), 0.75);
  EXPECT_DOUBLE_EQ(AvgBranching(Single()), 0.0);
  EXPECT_THROW(AvgBranching({"", 0, 0, {}}), Error);
}

TEST(MaxDepthTest, Examples) {
  EXPECT_EQ(MaxDepth(Chain3()), 2);
  EXPECT_EQ(MaxDepth(Triangle()), 2);
  EXPECT_EQ(MaxDepth({"", 1, 0, {{0, "a", 0}}}), 0);
  // Measured from the initial state, not state 0.
  EXPECT_EQ(MaxDepth({"", 3, 2, {{0, "a", 1}, {1, "b", 2}}}), 0);
}

TEST(AlbinTest, Examples) {
  EXPECT_EQ(Albin(Single()), 1);
  EXPECT_EQ(Albin(Triangle()), 11);
  EXPECT_EQ(Albin(Chain3()), 9);
}

TEST(ModularityTest, DelegatesToGirvanNewman) {
  // Two directed triangles bridged 2 -> 3.
  const LtsDesign barbell{"", 6, 0,
                          {{0, "a", 1}, {1, "a", 2}, {2, "a", 0}, {2, "b", 3},
                           {3, "a", 4}, {4, "a", 5}, {5, "a", 3}}};
  EXPECT_NEAR(Modularity(barbell), 5.0 / 14.0, 1e-12);
  EXPECT_EQ(Modularity(Single()), 0.0);
  EXPECT_EQ(Modularity(Triangle()), 0.0);
}

TEST(RedundancyTest, SharedTarget) {
  const Redundancy r = ComputeRedundancy({"", 3, 0, {{0, "a", 2}, {1, "b", 2}}});
  // (0,1): {2} vs {2} -> 1; (0,2) and (1,2): {2} vs {} -> 0.
  EXPECT_DOUBLE_EQ(r.mean_jaccard, 1.0 / 3.0);
  EXPECT_EQ(r.identical_successor_pairs, 1);
}

TEST(RedundancyTest, ChainHasNone) {
  const Redundancy r = ComputeRedundancy(Chain3());
  EXPECT_DOUBLE_EQ(r.mean_jaccard, 0.0);
  EXPECT_EQ(r.identical_successor_pairs, 0);
}

TEST(RedundancyTest, IdenticalSuccessorsEverywhere) {
  const Redundancy r = ComputeRedundancy(
      {"", 2, 0, {{0, "a", 0}, {0, "b", 1}, {1, "a", 0}, {1, "b", 1}}});
  EXPECT_DOUBLE_EQ(r.mean_jaccard, 1.0);
  EXPECT_EQ(r.identical_successor_pairs, 1);
}

TEST(RedundancyTest, DeadlocksAreMutuallyRedundant) {
  const Redundancy r = ComputeRedundancy({"", 3, 0, {}});
  EXPECT_DOUBLE_EQ(r.mean_jaccard, 1.0);
  EXPECT_EQ(r.identical_successor_pairs, 0);
  EXPECT_EQ(ComputeRedundancy(Single()).mean_jaccard, 0.0);
}

TEST(ComputeAllTest, IdentitiesOnExamples) {
  for (const LtsDesign& d : {Single(), Triangle(), Chain3()}) {
    const MetricReport r = ComputeAll(d);
    EXPECT_EQ(r.design_id, d.id);
    EXPECT_EQ(r.cyclomatic,
              r.num_transitions - r.num_states + 2 * r.num_components);
    EXPECT_EQ(r.albin, r.num_states + 2 * r.num_transitions + r.longest_path);
    EXPECT_EQ(r.albin, Albin(d));
  }
  EXPECT_EQ(ComputeAll(Triangle()).albin, 11);
}

TEST(ComputeAllTest, IdentitiesOnGeneratedDesigns) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const LtsDesign d = i % 2 ? oracle::RandomRawDesign(rng, 14)
                              : GenerateRandom(1 + i % 16, 0.2 + (i % 10) * 0.18,
                                               1 + i % 4, i);
    const MetricReport r = ComputeAll(d);
    ASSERT_EQ(r.cyclomatic,
              r.num_transitions - r.num_states + 2 * r.num_components);
    ASSERT_EQ(r.albin, r.num_states + 2 * r.num_transitions + r.longest_path);
    ASSERT_GE(r.redundancy_j, 0.0);
    ASSERT_LE(r.redundancy_j, 1.0);
    ASSERT_GE(r.modularity_q, -1.0);
    ASSERT_LE(r.modularity_q, 1.0);
  }
}

TEST(ComputeAllTest, MatchesOraclesOnSmallDesigns) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 150; ++i) {
    const LtsDesign d = oracle::RandomRawDesign(rng, 9);
    const MetricReport r = ComputeAll(d);
    ASSERT_EQ(r.num_components, oracle::WeakComponentCount(d));
    ASSERT_EQ(r.cyclomatic, oracle::Cyclomatic(d));
    ASSERT_EQ(r.max_depth, oracle::MaxDepth(d));
    ASSERT_EQ(r.longest_path, oracle::LongestSimplePath(d));
    ASSERT_EQ(r.albin, oracle::Albin(d));
    ASSERT_NEAR(r.modularity_q, oracle::GirvanNewman(Undirected(d)).best_q,
                1e-9);
    const auto redundancy = oracle::Redundancy(d);
    ASSERT_NEAR(r.redundancy_j, redundancy.mean, 1e-12);
    ASSERT_EQ(r.identical_successor_pairs, redundancy.identical_pairs);
  }
}

TEST(ComputeAllTest, IsolatedStateMetamorphicRelation) {
  for (int seed = 0; seed < 50; ++seed) {
    const LtsDesign d = GenerateRandom(2 + seed % 12, 1.2, 3, seed);
    LtsDesign grown = d;
    ++grown.num_states;
    const MetricReport before = ComputeAll(d);
    const MetricReport after = ComputeAll(grown);
    ASSERT_EQ(after.num_states, before.num_states + 1);
    ASSERT_EQ(after.num_components, before.num_components + 1);
    ASSERT_EQ(after.state_space_size, before.state_space_size + 1);
    ASSERT_EQ(after.cyclomatic, before.cyclomatic + 1);
    ASSERT_EQ(after.max_depth, before.max_depth);
  }
}

TEST(ComputeAllTest, RejectsInvalidDesign) {
  EXPECT_THROW(ComputeAll({"", 2, 0, {{0, "a", 5}}}), Error);
}

TEST(RankCorpusTest, AlbinAscending) {
  const std::vector<MetricReport> reports = {
      WithAlbin("tri", 11), WithAlbin("chain", 9), WithAlbin("one", 1)};
  const RankedCorpus ranked =
      RankCorpus(reports, Metric::kAlbin, Direction::kAscending);
  ASSERT_EQ(ranked.entries.size(), 3u);
  EXPECT_EQ(ranked.entries[0], (RankedEntry{"one", 1, 1}));
  EXPECT_EQ(ranked.entries[1], (RankedEntry{"chain", 9, 2}));
  EXPECT_EQ(ranked.entries[2], (RankedEntry{"tri", 11, 3}));

  const RankedCorpus desc =
      RankCorpus(reports, "albin", Direction::kDescending);
  EXPECT_EQ(desc.entries[0].design_id, "tri");
  EXPECT_EQ(desc.entries[0].rank, 1.0);
}

TEST(RankCorpusTest, AllTiedShareMiddleRank) {
  const std::vector<MetricReport> reports = {
      WithAlbin("a", 4), WithAlbin("b", 4), WithAlbin("c", 4), WithAlbin("d", 4)};
  const RankedCorpus ranked =
      RankCorpus(reports, Metric::kAlbin, Direction::kAscending);
  for (const RankedEntry& e : ranked.entries) EXPECT_EQ(e.rank, 2.5);
  // Stable: input order kept among ties.
  EXPECT_EQ(ranked.entries[0].design_id, "a");
  EXPECT_EQ(ranked.entries[3].design_id, "d");
}

TEST(RankCorpusTest, AverageRanksForPartialTies) {
  const std::vector<MetricReport> reports = {
      WithAlbin("w", 5), WithAlbin("x", 3), WithAlbin("y", 3), WithAlbin("z", 1)};
  const RankedCorpus ranked =
      RankCorpus(reports, Metric::kAlbin, Direction::kAscending);
  EXPECT_EQ(ranked.entries[0], (RankedEntry{"z", 1, 1}));
  EXPECT_EQ(ranked.entries[1], (RankedEntry{"x", 3, 2.5}));
  EXPECT_EQ(ranked.entries[2], (RankedEntry{"y", 3, 2.5}));
  EXPECT_EQ(ranked.entries[3], (RankedEntry{"w", 5, 4}));
}

TEST(RankCorpusTest, UnknownMetric) {
  const std::vector<MetricReport> reports = {WithAlbin("a", 1)};
  EXPECT_THROW(RankCorpus(reports, "elegance", Direction::kAscending), Error);
}

TEST(RankCorpusTest, PermutationAndIdempotent) {
  std::vector<MetricReport> reports;
  for (int i = 0; i < 25; ++i) {
    reports.push_back(ComputeAll(GenerateRandom(2 + i % 9, 1.0 + (i % 3) * 0.4,
                                                2, i, "d" + std::to_string(i))));
  }
  for (Metric metric : kAllMetrics) {
    const RankedCorpus once =
        RankCorpus(reports, metric, Direction::kAscending);
    std::multiset<std::string> ids;
    std::vector<MetricReport> reordered;
    for (const RankedEntry& e : once.entries) {
      ids.insert(e.design_id);
      for (const MetricReport& r : reports)
        if (r.design_id == e.design_id) reordered.push_back(r);
    }
    ASSERT_EQ(ids.size(), reports.size());
    ASSERT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(),
              reports.size());
    const RankedCorpus twice =
        RankCorpus(reordered, metric, Direction::kAscending);
    ASSERT_EQ(twice.entries, once.entries);
  }
}

TEST(MetricNamesTest, RoundTrip) {
  for (Metric m : kAllMetrics) EXPECT_EQ(ParseMetric(MetricName(m)), m);
  EXPECT_EQ(ParseMetric("V"), Metric::kCyclomatic);
  EXPECT_EQ(ParseMetric("modularity_q"), Metric::kModularity);
  EXPECT_FALSE(ParseMetric("nope").has_value());
}

TEST(MetricsCsvTest, HeaderAndRow) {
  std::ostringstream out;
  const std::vector<MetricReport> reports = {ComputeAll(Triangle())};
  WriteMetricsCsv(out, reports);
  EXPECT_EQ(out.str(),
            "design_id,N,E,P,V,state_space,avg_branching,max_depth,L,albin,"
            "modularity_q,redundancy_j,identical_pairs\n"
            "tri,3,3,1,2,3,1,2,2,11,0,0,0\n");
}

TEST(MetricsCsvTest, EscapesDesignId) {
  MetricReport r = ComputeAll(Single());
  r.design_id = "a,b";
  EXPECT_EQ(MetricsCsvRow(r).substr(0, 6), "\"a,b\",");
}

}  // namespace
}  // namespace ltsrank
