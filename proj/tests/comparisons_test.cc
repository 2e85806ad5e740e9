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

#include "ltsrank/comparisons.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "ltsrank/error.h"
#include "ltsrank/pairs.h"

namespace ltsrank {
namespace {

ComparisonRecord Record(std::string a, std::string b, Choice choice,
                        std::string annotator = "ann") {
  ComparisonRecord r;
  r.pair_id = 1;
  r.design_a = std::move(a);
  r.design_b = std::move(b);
  r.annotator_id = std::move(annotator);
  r.choice = choice;
  r.time_a_ms = 1000;
  r.time_b_ms = 1500;
  r.total_ms = 3000;
  r.timestamp = "2026-01-02T03:04:05Z";
  return r;
}

TEST(AggregateTest, RepeatedChoicesAccumulate) {
  const std::vector<ComparisonRecord> records(3, Record("a", "b", Choice::kA));
  const ComparisonMatrix m = Aggregate(records, Polarity::kPreference);
  ASSERT_EQ(m.ids, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.wins(0, 1), 3);
  EXPECT_EQ(m.wins(1, 0), 0);
  EXPECT_EQ(m.Comparisons()(0, 1), 3);
}

TEST(AggregateTest, SplitDecision) {
  const std::vector<ComparisonRecord> records = {
      Record("a", "b", Choice::kA, "x"), Record("a", "b", Choice::kB, "y")};
  const ComparisonMatrix m = Aggregate(records, Polarity::kPreference);
  EXPECT_EQ(m.wins(0, 1), 1);
  EXPECT_EQ(m.wins(1, 0), 1);
}

TEST(AggregateTest, PolarityFlipTransposes) {
  const std::vector<ComparisonRecord> records = {
      Record("a", "b", Choice::kA), Record("b", "c", Choice::kA),
      Record("c", "a", Choice::kB), Record("a", "c", Choice::kA),
      Record("b", "a", Choice::kB)};
  const ComparisonMatrix pref = Aggregate(records, Polarity::kPreference);
  const ComparisonMatrix cplx = Aggregate(records, Polarity::kComplexity);
  EXPECT_EQ(cplx.polarity, Polarity::kComplexity);
  EXPECT_TRUE(cplx.wins.isApprox(pref.wins.transpose()));
  EXPECT_EQ(pref.wins.diagonal().sum(), 0);
}

TEST(AggregateTest, ComplexityCreditsTheOtherDesign) {
  // Picking "a" as the less complex one means "b" wins on complexity.
  const std::vector<ComparisonRecord> records = {Record("a", "b", Choice::kA)};
  const ComparisonMatrix m = Aggregate(records, Polarity::kComplexity);
  EXPECT_EQ(m.wins(m.IndexOf("b"), m.IndexOf("a")), 1);
}

TEST(AggregateTest, ExplicitItemsAndUnknownDesign) {
  const std::vector<std::string> items = {"c", "b", "a"};
  const std::vector<ComparisonRecord> records = {Record("a", "b", Choice::kB)};
  const ComparisonMatrix m = Aggregate(records, items, Polarity::kPreference);
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.wins(1, 2), 1);
  EXPECT_EQ(m.IndexOf("zzz"), -1);

  const std::vector<ComparisonRecord> bad = {Record("a", "q", Choice::kA)};
  EXPECT_THROW(Aggregate(bad, items, Polarity::kPreference), Error);
  const std::vector<std::string> dup = {"a", "a"};
  EXPECT_THROW(Aggregate({}, dup, Polarity::kPreference), Error);
}

TEST(RecordTest, Invariants) {
  EXPECT_NO_THROW(CheckRecord(Record("a", "b", Choice::kA)));
  EXPECT_THROW(CheckRecord(Record("a", "a", Choice::kA)), Error);
  ComparisonRecord negative = Record("a", "b", Choice::kA);
  negative.time_b_ms = -1;
  EXPECT_THROW(CheckRecord(negative), Error);
}

TEST(RecordTest, JsonRoundTrip) {
  const ComparisonRecord r = Record("d1", "d2", Choice::kB, "ann-7");
  const nlohmann::ordered_json json = ToJson(r);
  EXPECT_EQ(json.dump(),
            R"({"pair_id":1,"design_a":"d1","design_b":"d2",)"
            R"("annotator_id":"ann-7","choice":"B","time_a_ms":1000,)"
            R"("time_b_ms":1500,"total_ms":3000,)"
            R"("timestamp":"2026-01-02T03:04:05Z"})");
  EXPECT_EQ(RecordFromJson(json), r);
  EXPECT_THROW(RecordFromJson(nlohmann::ordered_json::parse("{}")), Error);
  EXPECT_THROW(RecordFromJson(nlohmann::ordered_json::parse(
                   R"({"pair_id":"x","design_a":"a","design_b":"b",)"
                   R"("annotator_id":"z","choice":"A","time_a_ms":1,)"
                   R"("time_b_ms":1,"total_ms":1})")),
               Error);
}

TEST(RecordTest, CsvRoundTrip) {
  const std::vector<ComparisonRecord> records = {
      Record("d1", "d2", Choice::kA, "x"),
      Record("with,comma", "d\"q", Choice::kB, "y")};
  const std::string csv = WriteRecordsCsv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), RecordsCsvHeader());
  EXPECT_EQ(ParseRecordsCsv(csv), records);
}

TEST(RecordTest, CsvErrorsCarryLineNumbers) {
  const std::string header(RecordsCsvHeader());
  EXPECT_THROW(ParseRecordsCsv(""), ParseError);
  EXPECT_THROW(ParseRecordsCsv("a,b,c\n"), ParseError);
  try {
    ParseRecordsCsv(header + "\n1,a,b,x,A,1,2,3,t\n2,a,b,x,C,1,2,3,t\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    ParseRecordsCsv(header + "\n1,a,b,x,A,1,-2,3,t\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseRecordsCsv(header + "\n1,a,b\n"), ParseError);
  EXPECT_THROW(ParseRecordsCsv(header + "\nx,a,b,x,A,1,2,3,t\n"), ParseError);
}

TEST(PolarityTest, Names) {
  EXPECT_EQ(ParsePolarity("complexity"), Polarity::kComplexity);
  EXPECT_EQ(ParsePolarity(PolarityName(Polarity::kPreference)),
            Polarity::kPreference);
  EXPECT_THROW(ParsePolarity("simplicity"), Error);
}

std::vector<ComparisonRecord> Answers(const std::string& annotator,
                                      std::vector<Choice> choices) {
  std::vector<ComparisonRecord> out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    out.push_back(Record("d" + std::to_string(i), "e" + std::to_string(i),
                         choices[i], annotator));
  }
  return out;
}

TEST(AgreementTest, Identical) {
  const std::vector<Choice> c = {Choice::kA, Choice::kB, Choice::kA};
  std::vector<ComparisonRecord> all = Answers("x", c);
  for (auto& r : Answers("y", c)) all.push_back(r);
  for (auto& r : Answers("z", c)) all.push_back(r);
  EXPECT_DOUBLE_EQ(AgreementPercent(all), 100.0);
}

TEST(AgreementTest, Opposite) {
  std::vector<ComparisonRecord> all = Answers("x", {Choice::kA, Choice::kA});
  for (auto& r : Answers("y", {Choice::kB, Choice::kB})) all.push_back(r);
  EXPECT_DOUBLE_EQ(AgreementPercent(all), 0.0);
}

TEST(AgreementTest, OneDeviant) {
  const std::vector<Choice> same(10, Choice::kA);
  const std::vector<Choice> other(10, Choice::kB);
  std::vector<ComparisonRecord> all = Answers("x", same);
  for (auto& r : Answers("y", same)) all.push_back(r);
  for (auto& r : Answers("z", other)) all.push_back(r);
  EXPECT_NEAR(AgreementPercent(all), 100.0 / 3.0, 1e-12);
}

TEST(AgreementTest, PairOrderDoesNotMatter) {
  std::vector<ComparisonRecord> all = {Record("a", "b", Choice::kA, "x"),
                                       Record("b", "a", Choice::kB, "y")};
  EXPECT_DOUBLE_EQ(AgreementPercent(all), 100.0);
}

TEST(AgreementTest, PartialOverlap) {
  // x and y share 2 pairs and agree on 1; z shares nothing.
  std::vector<ComparisonRecord> all = {
      Record("a", "b", Choice::kA, "x"), Record("c", "d", Choice::kA, "x"),
      Record("a", "b", Choice::kA, "y"), Record("c", "d", Choice::kB, "y"),
      Record("e", "f", Choice::kA, "y"), Record("g", "h", Choice::kA, "z")};
  EXPECT_DOUBLE_EQ(AgreementPercent(all), 50.0);
}

TEST(AgreementTest, Errors) {
  EXPECT_THROW(AgreementPercent(Answers("x", {Choice::kA})), Error);
  std::vector<ComparisonRecord> disjoint = {Record("a", "b", Choice::kA, "x"),
                                            Record("c", "d", Choice::kA, "y")};
  EXPECT_THROW(AgreementPercent(disjoint), Error);
}

TEST(SamplePairsTest, ExhaustiveCase) {
  const PairSample s = SamplePairs(48, 1128, 5);
  EXPECT_EQ(s.pairs.size(), 1128u);
  std::set<ItemPair> unique(s.pairs.begin(), s.pairs.end());
  EXPECT_EQ(unique.size(), 1128u);
  EXPECT_TRUE(s.connected);
}

TEST(SamplePairsTest, Deterministic) {
  const PairSample a = SamplePairs(48, 324, 2026);
  const PairSample b = SamplePairs(48, 324, 2026);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_NE(a.pairs, SamplePairs(48, 324, 2027).pairs);
}

TEST(SamplePairsTest, DistinctOrderedAndConnected) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PairSample s = SamplePairs(48, 324, seed);
    ASSERT_EQ(s.pairs.size(), 324u);
    std::set<ItemPair> unique;
    for (const ItemPair& p : s.pairs) {
      ASSERT_LT(p.first, p.second);
      ASSERT_GE(p.first, 0);
      ASSERT_LT(p.second, 48);
      unique.insert(p);
    }
    ASSERT_EQ(unique.size(), 324u);
    ASSERT_TRUE(s.connected);
    ASSERT_TRUE(PairsConnected(48, s.pairs));
  }
}

TEST(SamplePairsTest, ResamplesUntilConnected) {
  // 7 pairs over 8 items must form a spanning tree; few draws do.
  const PairSample s = SamplePairs(8, 7, 1);
  EXPECT_GE(s.attempts, 1);
  if (s.connected) {
    EXPECT_TRUE(PairsConnected(8, s.pairs));
  } else {
    EXPECT_EQ(s.attempts, kMaxPairResamples);
  }
  const PairSample sparse = SamplePairs(10, 3, 1);
  EXPECT_FALSE(sparse.connected);
  EXPECT_EQ(sparse.attempts, 1);
}

TEST(SamplePairsTest, Uniformity) {
  // Below K - 1 pairs no connectivity redraw happens, so each of the 6
  // pairs over 4 items lands in a 2-pair draw with probability 1/3.
  std::map<ItemPair, int> counts;
  const int draws = 6000;
  for (int seed = 0; seed < draws; ++seed) {
    for (const ItemPair& p : SamplePairs(4, 2, seed).pairs) ++counts[p];
  }
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [pair, count] : counts) {
    EXPECT_NEAR(count / double(draws), 2.0 / 6.0, 0.03);
  }
}

TEST(LabelPairsTest, NamesAndNumbers) {
  const std::vector<std::string> ids = {"x", "y", "z"};
  const std::vector<AnnotationPair> labeled = LabelPairs({{0, 2}, {1, 2}}, ids);
  EXPECT_EQ(labeled, (std::vector<AnnotationPair>{{1, "x", "z"}, {2, "y", "z"}}));
  EXPECT_THROW(LabelPairs({{0, 3}}, ids), Error);
}

TEST(SamplePairsTest, Errors) {
  EXPECT_THROW(SamplePairs(48, 1129, 0), Error);
  EXPECT_THROW(SamplePairs(4, -1, 0), Error);
  EXPECT_TRUE(SamplePairs(4, 0, 0).pairs.empty());
  EXPECT_TRUE(SamplePairs(1, 0, 0).connected);
}

}  // namespace
}  // namespace ltsrank
