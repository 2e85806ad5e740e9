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

#include "ltsrank/simulate.h"

#include <gtest/gtest.h>

#include "ltsrank/error.h"

namespace ltsrank {
namespace {

std::vector<MetricReport> Reports() {
  std::vector<MetricReport> reports;
  for (int i = 0; i < 6; ++i) {
    MetricReport r;
    r.design_id = "d" + std::to_string(i);
    r.albin = 10 * (6 - i);  // d5 simplest
    r.num_states = 3;        // all tied
    reports.push_back(r);
  }
  return reports;
}

std::vector<AnnotationPair> AllPairs() {
  std::vector<AnnotationPair> pairs;
  int id = 1;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      pairs.push_back({id++, "d" + std::to_string(a), "d" + std::to_string(b)});
  return pairs;
}

TEST(SimulateAnnotationsTest, NoiselessFollowsMetric) {
  SyntheticAnnotatorOptions options;
  options.noise = 0.0;
  options.annotators = 2;
  const auto reports = Reports();
  const auto pairs = AllPairs();
  const auto records = SimulateAnnotations(reports, pairs, options);
  ASSERT_EQ(records.size(), 2 * pairs.size());
  for (const ComparisonRecord& r : records) {
    // Higher index means smaller Albin, so design_b is always simpler.
    EXPECT_EQ(r.choice, Choice::kB);
    EXPECT_NO_THROW(CheckRecord(r));
    EXPECT_GE(r.total_ms, r.time_a_ms + r.time_b_ms);
  }
  EXPECT_EQ(records.front().annotator_id, "sim1");
  EXPECT_EQ(records.back().annotator_id, "sim2");
  EXPECT_DOUBLE_EQ(AgreementPercent(records), 100.0);
}

TEST(SimulateAnnotationsTest, TiesGoToSmallerId) {
  SyntheticAnnotatorOptions options;
  options.noise = 0.0;
  options.metric = Metric::kStateSpaceSize;
  const auto reports = Reports();
  const auto pairs = AllPairs();
  for (const ComparisonRecord& r :
       SimulateAnnotations(reports, pairs, options)) {
    EXPECT_EQ(r.chosen(), std::min(r.design_a, r.design_b));
  }
}

TEST(SimulateAnnotationsTest, FullNoiseInvertsEveryChoice) {
  SyntheticAnnotatorOptions options;
  options.noise = 1.0;
  const auto reports = Reports();
  const auto pairs = AllPairs();
  for (const ComparisonRecord& r :
       SimulateAnnotations(reports, pairs, options)) {
    EXPECT_EQ(r.choice, Choice::kA);
  }
}

TEST(SimulateAnnotationsTest, NoiseRateAndDeterminism) {
  SyntheticAnnotatorOptions options;
  options.annotators = 200;
  options.seed = 4;
  const auto reports = Reports();
  const auto pairs = AllPairs();
  const auto records = SimulateAnnotations(reports, pairs, options);
  int flipped = 0;
  for (const ComparisonRecord& r : records) flipped += r.choice == Choice::kA;
  // 3000 Bernoulli(0.1) draws: sd ~ 0.0055.
  EXPECT_NEAR(flipped / double(records.size()), 0.1, 0.025);
  EXPECT_EQ(SimulateAnnotations(reports, pairs, options), records);
}

TEST(SimulateAnnotationsTest, Errors) {
  const auto reports = Reports();
  const std::vector<AnnotationPair> stranger = {{1, "d0", "zz"}};
  EXPECT_THROW(SimulateAnnotations(reports, stranger, {}), Error);
  SyntheticAnnotatorOptions options;
  options.noise = 1.5;
  EXPECT_THROW(SimulateAnnotations(reports, AllPairs(), options), Error);
  options.noise = 0.1;
  options.annotators = 0;
  EXPECT_THROW(SimulateAnnotations(reports, AllPairs(), options), Error);
}

}  // namespace
}  // namespace ltsrank
