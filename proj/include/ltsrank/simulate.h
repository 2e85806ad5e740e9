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

// A scripted annotator for exercising the ranking pipeline without people.

#ifndef LTSRANK_SIMULATE_H_
#define LTSRANK_SIMULATE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ltsrank/comparisons.h"
#include "ltsrank/metrics.h"
#include "ltsrank/pairs.h"

namespace ltsrank {

struct SyntheticAnnotatorOptions {
  // The annotator picks the design with the smaller value of this metric as
  // the less complex one; equal values go to the smaller design id.
  Metric metric = Metric::kAlbin;
  // Probability of flipping each choice.
  double noise = 0.1;
  int annotators = 3;
  std::uint64_t seed = 0;
};

// One record per (annotator, pair), annotators "sim1", "sim2", ... each
// walking `pairs` in order. Reported times are random but plausible. Throws
// Error when a pair names a design without a report, noise is outside
// [0, 1], or annotators < 1.
std::vector<ComparisonRecord> SimulateAnnotations(
    std::span<const MetricReport> reports,
    std::span<const AnnotationPair> pairs,
    const SyntheticAnnotatorOptions& options);

}  // namespace ltsrank

#endif  // LTSRANK_SIMULATE_H_
