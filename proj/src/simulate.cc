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

#include <map>
#include <random>
#include <string>

#include "ltsrank/error.h"

namespace ltsrank {

std::vector<ComparisonRecord> SimulateAnnotations(
    std::span<const MetricReport> reports,
    std::span<const AnnotationPair> pairs,
    const SyntheticAnnotatorOptions& options) {
  if (!(options.noise >= 0.0 && options.noise <= 1.0)) {
    throw Error("noise must lie in [0, 1]");
  }
  if (options.annotators < 1) throw Error("need at least one annotator");

  std::map<std::string, double, std::less<>> value;
  for (const MetricReport& r : reports) {
    value[r.design_id] = MetricValue(r, options.metric);
  }
  auto lookup = [&](const std::string& id) {
    const auto it = value.find(id);
    if (it == value.end()) {
      throw Error("pair names design '" + id + "' with no metric report");
    }
    return it->second;
  };

  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution flip(options.noise);
  std::uniform_int_distribution<std::int64_t> look(500, 8000);
  std::uniform_int_distribution<std::int64_t> idle(0, 2000);

  std::vector<ComparisonRecord> records;
  records.reserve(pairs.size() * static_cast<std::size_t>(options.annotators));
  for (int a = 1; a <= options.annotators; ++a) {
    for (const AnnotationPair& pair : pairs) {
      const double va = lookup(pair.design_a);
      const double vb = lookup(pair.design_b);
      const bool a_simpler =
          va < vb || (va == vb && pair.design_a < pair.design_b);
      ComparisonRecord r;
      r.pair_id = pair.pair_id;
      r.design_a = pair.design_a;
      r.design_b = pair.design_b;
      r.annotator_id = "sim" + std::to_string(a);
      r.choice = a_simpler != flip(rng) ? Choice::kA : Choice::kB;
      r.time_a_ms = look(rng);
      r.time_b_ms = look(rng);
      r.total_ms = r.time_a_ms + r.time_b_ms + idle(rng);
      records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace ltsrank
