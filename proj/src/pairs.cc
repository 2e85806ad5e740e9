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

#include "ltsrank/pairs.h"

#include <numeric>
#include <random>
#include <string>

#include "ltsrank/error.h"
#include "ltsrank/graph.h"

namespace ltsrank {
namespace {

std::vector<ItemPair> Draw(const std::vector<ItemPair>& all, int pair_count,
                           std::uint64_t seed) {
  std::vector<ItemPair> pool = all;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first pair_count slots are a uniform sample.
  for (int i = 0; i < pair_count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(pair_count);
  return pool;
}

}  // namespace

bool PairsConnected(int item_count, const std::vector<ItemPair>& pairs) {
  if (item_count <= 1) return true;
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  return ConnectedComponents(ProjectionFromEdges(item_count, edges)).count == 1;
}

PairSample SamplePairs(int item_count, int pair_count, std::uint64_t seed) {
  if (item_count < 0) throw Error("item count must be non-negative");
  const std::int64_t total =
      static_cast<std::int64_t>(item_count) * (item_count - 1) / 2;
  if (pair_count < 0 || pair_count > total) {
    throw Error("pair count " + std::to_string(pair_count) +
                " outside [0, " + std::to_string(total) + "]");
  }
  std::vector<ItemPair> all;
  all.reserve(total);
  for (int a = 0; a < item_count; ++a) {
    for (int b = a + 1; b < item_count; ++b) all.emplace_back(a, b);
  }

  PairSample sample;
  const bool can_connect = item_count <= 1 || pair_count >= item_count - 1;
  for (int attempt = 0; attempt < kMaxPairResamples; ++attempt) {
    sample.pairs = Draw(all, pair_count, seed + attempt);
    sample.attempts = attempt + 1;
    sample.connected = can_connect && PairsConnected(item_count, sample.pairs);
    if (sample.connected || !can_connect) break;
  }
  return sample;
}

std::vector<AnnotationPair> LabelPairs(const std::vector<ItemPair>& pairs,
                                       std::span<const std::string> ids) {
  std::vector<AnnotationPair> labeled;
  labeled.reserve(pairs.size());
  const auto k = static_cast<int>(ids.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (a < 0 || b < 0 || a >= k || b >= k) {
      throw Error("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") is outside the " + std::to_string(k) + " items");
    }
    labeled.push_back({static_cast<int>(i) + 1, ids[a], ids[b]});
  }
  return labeled;
}

}  // namespace ltsrank
