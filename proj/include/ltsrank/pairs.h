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

#ifndef LTSRANK_PAIRS_H_
#define LTSRANK_PAIRS_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ltsrank {

// Unordered item pair (first < second).
using ItemPair = std::pair<int, int>;

struct PairSample {
  std::vector<ItemPair> pairs;  // in sampling order
  // Whether the pairs connect all items into one component.
  bool connected = false;
  // Draws taken, counting the first one.
  int attempts = 0;
};

inline constexpr int kMaxPairResamples = 100;

// Draws `pair_count` distinct pairs out of all item_count*(item_count-1)/2,
// uniformly without replacement. If the pairs leave the items disconnected,
// redraws with seed+1, seed+2, ... up to kMaxPairResamples times. No redraw
// happens when pair_count < item_count - 1, since connectivity is impossible
// there. Throws Error when pair_count is out of range.
PairSample SamplePairs(int item_count, int pair_count, std::uint64_t seed);

// True when the pairs join all items in one component.
bool PairsConnected(int item_count, const std::vector<ItemPair>& pairs);

// A sampled pair resolved to design ids.
struct AnnotationPair {
  int pair_id = 0;  // 1-based position in the sampled sequence
  std::string design_a;
  std::string design_b;

  friend bool operator==(const AnnotationPair&,
                         const AnnotationPair&) = default;
};

// Names each pair after `ids` (item i is ids[i]), numbering from 1. Throws
// Error on an index outside `ids`.
std::vector<AnnotationPair> LabelPairs(const std::vector<ItemPair>& pairs,
                                       std::span<const std::string> ids);

}  // namespace ltsrank

#endif  // LTSRANK_PAIRS_H_
