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

// Pairwise comparison records and their aggregation into win counts.

#ifndef LTSRANK_COMPARISONS_H_
#define LTSRANK_COMPARISONS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

namespace ltsrank {

// The design an annotator picked: the less complex (preferred) one.
enum class Choice { kA, kB };

// How a choice becomes a win. Under kComplexity the win goes to the design
// that was *not* chosen, i.e. the one judged more complex, so strengths grow
// with perceived complexity. Under kPreference the chosen design wins.
enum class Polarity { kComplexity, kPreference };

std::string_view PolarityName(Polarity polarity);
// Throws Error on anything but "complexity" or "preference".
Polarity ParsePolarity(std::string_view name);

struct ComparisonRecord {
  int pair_id = 0;
  std::string design_a;
  std::string design_b;
  std::string annotator_id;
  Choice choice = Choice::kA;
  std::int64_t time_a_ms = 0;
  std::int64_t time_b_ms = 0;
  std::int64_t total_ms = 0;
  std::string timestamp;  // ISO 8601, UTC

  const std::string& chosen() const {
    return choice == Choice::kA ? design_a : design_b;
  }
  const std::string& other() const {
    return choice == Choice::kA ? design_b : design_a;
  }

  friend bool operator==(const ComparisonRecord&,
                         const ComparisonRecord&) = default;
};

// Throws Error unless design_a != design_b and every time is non-negative.
void CheckRecord(const ComparisonRecord& record);

nlohmann::ordered_json ToJson(const ComparisonRecord& record);
// Throws Error on missing or mistyped fields.
ComparisonRecord RecordFromJson(const nlohmann::ordered_json& json);

// pair_id,design_a,design_b,annotator_id,choice,time_a_ms,time_b_ms,
// total_ms,timestamp
std::string_view RecordsCsvHeader();
std::string WriteRecordsCsv(std::span<const ComparisonRecord> records);
// Header row required. Throws ParseError with the offending line.
std::vector<ComparisonRecord> ParseRecordsCsv(std::string_view text);

// wins(i, j): number of times item i won against item j. The diagonal is 0.
struct ComparisonMatrix {
  std::vector<std::string> ids;
  Eigen::MatrixXd wins;
  Polarity polarity = Polarity::kComplexity;

  int size() const { return static_cast<int>(ids.size()); }
  // Index of `id`, or -1.
  int IndexOf(std::string_view id) const;
  // n_ij = w_ij + w_ji
  Eigen::MatrixXd Comparisons() const { return wins + wins.transpose(); }
};

// Accumulates records over a fixed item set. Throws Error on a record that
// names an unknown design.
ComparisonMatrix Aggregate(std::span<const ComparisonRecord> records,
                           std::span<const std::string> item_ids,
                           Polarity polarity);
// Item set = every design named in the records, sorted.
ComparisonMatrix Aggregate(std::span<const ComparisonRecord> records,
                           Polarity polarity);

// Mean, over annotator pairs that share at least one design pair, of the
// percentage of shared pairs on which both picked the same design. Throws
// Error with fewer than two annotators or no overlap at all.
double AgreementPercent(std::span<const ComparisonRecord> records);

}  // namespace ltsrank

#endif  // LTSRANK_COMPARISONS_H_
