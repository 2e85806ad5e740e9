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

// The seven comprehension metrics and corpus ranking.

#ifndef LTSRANK_METRICS_H_
#define LTSRANK_METRICS_H_

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltsrank/graph.h"
#include "ltsrank/lts.h"

namespace ltsrank {

struct MetricReport {
  std::string design_id;
  int num_states = 0;       // N
  int num_transitions = 0;  // E, parallel transitions and self-loops included
  int num_components = 0;   // P, weakly connected
  int cyclomatic = 0;       // V = E - N + 2P
  int state_space_size = 0;
  double avg_branching = 0.0;
  int max_depth = 0;
  int longest_path = 0;  // L
  int albin = 0;         // N + sum of in+out degrees + L
  double modularity_q = 0.0;
  double redundancy_j = 0.0;
  int identical_successor_pairs = 0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

enum class Metric {
  kCyclomatic,
  kStateSpaceSize,
  kAvgBranching,
  kMaxDepth,
  kAlbin,
  kModularity,
  kRedundancy,
};

inline constexpr std::array<Metric, 7> kAllMetrics = {
    Metric::kCyclomatic, Metric::kStateSpaceSize, Metric::kAvgBranching,
    Metric::kMaxDepth,   Metric::kAlbin,          Metric::kModularity,
    Metric::kRedundancy};

// Short machine name, e.g. "albin".
std::string_view MetricName(Metric metric);
// Row title in correlation tables, e.g. "Albin Complexity".
std::string_view MetricTitle(Metric metric);
// Accepts the short names plus the CSV column names (V, state_space,
// modularity_q, redundancy_j).
std::optional<Metric> ParseMetric(std::string_view name);
double MetricValue(const MetricReport& report, Metric metric);

int Cyclomatic(const LtsDesign& design);
int StateSpaceSize(const LtsDesign& design);
// E / N. Throws Error for a design without states.
double AvgBranching(const LtsDesign& design);
// BFS eccentricity of the initial state.
int MaxDepth(const LtsDesign& design);
int Albin(const LtsDesign& design, const LongestPathOptions& options = {});
// Modularity of the best Girvan-Newman partition of the undirected projection.
double Modularity(const LtsDesign& design);

struct Redundancy {
  // Mean Jaccard similarity of successor sets over all unordered state pairs.
  // Two empty successor sets count as identical (J = 1).
  double mean_jaccard = 0.0;
  // Pairs with equal, non-empty successor sets.
  int identical_successor_pairs = 0;
};
Redundancy ComputeRedundancy(const LtsDesign& design);

MetricReport ComputeAll(const LtsDesign& design,
                        const LongestPathOptions& options = {});

enum class Direction { kAscending, kDescending };

struct RankedEntry {
  std::string design_id;
  double value = 0.0;
  double rank = 0.0;  // 1-based; tied values share their average rank

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedCorpus {
  Metric metric = Metric::kAlbin;
  Direction direction = Direction::kAscending;
  std::vector<RankedEntry> entries;
};

// Stable sort by metric value. Ascending puts the least complex design first.
RankedCorpus RankCorpus(std::span<const MetricReport> reports, Metric metric,
                        Direction direction);
RankedCorpus RankCorpus(std::span<const MetricReport> reports,
                        std::string_view metric_name, Direction direction);

// Average ranks (1-based) of `values`, in input order.
std::vector<double> AverageRanks(std::span<const double> values);

// design_id,N,E,P,V,state_space,avg_branching,max_depth,L,albin,
// modularity_q,redundancy_j,identical_pairs
std::string_view MetricsCsvHeader();
std::string MetricsCsvRow(const MetricReport& report);
void WriteMetricsCsv(std::ostream& out, std::span<const MetricReport> reports);

}  // namespace ltsrank

#endif  // LTSRANK_METRICS_H_
