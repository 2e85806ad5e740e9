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

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "ltsrank/csv.h"
#include "ltsrank/error.h"

namespace ltsrank {

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kCyclomatic:
      return "cyclomatic";
    case Metric::kStateSpaceSize:
      return "state_space";
    case Metric::kAvgBranching:
      return "avg_branching";
    case Metric::kMaxDepth:
      return "max_depth";
    case Metric::kAlbin:
      return "albin";
    case Metric::kModularity:
      return "modularity";
    case Metric::kRedundancy:
      return "redundancy";
  }
  return "unknown";
}

std::string_view MetricTitle(Metric metric) {
  switch (metric) {
    case Metric::kCyclomatic:
      return "Cyclomatic Complexity (V)";
    case Metric::kStateSpaceSize:
      return "State Space Size";
    case Metric::kAvgBranching:
      return "Average Branching Factor";
    case Metric::kMaxDepth:
      return "Max Depth";
    case Metric::kAlbin:
      return "Albin Complexity";
    case Metric::kModularity:
      return "Modularity (Q)";
    case Metric::kRedundancy:
      return "Redundancy (J)";
  }
  return "Unknown";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (name == MetricName(m)) return m;
  }
  if (name == "V") return Metric::kCyclomatic;
  if (name == "state_space_size") return Metric::kStateSpaceSize;
  if (name == "modularity_q") return Metric::kModularity;
  if (name == "redundancy_j") return Metric::kRedundancy;
  return std::nullopt;
}

double MetricValue(const MetricReport& report, Metric metric) {
  switch (metric) {
    case Metric::kCyclomatic:
      return report.cyclomatic;
    case Metric::kStateSpaceSize:
      return report.state_space_size;
    case Metric::kAvgBranching:
      return report.avg_branching;
    case Metric::kMaxDepth:
      return report.max_depth;
    case Metric::kAlbin:
      return report.albin;
    case Metric::kModularity:
      return report.modularity_q;
    case Metric::kRedundancy:
      return report.redundancy_j;
  }
  return 0.0;
}

int Cyclomatic(const LtsDesign& design) {
  return design.num_transitions() - design.num_states +
         2 * WeakComponents(design).count;
}

int StateSpaceSize(const LtsDesign& design) { return design.num_states; }

double AvgBranching(const LtsDesign& design) {
  if (design.num_states == 0) {
    throw Error("average branching is undefined without states");
  }
  return static_cast<double>(design.num_transitions()) / design.num_states;
}

int MaxDepth(const LtsDesign& design) {
  if (design.num_states == 0) return 0;
  return BfsDepth(design, design.initial);
}

namespace {

int DegreeSum(const LtsDesign& design) {
  Eigen::VectorXi in = Eigen::VectorXi::Zero(design.num_states);
  Eigen::VectorXi out = Eigen::VectorXi::Zero(design.num_states);
  for (const Transition& t : design.transitions) {
    ++out(t.source);
    ++in(t.target);
  }
  return (in + out).sum();
}

}  // namespace

int Albin(const LtsDesign& design, const LongestPathOptions& options) {
  return design.num_states + DegreeSum(design) +
         LongestSimplePath(design, options);
}

double Modularity(const LtsDesign& design) {
  return GirvanNewman(ProjectUndirected(design)).q;
}

Redundancy ComputeRedundancy(const LtsDesign& design) {
  Redundancy result;
  const int n = design.num_states;
  if (n < 2) return result;
  const auto successors = SuccessorSets(design);
  std::vector<int> common;
  double total = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto& a = successors[u];
      const auto& b = successors[v];
      if (a.empty() && b.empty()) {
        total += 1.0;
        continue;
      }
      common.clear();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      const auto shared = static_cast<double>(common.size());
      const double jaccard =
          shared / (static_cast<double>(a.size() + b.size()) - shared);
      total += jaccard;
      if (a == b) ++result.identical_successor_pairs;
    }
  }
  result.mean_jaccard = total / (0.5 * n * (n - 1));
  return result;
}

MetricReport ComputeAll(const LtsDesign& design,
                        const LongestPathOptions& options) {
  CheckDesign(design);
  MetricReport r;
  r.design_id = design.id;
  r.num_states = design.num_states;
  r.num_transitions = design.num_transitions();
  r.num_components = WeakComponents(design).count;
  r.cyclomatic = r.num_transitions - r.num_states + 2 * r.num_components;
  r.state_space_size = StateSpaceSize(design);
  r.avg_branching = AvgBranching(design);
  r.max_depth = MaxDepth(design);
  r.longest_path = LongestSimplePath(design, options);
  r.albin = r.num_states + DegreeSum(design) + r.longest_path;
  r.modularity_q = Modularity(design);
  const Redundancy redundancy = ComputeRedundancy(design);
  r.redundancy_j = redundancy.mean_jaccard;
  r.identical_successor_pairs = redundancy.identical_successor_pairs;
  return r;
}

std::vector<double> AverageRanks(std::span<const double> values) {
  const std::size_t k = values.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(k);
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j + 1 < k && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank ((i + 1) + (j + 1)) / 2.
    const double rank = 0.5 * static_cast<double>(i + j + 2);
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

RankedCorpus RankCorpus(std::span<const MetricReport> reports, Metric metric,
                        Direction direction) {
  RankedCorpus ranked;
  ranked.metric = metric;
  ranked.direction = direction;
  std::vector<double> keys;
  keys.reserve(reports.size());
  for (const MetricReport& r : reports) {
    const double value = MetricValue(r, metric);
    keys.push_back(direction == Direction::kAscending ? value : -value);
  }
  const std::vector<double> ranks = AverageRanks(keys);
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return keys[a] < keys[b]; });
  for (std::size_t i : order) {
    ranked.entries.push_back(
        {reports[i].design_id, MetricValue(reports[i], metric), ranks[i]});
  }
  return ranked;
}

RankedCorpus RankCorpus(std::span<const MetricReport> reports,
                        std::string_view metric_name, Direction direction) {
  const auto metric = ParseMetric(metric_name);
  if (!metric) throw Error("unknown metric '" + std::string(metric_name) + "'");
  return RankCorpus(reports, *metric, direction);
}

std::string_view MetricsCsvHeader() {
  return "design_id,N,E,P,V,state_space,avg_branching,max_depth,L,albin,"
         "modularity_q,redundancy_j,identical_pairs";
}

std::string MetricsCsvRow(const MetricReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}",
                     CsvEscape(r.design_id), r.num_states, r.num_transitions, r.num_components,
                     r.cyclomatic, r.state_space_size, r.avg_branching,
                     r.max_depth, r.longest_path, r.albin, r.modularity_q,
                     r.redundancy_j, r.identical_successor_pairs);
}

void WriteMetricsCsv(std::ostream& out, std::span<const MetricReport> reports) {
  out << MetricsCsvHeader() << '\n';
  for (const MetricReport& r : reports) out << MetricsCsvRow(r) << '\n';
}

}  // namespace ltsrank
