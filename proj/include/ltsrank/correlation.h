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

// Kendall's tau of every metric against a human (Bradley-Terry) ranking.

#ifndef LTSRANK_CORRELATION_H_
#define LTSRANK_CORRELATION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ltsrank/bradley_terry.h"
#include "ltsrank/metrics.h"

namespace ltsrank {

struct CorrelationRow {
  Metric metric = Metric::kAlbin;
  // NaN when the metric is constant over the items.
  double tau = 0.0;
  double p_value = 1.0;
};

struct CorrelationReport {
  std::string reference;
  std::vector<CorrelationRow> rows;  // one per metric, kAllMetrics order
};

// Human score per item: log strength under complexity polarity, negated
// under preference polarity, so a positive tau always means "the metric
// grows where humans judged the design more complex". Reports and BT items
// must cover the same design ids (order is free); throws Error otherwise.
CorrelationReport Correlate(std::span<const MetricReport> reports,
                            const BtResult& human,
                            std::string reference = "bradley-terry");

// Aligned text table: Design Metric | Kendall's Tau | P-value.
std::string FormatCorrelationTable(const CorrelationReport& report);

// metric,tau,p_value,reference
std::string FormatCorrelationCsv(const CorrelationReport& report);
CorrelationReport ParseCorrelationCsv(std::string_view text);

nlohmann::ordered_json ToJson(const CorrelationReport& report);
nlohmann::ordered_json ToJson(const BtResult& result);

}  // namespace ltsrank

#endif  // LTSRANK_CORRELATION_H_
