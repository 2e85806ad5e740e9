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

#include "ltsrank/correlation.h"

#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>

#include "ltsrank/csv.h"
#include "ltsrank/error.h"
#include "ltsrank/kendall.h"

namespace ltsrank {
namespace {

double ParseDouble(const std::string& field, int line) {
  if (field == "nan" || field == "NaN") {
    return std::numeric_limits<double>::quiet_NaN();
  }
  try {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed number '" + field + "'");
  }
}

}  // namespace

CorrelationReport Correlate(std::span<const MetricReport> reports,
                            const BtResult& human, std::string reference) {
  std::map<std::string, int> position;
  for (std::size_t i = 0; i < human.ids.size(); ++i) {
    position.emplace(human.ids[i], static_cast<int>(i));
  }
  std::set<std::string> seen;
  for (const MetricReport& r : reports) {
    if (!position.contains(r.design_id)) {
      throw Error("design '" + r.design_id + "' has no human ranking");
    }
    if (!seen.insert(r.design_id).second) {
      throw Error("design '" + r.design_id + "' reported twice");
    }
  }
  if (seen.size() != human.ids.size()) {
    throw Error("human ranking covers designs without metric reports");
  }

  const double sign = human.polarity == Polarity::kComplexity ? 1.0 : -1.0;
  std::vector<double> human_score;
  human_score.reserve(reports.size());
  for (const MetricReport& r : reports) {
    human_score.push_back(sign *
                          std::log(human.strengths(position.at(r.design_id))));
  }

  CorrelationReport report;
  report.reference = std::move(reference);
  for (Metric metric : kAllMetrics) {
    std::vector<double> values;
    values.reserve(reports.size());
    for (const MetricReport& r : reports) values.push_back(MetricValue(r, metric));
    CorrelationRow row;
    row.metric = metric;
    try {
      const TauResult tau = KendallTau(values, human_score);
      row.tau = tau.tau;
      row.p_value = tau.p_value;
    } catch (const Error&) {
      row.tau = std::numeric_limits<double>::quiet_NaN();
      row.p_value = std::numeric_limits<double>::quiet_NaN();
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string FormatCorrelationTable(const CorrelationReport& report) {
  constexpr std::string_view kMetric = "Design Metric";
  constexpr std::string_view kTau = "Kendall's Tau";
  constexpr std::string_view kP = "P-value";
  std::size_t width = kMetric.size();
  for (const CorrelationRow& row : report.rows) {
    width = std::max(width, MetricTitle(row.metric).size());
  }
  std::string out = fmt::format("{:<{}} | {:>14} | {:>14}\n", kMetric, width,
                                kTau, kP);
  out += std::string(width, '-') + "-+-" + std::string(14, '-') + "-+-" +
         std::string(14, '-') + "\n";
  for (const CorrelationRow& row : report.rows) {
    out += fmt::format("{:<{}} | {:>14.10f} | {:>14.6g}\n",
                       MetricTitle(row.metric), width, row.tau, row.p_value);
  }
  return out;
}

std::string FormatCorrelationCsv(const CorrelationReport& report) {
  std::string out = "metric,tau,p_value,reference\n";
  for (const CorrelationRow& row : report.rows) {
    out += fmt::format("{},{},{},{}\n", MetricName(row.metric), row.tau,
                       row.p_value, CsvEscape(report.reference));
  }
  return out;
}

CorrelationReport ParseCorrelationCsv(std::string_view text) {
  const auto rows = ParseCsv(text);
  if (rows.empty() || CsvJoin(rows.front()) != "metric,tau,p_value,reference") {
    throw ParseError(1, "expected header 'metric,tau,p_value,reference'");
  }
  CorrelationReport report;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const CsvRow& row = rows[i];
    if (row.size() != 4) throw ParseError(line, "expected 4 columns");
    const auto metric = ParseMetric(row[0]);
    if (!metric) throw ParseError(line, "unknown metric '" + row[0] + "'");
    report.rows.push_back(
        {*metric, ParseDouble(row[1], line), ParseDouble(row[2], line)});
    report.reference = row[3];
  }
  return report;
}

nlohmann::ordered_json ToJson(const CorrelationReport& report) {
  nlohmann::ordered_json json;
  json["reference"] = report.reference;
  json["rows"] = nlohmann::ordered_json::array();
  for (const CorrelationRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["metric"] = MetricName(row.metric);
    r["title"] = MetricTitle(row.metric);
    // JSON has no NaN; undefined correlations become null.
    r["tau"] = std::isnan(row.tau) ? nlohmann::ordered_json()
                                   : nlohmann::ordered_json(row.tau);
    r["p_value"] = std::isnan(row.p_value)
                       ? nlohmann::ordered_json()
                       : nlohmann::ordered_json(row.p_value);
    json["rows"].push_back(std::move(r));
  }
  return json;
}

nlohmann::ordered_json ToJson(const BtResult& result) {
  nlohmann::ordered_json json;
  json["polarity"] = PolarityName(result.polarity);
  json["converged"] = result.converged;
  json["smoothed"] = result.smoothed;
  json["iterations"] = result.iterations;
  json["strengths"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < result.ids.size(); ++i) {
    json["strengths"][result.ids[i]] = result.strengths(i);
  }
  json["ranking"] = nlohmann::ordered_json::array();
  for (int i : result.ranking) json["ranking"].push_back(result.ids[i]);
  return json;
}

}  // namespace ltsrank
