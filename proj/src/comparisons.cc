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

#include "ltsrank/comparisons.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "ltsrank/csv.h"
#include "ltsrank/error.h"

namespace ltsrank {
namespace {

constexpr int kRecordColumns = 9;

std::int64_t ParseInt(const std::string& field, int line, const char* what) {
  std::int64_t value = 0;
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("malformed ") + what + " '" + field +
                               "'");
  }
  return value;
}

Choice ParseChoice(std::string_view s) {
  if (s == "A" || s == "a") return Choice::kA;
  if (s == "B" || s == "b") return Choice::kB;
  throw Error("choice must be A or B, got '" + std::string(s) + "'");
}

std::string_view ChoiceName(Choice c) { return c == Choice::kA ? "A" : "B"; }

}  // namespace

std::string_view PolarityName(Polarity polarity) {
  return polarity == Polarity::kComplexity ? "complexity" : "preference";
}

Polarity ParsePolarity(std::string_view name) {
  if (name == "complexity") return Polarity::kComplexity;
  if (name == "preference") return Polarity::kPreference;
  throw Error("polarity must be 'complexity' or 'preference'");
}

void CheckRecord(const ComparisonRecord& r) {
  if (r.design_a.empty() || r.design_b.empty()) {
    throw Error("comparison record names an empty design id");
  }
  if (r.design_a == r.design_b) {
    throw Error("comparison record compares '" + r.design_a + "' with itself");
  }
  if (r.time_a_ms < 0 || r.time_b_ms < 0 || r.total_ms < 0) {
    throw Error("comparison record has a negative duration");
  }
}

nlohmann::ordered_json ToJson(const ComparisonRecord& r) {
  nlohmann::ordered_json json;
  json["pair_id"] = r.pair_id;
  json["design_a"] = r.design_a;
  json["design_b"] = r.design_b;
  json["annotator_id"] = r.annotator_id;
  json["choice"] = ChoiceName(r.choice);
  json["time_a_ms"] = r.time_a_ms;
  json["time_b_ms"] = r.time_b_ms;
  json["total_ms"] = r.total_ms;
  json["timestamp"] = r.timestamp;
  return json;
}

ComparisonRecord RecordFromJson(const nlohmann::ordered_json& json) {
  try {
    ComparisonRecord r;
    r.pair_id = json.at("pair_id").get<int>();
    r.design_a = json.at("design_a").get<std::string>();
    r.design_b = json.at("design_b").get<std::string>();
    r.annotator_id = json.at("annotator_id").get<std::string>();
    r.choice = ParseChoice(json.at("choice").get<std::string>());
    r.time_a_ms = json.at("time_a_ms").get<std::int64_t>();
    r.time_b_ms = json.at("time_b_ms").get<std::int64_t>();
    r.total_ms = json.at("total_ms").get<std::int64_t>();
    r.timestamp = json.value("timestamp", std::string());
    return r;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw Error(std::string("malformed comparison record: ") + e.what());
  }
}

std::string_view RecordsCsvHeader() {
  return "pair_id,design_a,design_b,annotator_id,choice,time_a_ms,time_b_ms,"
         "total_ms,timestamp";
}

std::string WriteRecordsCsv(std::span<const ComparisonRecord> records) {
  std::string out(RecordsCsvHeader());
  out.push_back('\n');
  for (const ComparisonRecord& r : records) {
    out += CsvJoin({std::to_string(r.pair_id), r.design_a, r.design_b,
                    r.annotator_id, std::string(ChoiceName(r.choice)),
                    std::to_string(r.time_a_ms), std::to_string(r.time_b_ms),
                    std::to_string(r.total_ms), r.timestamp});
    out.push_back('\n');
  }
  return out;
}

std::vector<ComparisonRecord> ParseRecordsCsv(std::string_view text) {
  const std::vector<CsvRow> rows = ParseCsv(text);
  if (rows.empty()) throw ParseError(1, "missing annotation CSV header");
  if (CsvJoin(rows.front()) != RecordsCsvHeader()) {
    throw ParseError(1, "unexpected annotation CSV header; expected '" +
                            std::string(RecordsCsvHeader()) + "'");
  }
  std::vector<ComparisonRecord> records;
  records.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const CsvRow& row = rows[i];
    if (row.size() != kRecordColumns) {
      throw ParseError(line, "expected " + std::to_string(kRecordColumns) +
                                 " columns, found " +
                                 std::to_string(row.size()));
    }
    ComparisonRecord r;
    r.pair_id = static_cast<int>(ParseInt(row[0], line, "pair_id"));
    r.design_a = row[1];
    r.design_b = row[2];
    r.annotator_id = row[3];
    try {
      r.choice = ParseChoice(row[4]);
      r.time_a_ms = ParseInt(row[5], line, "time_a_ms");
      r.time_b_ms = ParseInt(row[6], line, "time_b_ms");
      r.total_ms = ParseInt(row[7], line, "total_ms");
      r.timestamp = row[8];
      CheckRecord(r);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

int ComparisonMatrix::IndexOf(std::string_view id) const {
  const auto it = std::find(ids.begin(), ids.end(), id);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

ComparisonMatrix Aggregate(std::span<const ComparisonRecord> records,
                           std::span<const std::string> item_ids,
                           Polarity polarity) {
  ComparisonMatrix m;
  m.ids.assign(item_ids.begin(), item_ids.end());
  m.polarity = polarity;
  const int k = m.size();
  m.wins = Eigen::MatrixXd::Zero(k, k);

  std::map<std::string_view, int> index;
  for (int i = 0; i < k; ++i) {
    if (!index.emplace(m.ids[i], i).second) {
      throw Error("duplicate item id '" + m.ids[i] + "'");
    }
  }
  for (const ComparisonRecord& r : records) {
    CheckRecord(r);
    const auto chosen = index.find(r.chosen());
    const auto other = index.find(r.other());
    if (chosen == index.end() || other == index.end()) {
      const std::string& missing =
          chosen == index.end() ? r.chosen() : r.other();
      throw Error("comparison record references unknown design '" + missing +
                  "'");
    }
    if (polarity == Polarity::kPreference) {
      m.wins(chosen->second, other->second) += 1.0;
    } else {
      m.wins(other->second, chosen->second) += 1.0;
    }
  }
  return m;
}

ComparisonMatrix Aggregate(std::span<const ComparisonRecord> records,
                           Polarity polarity) {
  std::set<std::string> ids;
  for (const ComparisonRecord& r : records) {
    ids.insert(r.design_a);
    ids.insert(r.design_b);
  }
  const std::vector<std::string> items(ids.begin(), ids.end());
  return Aggregate(records, items, polarity);
}

double AgreementPercent(std::span<const ComparisonRecord> records) {
  // annotator -> unordered design pair -> chosen design (last answer wins)
  std::map<std::string,
           std::map<std::pair<std::string, std::string>, std::string>>
      answers;
  for (const ComparisonRecord& r : records) {
    auto key = std::minmax(r.design_a, r.design_b);
    answers[r.annotator_id][{key.first, key.second}] = r.chosen();
  }
  if (answers.size() < 2) {
    throw Error("agreement needs at least two annotators");
  }

  double sum = 0.0;
  int annotator_pairs = 0;
  for (auto a = answers.begin(); a != answers.end(); ++a) {
    for (auto b = std::next(a); b != answers.end(); ++b) {
      int shared = 0;
      int same = 0;
      for (const auto& [pair, choice] : a->second) {
        const auto it = b->second.find(pair);
        if (it == b->second.end()) continue;
        ++shared;
        if (it->second == choice) ++same;
      }
      if (shared == 0) continue;
      sum += 100.0 * same / shared;
      ++annotator_pairs;
    }
  }
  if (annotator_pairs == 0) {
    throw Error("annotators share no compared pairs");
  }
  return sum / annotator_pairs;
}

}  // namespace ltsrank
