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

#include "ltsrank/lts.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "ltsrank/error.h"

namespace ltsrank {
namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

int ParseIndex(std::string_view field, int line, const char* what) {
  field = Trim(field);
  int value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(field) + "'");
  }
  if (value < 0) {
    throw ParseError(line, std::string("negative ") + what);
  }
  return value;
}

struct Header {
  int initial;
  int transitions;
  int states;
};

Header ParseHeader(std::string_view text, int line) {
  std::string_view s = Trim(text);
  if (s.substr(0, 3) != "des") {
    throw ParseError(line, "malformed header: expected 'des (i, t, s)'");
  }
  s = Trim(s.substr(3));
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError(line, "malformed header: expected 'des (i, t, s)'");
  }
  s = s.substr(1, s.size() - 2);
  const auto c1 = s.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : s.find(',', c1 + 1);
  if (c2 == std::string_view::npos ||
      s.find(',', c2 + 1) != std::string_view::npos) {
    throw ParseError(line, "malformed header: expected three fields");
  }
  return Header{ParseIndex(s.substr(0, c1), line, "initial state"),
                ParseIndex(s.substr(c1 + 1, c2 - c1 - 1), line,
                           "transition count"),
                ParseIndex(s.substr(c2 + 1), line, "state count")};
}

Transition ParseTransition(std::string_view text, int line, int num_states) {
  std::string_view s = Trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError(line, "malformed transition: expected '(from, label, to)'");
  }
  s = s.substr(1, s.size() - 2);
  const auto first_comma = s.find(',');
  const auto last_comma = s.rfind(',');
  if (first_comma == std::string_view::npos || first_comma == last_comma) {
    throw ParseError(line, "malformed transition: expected three fields");
  }
  Transition t;
  t.source = ParseIndex(s.substr(0, first_comma), line, "source state");
  t.target = ParseIndex(s.substr(last_comma + 1), line, "target state");

  std::string_view label =
      Trim(s.substr(first_comma + 1, last_comma - first_comma - 1));
  if (!label.empty() && label.front() == '"') {
    if (label.size() < 2 || label.back() != '"') {
      throw ParseError(line, "unterminated quoted label");
    }
    label = label.substr(1, label.size() - 2);
  } else if (label.find_first_of(",\"") != std::string_view::npos) {
    throw ParseError(line, "unquoted label contains ',' or '\"'");
  }
  if (label.empty()) throw ParseError(line, "empty label");
  t.label = std::string(label);

  if (t.source >= num_states || t.target >= num_states) {
    throw ParseError(line, "state index out of range [0, " +
                               std::to_string(num_states) + ")");
  }
  return t;
}

std::string EscapeDot(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void CheckDesign(const LtsDesign& design) {
  if (design.num_states < 0) throw Error("negative state count");
  if (design.num_states > 0 &&
      (design.initial < 0 || design.initial >= design.num_states)) {
    throw Error("initial state out of range");
  }
  for (const Transition& t : design.transitions) {
    if (t.source < 0 || t.source >= design.num_states || t.target < 0 ||
        t.target >= design.num_states) {
      throw Error("transition state index out of range");
    }
    if (t.label.empty()) throw Error("empty transition label");
    if (t.label.find_first_of("\r\n") != std::string::npos) {
      throw Error("transition label contains a line break");
    }
  }
}

LtsDesign ParseAut(std::string_view text, std::string id) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    if (!Trim(line).empty()) lines.emplace_back(line_number, line);
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "empty input");

  const Header header = ParseHeader(lines.front().second, lines.front().first);
  if (header.states > 0 && header.initial >= header.states) {
    throw ParseError(lines.front().first, "initial state out of range");
  }
  if (header.states == 0 && header.initial != 0) {
    throw ParseError(lines.front().first,
                     "initial state given for an empty state set");
  }

  LtsDesign design;
  design.id = std::move(id);
  design.num_states = header.states;
  design.initial = header.initial;
  design.transitions.reserve(header.transitions);
  const int found = static_cast<int>(lines.size()) - 1;
  if (found > header.transitions) {
    throw ParseError(lines[header.transitions + 1].first,
                     "transition count mismatch: header declares " +
                         std::to_string(header.transitions));
  }
  if (found < header.transitions) {
    throw ParseError(line_number, "transition count mismatch: header declares " +
                                      std::to_string(header.transitions) +
                                      ", found " + std::to_string(found));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    design.transitions.push_back(
        ParseTransition(lines[i].second, lines[i].first, header.states));
  }
  return design;
}

std::string SerializeAut(const LtsDesign& design) {
  CheckDesign(design);
  std::ostringstream out;
  out << "des (" << design.initial << ", " << design.num_transitions() << ", "
      << design.num_states << ")\n";
  for (const Transition& t : design.transitions) {
    out << '(' << t.source << ", \"" << t.label << "\", " << t.target << ")\n";
  }
  return out.str();
}

ValidationReport Validate(const LtsDesign& design) {
  CheckDesign(design);
  ValidationReport report;
  const int n = design.num_states;
  std::vector<std::vector<int>> successors(n);
  for (const Transition& t : design.transitions) {
    successors[t.source].push_back(t.target);
  }

  std::vector<char> seen(n, 0);
  if (n > 0) {
    std::deque<int> queue{design.initial};
    seen[design.initial] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : successors[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    if (!seen[s]) report.unreachable_states.insert(s);
  }

  std::set<Transition> distinct;
  std::set<std::pair<int, std::string>> outgoing;
  for (const Transition& t : design.transitions) {
    if (!distinct.insert(t).second) {
      ++report.duplicate_transitions;
      continue;
    }
    if (!outgoing.emplace(t.source, t.label).second) {
      report.is_deterministic = false;
    }
  }
  return report;
}

std::string ToDot(const LtsDesign& design) {
  std::ostringstream out;
  if (design.id.empty()) {
    out << "digraph lts {\n";
  } else {
    out << "digraph \"" << EscapeDot(design.id) << "\" {\n";
  }
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  for (int s = 0; s < design.num_states; ++s) {
    out << "  " << s;
    if (s == design.initial) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Transition& t : design.transitions) {
    out << "  " << t.source << " -> " << t.target << " [label=\""
        << EscapeDot(t.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToGraphJson(const LtsDesign& design) {
  nlohmann::ordered_json json;
  json["id"] = design.id;
  json["initial"] = design.initial;
  json["numStates"] = design.num_states;
  json["transitions"] = nlohmann::ordered_json::array();
  for (const Transition& t : design.transitions) {
    nlohmann::ordered_json edge;
    edge["from"] = t.source;
    edge["label"] = t.label;
    edge["to"] = t.target;
    json["transitions"].push_back(std::move(edge));
  }
  return json.dump();
}

std::string ActionLabel(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "l" + std::to_string(index);
}

LtsDesign GenerateRandom(int num_states, double density, int label_count,
                         std::uint64_t seed, std::string id) {
  if (num_states < 1) throw Error("num_states must be positive");
  if (!(density > 0.0 && density <= 2.0)) {
    throw Error("density must be in (0, 2]");
  }
  if (label_count < 1) throw Error("label_count must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_state(0, num_states - 1);
  std::uniform_int_distribution<int> pick_label(0, label_count - 1);

  LtsDesign design;
  design.id = std::move(id);
  design.num_states = num_states;
  design.initial = 0;

  const int target_count =
      std::max(num_states - 1,
               static_cast<int>(std::lround(density * num_states)));
  design.transitions.reserve(target_count);
  for (int v = 1; v < num_states; ++v) {
    std::uniform_int_distribution<int> pick_parent(0, v - 1);
    const int parent = pick_parent(rng);
    design.transitions.push_back({parent, ActionLabel(pick_label(rng)), v});
  }
  while (design.num_transitions() < target_count) {
    const int source = pick_state(rng);
    const int label = pick_label(rng);
    const int target = pick_state(rng);
    design.transitions.push_back({source, ActionLabel(label), target});
  }
  return design;
}

}  // namespace ltsrank
