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

// Labeled transition systems in the Aldebaran (.aut) format.
//
//   des (initial, transition_count, state_count)
//   (source, "label", target)
//   ...
//
// States are dense 0-based indices; the format carries no state names.

#ifndef LTSRANK_LTS_H_
#define LTSRANK_LTS_H_

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltsrank {

struct Transition {
  int source = 0;
  std::string label;
  int target = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// A directed labeled multigraph with a distinguished initial state.
// Transition order is significant and preserved through parse/serialize.
struct LtsDesign {
  std::string id;
  int num_states = 0;
  int initial = 0;
  std::vector<Transition> transitions;

  int num_transitions() const { return static_cast<int>(transitions.size()); }

  friend bool operator==(const LtsDesign&, const LtsDesign&) = default;
};

struct ValidationReport {
  // States not reachable from the initial state by a directed path.
  std::set<int> unreachable_states;
  // Number of exact (source, label, target) repeats beyond the first.
  int duplicate_transitions = 0;
  // No state has two outgoing transitions with the same label.
  bool is_deterministic = true;

  friend bool operator==(const ValidationReport&,
                         const ValidationReport&) = default;
};

// Throws Error if a state index is out of range, a label is empty or contains
// a line break, or the initial state is out of range.
void CheckDesign(const LtsDesign& design);

// Parses .aut text. Labels may be quoted ("a, b") or bare (a); bare labels
// cannot contain commas or quotes. Blank lines are ignored. Throws ParseError
// carrying the offending line number.
LtsDesign ParseAut(std::string_view text, std::string id = {});

// Canonical form: every label quoted, one line per transition, trailing
// newline. ParseAut(SerializeAut(d), d.id) == d.
std::string SerializeAut(const LtsDesign& design);

ValidationReport Validate(const LtsDesign& design);

// Graphviz digraph. The initial state is drawn as a double circle.
std::string ToDot(const LtsDesign& design);

// {"id", "initial", "numStates", "transitions": [{"from","label","to"}]}
std::string ToGraphJson(const LtsDesign& design);

// Seeded random LTS rooted at state 0. Every state hangs off a random
// spanning arborescence, so all states are reachable; further random
// transitions bring the total to about density * num_states.
LtsDesign GenerateRandom(int num_states, double density, int label_count,
                         std::uint64_t seed, std::string id = {});

// "a".."z", then "l26", "l27", ...
std::string ActionLabel(int index);

}  // namespace ltsrank

#endif  // LTSRANK_LTS_H_
