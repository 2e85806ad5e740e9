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

// Draws synthetic comparisons from known Bradley-Terry strengths.

#ifndef LTSRANK_TESTS_BT_SIMULATION_H_
#define LTSRANK_TESTS_BT_SIMULATION_H_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ltsrank/comparisons.h"

namespace ltsrank::oracle {

// k strengths spaced geometrically from 1 up to `ratio`.
inline Eigen::VectorXd GeometricStrengths(int k, double ratio) {
  Eigen::VectorXd p(k);
  for (int i = 0; i < k; ++i) p(i) = std::pow(ratio, double(i) / (k - 1));
  return p;
}

// `count` comparisons between uniformly drawn distinct pairs (with
// replacement across draws); i beats j with probability p_i / (p_i + p_j).
inline ComparisonMatrix SimulateComparisons(const Eigen::VectorXd& p, int count,
                                            std::uint64_t seed) {
  const int k = static_cast<int>(p.size());
  ComparisonMatrix m;
  for (int i = 0; i < k; ++i) m.ids.push_back("item" + std::to_string(i));
  m.wins = Eigen::MatrixXd::Zero(k, k);
  m.polarity = Polarity::kPreference;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> first(0, k - 1);
  std::uniform_int_distribution<int> second(0, k - 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int c = 0; c < count; ++c) {
    const int i = first(rng);
    int j = second(rng);
    if (j >= i) ++j;
    if (coin(rng) < p(i) / (p(i) + p(j))) {
      m.wins(i, j) += 1;
    } else {
      m.wins(j, i) += 1;
    }
  }
  return m;
}

}  // namespace ltsrank::oracle

#endif  // LTSRANK_TESTS_BT_SIMULATION_H_
