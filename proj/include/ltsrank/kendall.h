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

// Kendall rank correlation (tau-b) with a two-sided p-value.

#ifndef LTSRANK_KENDALL_H_
#define LTSRANK_KENDALL_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ltsrank {

struct TauResult {
  double tau = 0.0;
  double p_value = 1.0;
  int n = 0;
  // Concordant minus discordant pairs.
  std::int64_t score = 0;
  bool exact = false;  // p-value by full permutation rather than normal approx.
};

// Samples smaller than this get an exact permutation p-value.
inline constexpr int kExactTauBelow = 10;

// Tau-b over all item pairs, counted with Knight's O(n log n) merge sort. The
// p-value is two-sided: exact enumeration of all permutations of y for
// n < kExactTauBelow, otherwise the normal approximation with tie-adjusted
// variance. Throws Error on length mismatch, n < 2, or a ranking whose values
// are all tied.
TauResult KendallTau(std::span<const double> x, std::span<const double> y);

template <typename DerivedX, typename DerivedY>
TauResult KendallTau(const Eigen::DenseBase<DerivedX>& x,
                     const Eigen::DenseBase<DerivedY>& y) {
  std::vector<double> xs(x.size());
  std::vector<double> ys(y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) xs[i] = double(x.derived()(i));
  for (Eigen::Index i = 0; i < y.size(); ++i) ys[i] = double(y.derived()(i));
  return KendallTau(std::span<const double>(xs), std::span<const double>(ys));
}

}  // namespace ltsrank

#endif  // LTSRANK_KENDALL_H_
