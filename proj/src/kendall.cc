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

#include "ltsrank/kendall.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ltsrank/error.h"

namespace ltsrank {
namespace {

struct TieSums {
  std::int64_t pairs = 0;  // sum t(t-1)/2
  double v1 = 0.0;         // sum t(t-1)(2t+5)
  double v2 = 0.0;         // sum t(t-1)(t-2)
};

// Tie-group statistics of an already sorted sequence.
template <typename Equal>
TieSums CountTies(std::size_t n, Equal equal) {
  TieSums sums;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && equal(i, j)) ++j;
    const double t = static_cast<double>(j - i);
    sums.pairs += static_cast<std::int64_t>((j - i) * (j - i - 1) / 2);
    sums.v1 += t * (t - 1) * (2 * t + 5);
    sums.v2 += t * (t - 1) * (t - 2);
    i = j;
  }
  return sums;
}

// Sorts `v` ascending and returns the number of strict inversions removed.
std::int64_t MergeCountSwaps(std::vector<double>& v, std::vector<double>& tmp,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = MergeCountSwaps(v, tmp, lo, mid) +
                       MergeCountSwaps(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      tmp[out++] = v[j++];
    } else {
      tmp[out++] = v[i++];
    }
  }
  while (i < mid) tmp[out++] = v[i++];
  while (j < hi) tmp[out++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return swaps;
}

struct TauCore {
  double tau;
  std::int64_t score;
  TieSums x_ties;
  TieSums y_ties;
};

TauCore ComputeTau(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  TauCore core;
  core.x_ties = CountTies(n, [&](auto i, auto j) {
    return x[order[i]] == x[order[j]];
  });
  const TieSums joint = CountTies(n, [&](auto i, auto j) {
    return x[order[i]] == x[order[j]] && y[order[i]] == y[order[j]];
  });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  std::vector<double> tmp(n);
  const std::int64_t swaps = MergeCountSwaps(ys, tmp, 0, n);
  core.y_ties = CountTies(n, [&](auto i, auto j) { return ys[i] == ys[j]; });

  const auto total = static_cast<std::int64_t>(n * (n - 1) / 2);
  core.score = total - core.x_ties.pairs - core.y_ties.pairs + joint.pairs -
               2 * swaps;
  // One square root of the product, so that identical rankings give exactly
  // score / denom = 1.
  const double denom =
      std::sqrt(static_cast<double>(total - core.x_ties.pairs) *
                static_cast<double>(total - core.y_ties.pairs));
  core.tau = std::clamp(static_cast<double>(core.score) / denom, -1.0, 1.0);
  return core;
}

double ExactPValue(std::span<const double> x, std::span<const double> y,
                   double observed) {
  std::vector<std::size_t> perm(y.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> permuted(y.size());
  std::int64_t extreme = 0;
  std::int64_t count = 0;
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = y[perm[i]];
    const double tau = ComputeTau(x, permuted).tau;
    if (std::abs(tau) >= std::abs(observed) - 1e-12) ++extreme;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(extreme) / static_cast<double>(count);
}

double AsymptoticPValue(const TauCore& core, std::size_t size) {
  const double n = static_cast<double>(size);
  const double m = n * (n - 1);
  const double xt = static_cast<double>(core.x_ties.pairs);
  const double yt = static_cast<double>(core.y_ties.pairs);
  double var = (m * (2 * n + 5) - core.x_ties.v1 - core.y_ties.v1) / 18.0 +
               2.0 * xt * yt / m;
  if (size > 2) {
    var += core.x_ties.v2 * core.y_ties.v2 / (9.0 * m * (n - 2));
  }
  if (!(var > 0)) return 1.0;
  const double z = static_cast<double>(core.score) / std::sqrt(var);
  return std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
}

}  // namespace

TauResult KendallTau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error("Kendall's tau needs rankings over the same items");
  }
  if (x.size() < 2) throw Error("Kendall's tau needs at least two items");
  auto all_tied = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; });
  };
  if (all_tied(x) || all_tied(y)) {
    throw Error("Kendall's tau is undefined when every value is tied");
  }

  const TauCore core = ComputeTau(x, y);
  TauResult result;
  result.n = static_cast<int>(x.size());
  result.tau = core.tau;
  result.score = core.score;
  if (result.n < kExactTauBelow) {
    result.exact = true;
    result.p_value = ExactPValue(x, y, core.tau);
  } else {
    result.p_value = AsymptoticPValue(core, x.size());
  }
  return result;
}

}  // namespace ltsrank
