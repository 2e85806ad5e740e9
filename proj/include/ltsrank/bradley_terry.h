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

// Bradley-Terry strengths by minorize-maximize iteration.
//
// Item i beats item j with probability p_i / (p_i + p_j). Given win counts
// w_ij and comparison counts n_ij = w_ij + w_ji, every sweep applies
//
//   p_i <- W_i / sum_{j != i} n_ij / (p_i + p_j),   W_i = sum_j w_ij
//
// simultaneously to all items and rescales p to sum to one. Each sweep
// maximizes a separable minorizer of the log-likelihood
//
//   l(p) = sum_ij w_ij (log p_i - log(p_i + p_j)),
//
// so l never decreases. The maximum likelihood estimate exists iff the
// directed "i beat j" graph is strongly connected; otherwise a small
// pseudo-count is added to every off-diagonal cell first.

#ifndef LTSRANK_BRADLEY_TERRY_H_
#define LTSRANK_BRADLEY_TERRY_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ltsrank/comparisons.h"
#include "ltsrank/error.h"

namespace ltsrank {

struct BradleyTerryOptions {
  // Converged once max_i |log p_i(new) - log p_i(old)| < tolerance.
  double tolerance = 1e-8;
  int max_iterations = 10000;
  // Pseudo-count for win graphs that are not strongly connected. With 0 such
  // inputs are rejected.
  double smoothing = 0.01;
};

template <typename Scalar>
struct BradleyTerryResult {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  std::vector<std::string> ids;
  Vector strengths;          // positive, sums to one
  std::vector<int> ranking;  // item indices by descending strength
  int iterations = 0;
  bool converged = false;
  bool smoothed = false;
  Polarity polarity = Polarity::kComplexity;
  // Log-likelihood of the (possibly smoothed) counts: entry 0 at the uniform
  // start, entry k after sweep k.
  std::vector<Scalar> log_likelihood;
};

using BtResult = BradleyTerryResult<double>;

// i -> j whenever wins(i, j) > 0.
template <typename Derived>
bool WinGraphStronglyConnected(const Eigen::MatrixBase<Derived>& wins) {
  const Eigen::Index k = wins.rows();
  if (k <= 1) return true;
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(k, 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    Eigen::Index count = 1;
    while (!stack.empty()) {
      const Eigen::Index u = stack.back();
      stack.pop_back();
      for (Eigen::Index v = 0; v < k; ++v) {
        const auto w = transpose ? wins(v, u) : wins(u, v);
        if (w > 0 && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == k;
  };
  return reaches_all(false) && reaches_all(true);
}

template <typename Derived, typename VectorDerived>
typename Derived::Scalar BradleyTerryLogLikelihood(
    const Eigen::MatrixBase<Derived>& wins,
    const Eigen::MatrixBase<VectorDerived>& strengths) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = wins.rows();
  Scalar total(0);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j || wins(i, j) == Scalar(0)) continue;
      total += wins(i, j) * (std::log(strengths(i)) -
                             std::log(strengths(i) + strengths(j)));
    }
  }
  return total;
}

template <typename Scalar = double>
BradleyTerryResult<Scalar> FitBradleyTerry(
    const ComparisonMatrix& matrix, const BradleyTerryOptions& options = {}) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const int k = matrix.size();
  if (k < 2) throw Error("Bradley-Terry needs at least two items");
  if (matrix.wins.rows() != k || matrix.wins.cols() != k) {
    throw Error("win matrix does not match the item list");
  }
  if ((matrix.wins.array() < 0).any()) throw Error("negative win count");
  if (matrix.wins.sum() <= 0) throw Error("no comparisons to fit");

  BradleyTerryResult<Scalar> result;
  result.ids = matrix.ids;
  result.polarity = matrix.polarity;

  Matrix wins = matrix.wins.template cast<Scalar>();
  wins.diagonal().setZero();
  if (!WinGraphStronglyConnected(wins)) {
    if (!(options.smoothing > 0)) {
      throw Error(
          "win graph is not strongly connected; the maximum likelihood "
          "estimate does not exist without smoothing");
    }
    wins.array() += Scalar(options.smoothing);
    wins.diagonal().setZero();
    result.smoothed = true;
  }

  const Matrix comparisons = wins + wins.transpose();
  const Vector total_wins = wins.rowwise().sum();
  Vector p = Vector::Constant(k, Scalar(1) / Scalar(k));
  result.log_likelihood.push_back(BradleyTerryLogLikelihood(wins, p));

  for (int sweep = 1; sweep <= options.max_iterations; ++sweep) {
    const Matrix pair_sums =
        p.replicate(1, k) + p.transpose().replicate(k, 1);
    Matrix ratio = comparisons.cwiseQuotient(pair_sums);
    ratio.diagonal().setZero();
    Vector next = total_wins.cwiseQuotient(ratio.rowwise().sum());
    next /= next.sum();

    const Scalar change =
        (next.array().log() - p.array().log()).abs().maxCoeff();
    p = std::move(next);
    result.iterations = sweep;
    result.log_likelihood.push_back(BradleyTerryLogLikelihood(wins, p));
    if (change < Scalar(options.tolerance)) {
      result.converged = true;
      break;
    }
  }

  result.strengths = p;
  result.ranking.resize(k);
  std::iota(result.ranking.begin(), result.ranking.end(), 0);
  std::stable_sort(result.ranking.begin(), result.ranking.end(),
                   [&](int a, int b) { return p(a) > p(b); });
  return result;
}

}  // namespace ltsrank

#endif  // LTSRANK_BRADLEY_TERRY_H_
