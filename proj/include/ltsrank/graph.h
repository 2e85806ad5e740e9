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

// Graph primitives behind the metric engine: weak components, BFS depth,
// exact longest simple path, edge betweenness, Girvan-Newman community
// detection and Newman modularity.

#ifndef LTSRANK_GRAPH_H_
#define LTSRANK_GRAPH_H_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ltsrank/error.h"
#include "ltsrank/lts.h"

namespace ltsrank {

// Unordered node pair, stored as (min, max).
using Edge = std::pair<int, int>;

// Simple undirected graph: 0/1 symmetric adjacency with an empty diagonal.
// degrees.sum() == 2 * num_edges.
struct UndirectedProjection {
  Eigen::MatrixXi adjacency;
  Eigen::VectorXi degrees;
  int num_edges = 0;

  int num_nodes() const { return static_cast<int>(adjacency.rows()); }
  // Sorted by (min, max).
  std::vector<Edge> Edges() const;
};

// {i, j} is an edge iff some transition i -> j or j -> i exists with i != j.
UndirectedProjection ProjectUndirected(const LtsDesign& design);

// Builds a projection from an edge list; self-pairs and repeats are dropped.
UndirectedProjection ProjectionFromEdges(int num_nodes,
                                         std::span<const Edge> edges);

struct Components {
  int count = 0;
  // Component ids numbered by first appearance in node order.
  std::vector<int> labels;
};

// Weakly connected components; isolated states are their own components.
Components WeakComponents(const LtsDesign& design);
Components ConnectedComponents(const UndirectedProjection& graph);

// Distinct successors of every state, sorted ascending.
std::vector<std::vector<int>> SuccessorSets(const LtsDesign& design);

// Largest shortest-path distance from `source` to any reachable state.
int BfsDepth(const LtsDesign& design, int source);

struct LongestPathOptions {
  int node_cap = 200;
  std::chrono::milliseconds time_budget{30000};
};

// Exact number of edges on the longest directed simple path, over all start
// states. Throws Error when num_states exceeds the node cap or the search
// outlives the time budget.
int LongestSimplePath(const LtsDesign& design,
                      const LongestPathOptions& options = {});

// Shortest-path edge betweenness over unordered node pairs (Brandes
// accumulation). Pairs with several shortest paths split their unit of flow
// evenly among them.
std::map<Edge, double> EdgeBetweenness(const UndirectedProjection& graph);

struct CommunityAssignment {
  std::vector<int> labels;
  double q = 0.0;
  int num_communities = 0;
  // Edges removed before the returned partition appeared.
  int removals = 0;
};

// Component partition after each edge removal, starting with the partition
// of the intact graph. Removes the highest-betweenness edge each round,
// recomputing betweenness; ties go to the smallest (min, max) edge key.
std::vector<std::vector<int>> GirvanNewmanDendrogram(
    const UndirectedProjection& graph);

// The dendrogram partition with the largest modularity on the original graph.
// Ties resolve to the earliest partition.
CommunityAssignment GirvanNewman(const UndirectedProjection& graph);

// Q = 1/(2E) sum_ij (A_ij - k_i k_j / (2E)) delta(c_i, c_j).
//
// Evaluated per community as (2E * sum_c 2L_c - sum_c D_c^2) / (2E)^2, with
// L_c the intra-community edge count and D_c the community degree sum. The
// numerator is an exact integer, so the single-community partition gives
// exactly zero. Defined as 0 for graphs without edges.
template <typename Scalar = double>
Scalar ModularityQ(const UndirectedProjection& graph,
                   std::span<const int> labels) {
  const int n = graph.num_nodes();
  if (static_cast<int>(labels.size()) != n) {
    throw Error("community labels do not cover every node");
  }
  if (graph.num_edges == 0) return Scalar(0);

  int communities = 0;
  for (int c : labels) {
    if (c < 0) throw Error("negative community label");
    communities = std::max(communities, c + 1);
  }
  using IndexMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IndexMatrix membership = IndexMatrix::Zero(n, communities);
  for (int i = 0; i < n; ++i) membership(i, labels[i]) = 1;

  const IndexMatrix adjacency = graph.adjacency.cast<std::int64_t>();
  const std::int64_t twice_intra =
      (membership.transpose() * adjacency * membership).trace();
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> community_degree =
      membership.transpose() * graph.degrees.cast<std::int64_t>();

  const std::int64_t two_e = 2 * static_cast<std::int64_t>(graph.num_edges);
  const std::int64_t numerator =
      two_e * twice_intra - community_degree.squaredNorm();
  return Scalar(numerator) / (Scalar(two_e) * Scalar(two_e));
}

}  // namespace ltsrank

#endif  // LTSRANK_GRAPH_H_
