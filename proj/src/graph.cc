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

#include "ltsrank/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace ltsrank {
namespace {

std::vector<std::vector<int>> Neighbors(const UndirectedProjection& graph) {
  const int n = graph.num_nodes();
  std::vector<std::vector<int>> neighbors(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.adjacency(i, j) != 0) neighbors[i].push_back(j);
    }
  }
  return neighbors;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Unite(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

Components LabelRoots(UnionFind& sets, int n) {
  Components result;
  result.labels.assign(n, -1);
  std::vector<int> root_label(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = sets.Find(i);
    if (root_label[root] < 0) root_label[root] = result.count++;
    result.labels[i] = root_label[root];
  }
  return result;
}

// Depth-first enumeration of simple paths with a reachability bound: a
// branch is cut when even visiting every unvisited state still reachable
// from the current one cannot beat the best length found so far.
class LongestPathSearch {
 public:
  LongestPathSearch(std::vector<std::vector<int>> successors,
                    std::chrono::milliseconds budget)
      : successors_(std::move(successors)),
        n_(static_cast<int>(successors_.size())),
        on_path_(n_, 0),
        mark_(n_, 0),
        deadline_(std::chrono::steady_clock::now() + budget) {}

  int Run() {
    for (int start = 0; start < n_ && best_ < n_ - 1; ++start) {
      on_path_[start] = 1;
      Extend(start, 0);
      on_path_[start] = 0;
    }
    return best_;
  }

 private:
  int ReachableUnvisited(int from) {
    ++epoch_;
    int count = 0;
    stack_.clear();
    stack_.push_back(from);
    mark_[from] = epoch_;
    while (!stack_.empty()) {
      const int u = stack_.back();
      stack_.pop_back();
      for (int v : successors_[u]) {
        if (on_path_[v] || mark_[v] == epoch_) continue;
        mark_[v] = epoch_;
        ++count;
        stack_.push_back(v);
      }
    }
    return count;
  }

  void Extend(int node, int depth) {
    best_ = std::max(best_, depth);
    if (best_ == n_ - 1) return;
    if ((++expansions_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw Error("longest path search exceeded its time budget");
    }
    if (depth + ReachableUnvisited(node) <= best_) return;
    for (int next : successors_[node]) {
      if (on_path_[next]) continue;
      on_path_[next] = 1;
      Extend(next, depth + 1);
      on_path_[next] = 0;
      if (best_ == n_ - 1) return;
    }
  }

  std::vector<std::vector<int>> successors_;
  int n_;
  std::vector<char> on_path_;
  std::vector<int> mark_;
  std::vector<int> stack_;
  int epoch_ = 0;
  int best_ = 0;
  std::uint64_t expansions_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

std::vector<Edge> UndirectedProjection::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges);
  for (int i = 0; i < num_nodes(); ++i) {
    for (int j = i + 1; j < num_nodes(); ++j) {
      if (adjacency(i, j) != 0) edges.emplace_back(i, j);
    }
  }
  return edges;
}

UndirectedProjection ProjectionFromEdges(int num_nodes,
                                         std::span<const Edge> edges) {
  UndirectedProjection graph;
  graph.adjacency = Eigen::MatrixXi::Zero(num_nodes, num_nodes);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes) {
      throw Error("edge endpoint out of range");
    }
    if (a == b) continue;
    graph.adjacency(a, b) = 1;
    graph.adjacency(b, a) = 1;
  }
  graph.degrees = graph.adjacency.rowwise().sum();
  graph.num_edges = graph.degrees.sum() / 2;
  return graph;
}

UndirectedProjection ProjectUndirected(const LtsDesign& design) {
  std::vector<Edge> edges;
  edges.reserve(design.transitions.size());
  for (const Transition& t : design.transitions) {
    edges.emplace_back(t.source, t.target);
  }
  return ProjectionFromEdges(design.num_states, edges);
}

Components WeakComponents(const LtsDesign& design) {
  UnionFind sets(design.num_states);
  for (const Transition& t : design.transitions) sets.Unite(t.source, t.target);
  return LabelRoots(sets, design.num_states);
}

Components ConnectedComponents(const UndirectedProjection& graph) {
  UnionFind sets(graph.num_nodes());
  for (const auto& [a, b] : graph.Edges()) sets.Unite(a, b);
  return LabelRoots(sets, graph.num_nodes());
}

std::vector<std::vector<int>> SuccessorSets(const LtsDesign& design) {
  std::vector<std::vector<int>> successors(design.num_states);
  for (const Transition& t : design.transitions) {
    successors[t.source].push_back(t.target);
  }
  for (auto& s : successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return successors;
}

int BfsDepth(const LtsDesign& design, int source) {
  if (source < 0 || source >= design.num_states) {
    throw Error("BFS source state out of range");
  }
  const auto successors = SuccessorSets(design);
  std::vector<int> distance(design.num_states, -1);
  std::deque<int> queue{source};
  distance[source] = 0;
  int depth = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    depth = std::max(depth, distance[u]);
    for (int v : successors[u]) {
      if (distance[v] < 0) {
        distance[v] = distance[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return depth;
}

int LongestSimplePath(const LtsDesign& design,
                      const LongestPathOptions& options) {
  if (design.num_states > options.node_cap) {
    throw Error("graph too large for exact longest path (" +
                std::to_string(design.num_states) + " states, cap " +
                std::to_string(options.node_cap) + ")");
  }
  auto successors = SuccessorSets(design);
  for (int s = 0; s < design.num_states; ++s) {
    std::erase(successors[s], s);
  }
  return LongestPathSearch(std::move(successors), options.time_budget).Run();
}

std::map<Edge, double> EdgeBetweenness(const UndirectedProjection& graph) {
  const int n = graph.num_nodes();
  const auto neighbors = Neighbors(graph);
  std::map<Edge, double> betweenness;
  for (const Edge& e : graph.Edges()) betweenness[e] = 0.0;

  std::vector<double> paths(n);
  std::vector<double> dependency(n);
  std::vector<int> distance(n);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    std::fill(distance.begin(), distance.end(), -1);
    order.clear();

    std::deque<int> queue{s};
    distance[s] = 0;
    paths[s] = 1.0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : neighbors[u]) {
        if (distance[v] < 0) {
          distance[v] = distance[u] + 1;
          queue.push_back(v);
        }
        if (distance[v] == distance[u] + 1) paths[v] += paths[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : neighbors[w]) {
        if (distance[v] != distance[w] - 1) continue;
        const double flow = paths[v] / paths[w] * (1.0 + dependency[w]);
        betweenness[{std::min(v, w), std::max(v, w)}] += flow;
        dependency[v] += flow;
      }
    }
  }
  // Every unordered pair was counted once from each endpoint.
  for (auto& [edge, value] : betweenness) value /= 2.0;
  return betweenness;
}

std::vector<std::vector<int>> GirvanNewmanDendrogram(
    const UndirectedProjection& graph) {
  UndirectedProjection working = graph;
  std::vector<std::vector<int>> partitions;
  partitions.push_back(ConnectedComponents(working).labels);
  while (working.num_edges > 0) {
    const auto betweenness = EdgeBetweenness(working);
    auto best = betweenness.begin();
    for (auto it = betweenness.begin(); it != betweenness.end(); ++it) {
      if (it->second > best->second * (1.0 + 1e-12) + 1e-12) best = it;
    }
    const auto [a, b] = best->first;
    working.adjacency(a, b) = 0;
    working.adjacency(b, a) = 0;
    --working.degrees(a);
    --working.degrees(b);
    --working.num_edges;
    partitions.push_back(ConnectedComponents(working).labels);
  }
  return partitions;
}

CommunityAssignment GirvanNewman(const UndirectedProjection& graph) {
  const auto partitions = GirvanNewmanDendrogram(graph);
  CommunityAssignment best;
  for (std::size_t step = 0; step < partitions.size(); ++step) {
    const double q = ModularityQ(graph, partitions[step]);
    if (step == 0 || q > best.q) {
      best.labels = partitions[step];
      best.q = q;
      best.removals = static_cast<int>(step);
    }
  }
  best.num_communities =
      best.labels.empty()
          ? 0
          : *std::max_element(best.labels.begin(), best.labels.end()) + 1;
  return best;
}

}  // namespace ltsrank
