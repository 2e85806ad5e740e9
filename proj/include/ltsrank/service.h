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

// HTTP backend of the side-by-side annotation instrument.
//
//   GET  /designs                     [{id, N, E}]
//   GET  /designs/{id}/graph          graph JSON
//   GET  /designs/{id}/dot            Graphviz DOT
//   GET  /pairs/next?annotator=X      {pair_id, design_a, design_b, ...}
//                                     or {done: true, ...}
//   POST /annotations                 ComparisonRecord JSON -> ack
//   GET  /results/ranking             Bradley-Terry strengths
//   GET  /results/agreement           {percent}
//
// Every annotator walks the same seeded pair sequence. Sessions are rebuilt
// from the annotation log at startup, so a restart resumes where each
// annotator stopped.

#ifndef LTSRANK_SERVICE_H_
#define LTSRANK_SERVICE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ltsrank/comparisons.h"
#include "ltsrank/corpus.h"
#include "ltsrank/pairs.h"

namespace httplib {
class Server;
}

namespace ltsrank {

struct ServiceConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path log_path = "annotations.jsonl";
  int pair_count = 324;
  std::uint64_t seed = 0;
  Polarity polarity = Polarity::kComplexity;
  // Each annotator sees the shared pair set in an annotator-specific order.
  bool shuffle_per_annotator = false;
  double smoothing = 0.01;
  // Static files (e.g. the browser client) served under "/", if set.
  std::filesystem::path static_dir;
};

// Upper bound on any reported duration: 24 hours.
inline constexpr std::int64_t kMaxDurationMs = 24LL * 60 * 60 * 1000;

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class AnnotationService {
 public:
  // Ingests the corpus and replays the annotation log. Seed, pair count and
  // polarity are persisted beside the log on first start and reused on
  // later starts.
  explicit AnnotationService(ServiceConfig config);

  ApiResponse ListDesigns() const;
  ApiResponse DesignGraph(std::string_view id) const;
  ApiResponse DesignDot(std::string_view id) const;
  ApiResponse NextPair(std::string_view annotator);
  ApiResponse PostAnnotation(std::string_view body);
  ApiResponse Ranking() const;
  ApiResponse Agreement() const;

  // Registers every endpoint on `server`.
  void Mount(httplib::Server& server);

  const std::vector<AnnotationPair>& pairs() const { return pairs_; }
  const ServiceConfig& config() const { return config_; }

 private:
  struct Session {
    std::vector<int> order;  // indices into pairs_
    std::size_t cursor = 0;
  };

  Session& SessionFor(const std::string& annotator);
  std::vector<ComparisonRecord> LoadRecords() const;

  ServiceConfig config_;
  CorpusIndex corpus_;
  AnnotationLog log_;
  std::vector<AnnotationPair> pairs_;

  mutable std::mutex mutex_;
  std::map<std::string, Session> sessions_;
};

// Blocks serving on host:port until the process is stopped.
void RunAnnotationServer(ServiceConfig config, const std::string& host,
                         int port);

}  // namespace ltsrank

#endif  // LTSRANK_SERVICE_H_
