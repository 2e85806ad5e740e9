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

#include "ltsrank/service.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "httplib.h"
#include "ltsrank/bradley_terry.h"
#include "ltsrank/correlation.h"
#include "ltsrank/error.h"

namespace ltsrank {
namespace {

using Json = nlohmann::ordered_json;

ApiResponse JsonResponse(int status, const Json& body) {
  return {status, body.dump(), "application/json"};
}

ApiResponse ErrorResponse(int status, std::string_view message) {
  Json body;
  body["error"] = message;
  return JsonResponse(status, body);
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::filesystem::path MetaPath(const std::filesystem::path& log_path) {
  return log_path.string() + ".meta.json";
}

// Restores persisted sampling parameters, or persists the current ones.
void ReconcileMeta(ServiceConfig& config) {
  const auto path = MetaPath(config.log_path);
  std::ifstream in(path);
  if (in) {
    try {
      const Json meta = Json::parse(in);
      config.seed = meta.at("seed").get<std::uint64_t>();
      config.pair_count = meta.at("pairs").get<int>();
      config.polarity = ParsePolarity(meta.at("polarity").get<std::string>());
      config.shuffle_per_annotator = meta.value("shuffle_per_annotator", false);
      return;
    } catch (const std::exception& e) {
      throw Error("unreadable session metadata " + path.string() + ": " +
                  e.what());
    }
  }
  Json meta;
  meta["seed"] = config.seed;
  meta["pairs"] = config.pair_count;
  meta["polarity"] = PolarityName(config.polarity);
  meta["shuffle_per_annotator"] = config.shuffle_per_annotator;
  std::ofstream out(path);
  out << meta.dump(2) << '\n';
  if (!out) throw Error("cannot write session metadata " + path.string());
}

}  // namespace

AnnotationService::AnnotationService(ServiceConfig config)
    : config_(std::move(config)), log_(config_.log_path) {
  corpus_ = IngestDir(config_.corpus_dir);
  ReconcileMeta(config_);
  const std::vector<std::string> ids = corpus_.DesignIds();
  log_ = AnnotationLog(config_.log_path,
                       std::set<std::string>(ids.begin(), ids.end()));

  const int k = static_cast<int>(ids.size());
  const int available = k * (k - 1) / 2;
  const PairSample sample = SamplePairs(
      k, std::clamp(config_.pair_count, 0, available), config_.seed);
  pairs_ = LabelPairs(sample.pairs, ids);

  for (const ComparisonRecord& r : log_.Load().records) {
    Session& session = SessionFor(r.annotator_id);
    if (session.cursor >= session.order.size()) continue;
    const AnnotationPair& expected = pairs_[session.order[session.cursor]];
    if (r.pair_id == expected.pair_id && r.design_a == expected.design_a &&
        r.design_b == expected.design_b) {
      ++session.cursor;
    }
  }
}

AnnotationService::Session& AnnotationService::SessionFor(
    const std::string& annotator) {
  auto [it, inserted] = sessions_.try_emplace(annotator);
  if (inserted) {
    Session& session = it->second;
    session.order.resize(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      session.order[i] = static_cast<int>(i);
    }
    if (config_.shuffle_per_annotator) {
      std::mt19937_64 rng(config_.seed ^ Fnv1a(annotator));
      std::shuffle(session.order.begin(), session.order.end(), rng);
    }
  }
  return it->second;
}

std::vector<ComparisonRecord> AnnotationService::LoadRecords() const {
  return log_.Load().records;
}

ApiResponse AnnotationService::ListDesigns() const {
  Json list = Json::array();
  for (const CorpusEntry& e : corpus_.entries) {
    if (!e.ok) continue;
    Json item;
    item["id"] = e.design_id;
    item["N"] = e.num_states;
    item["E"] = e.num_transitions;
    list.push_back(std::move(item));
  }
  return JsonResponse(200, list);
}

ApiResponse AnnotationService::DesignGraph(std::string_view id) const {
  const CorpusEntry* entry = corpus_.Find(id);
  if (entry == nullptr || !entry->ok) {
    return ErrorResponse(404, "unknown design '" + std::string(id) + "'");
  }
  return {200, ToGraphJson(entry->design), "application/json"};
}

ApiResponse AnnotationService::DesignDot(std::string_view id) const {
  const CorpusEntry* entry = corpus_.Find(id);
  if (entry == nullptr || !entry->ok) {
    return ErrorResponse(404, "unknown design '" + std::string(id) + "'");
  }
  return {200, ToDot(entry->design), "text/vnd.graphviz"};
}

ApiResponse AnnotationService::NextPair(std::string_view annotator) {
  if (annotator.empty()) {
    return ErrorResponse(400, "missing 'annotator' query parameter");
  }
  std::lock_guard lock(mutex_);
  const Session& session = SessionFor(std::string(annotator));
  Json body;
  body["total"] = session.order.size();
  body["answered"] = session.cursor;
  if (session.cursor >= session.order.size()) {
    body["done"] = true;
    return JsonResponse(200, body);
  }
  const AnnotationPair& pair = pairs_[session.order[session.cursor]];
  body["done"] = false;
  body["pair_id"] = pair.pair_id;
  body["design_a"] = pair.design_a;
  body["design_b"] = pair.design_b;
  return JsonResponse(200, body);
}

ApiResponse AnnotationService::PostAnnotation(std::string_view body) {
  ComparisonRecord record;
  try {
    record = RecordFromJson(Json::parse(body));
    CheckRecord(record);
  } catch (const std::exception& e) {
    return ErrorResponse(400, e.what());
  }
  if (record.annotator_id.empty()) {
    return ErrorResponse(400, "missing annotator_id");
  }
  if (record.time_a_ms > kMaxDurationMs || record.time_b_ms > kMaxDurationMs ||
      record.total_ms > kMaxDurationMs) {
    return ErrorResponse(400, "duration exceeds 24 hours");
  }

  std::lock_guard lock(mutex_);
  Session& session = SessionFor(record.annotator_id);
  if (session.cursor >= session.order.size()) {
    return ErrorResponse(409, "session already complete");
  }
  const AnnotationPair& expected = pairs_[session.order[session.cursor]];
  if (record.pair_id != expected.pair_id ||
      record.design_a != expected.design_a ||
      record.design_b != expected.design_b) {
    Json conflict;
    conflict["error"] = "record does not answer the current pair";
    conflict["pair_id"] = expected.pair_id;
    conflict["design_a"] = expected.design_a;
    conflict["design_b"] = expected.design_b;
    return JsonResponse(409, conflict);
  }
  if (record.timestamp.empty()) record.timestamp = UtcNow();
  try {
    log_.Append(record);
  } catch (const Error& e) {
    return ErrorResponse(400, e.what());
  }
  ++session.cursor;

  Json ack;
  ack["ok"] = true;
  ack["answered"] = session.cursor;
  ack["total"] = session.order.size();
  return JsonResponse(200, ack);
}

ApiResponse AnnotationService::Ranking() const {
  const auto records = LoadRecords();
  if (records.empty()) return ErrorResponse(422, "no annotations recorded");
  try {
    const ComparisonMatrix matrix = Aggregate(records, config_.polarity);
    BradleyTerryOptions options;
    options.smoothing = config_.smoothing;
    return JsonResponse(200, ToJson(FitBradleyTerry(matrix, options)));
  } catch (const Error& e) {
    return ErrorResponse(422, e.what());
  }
}

ApiResponse AnnotationService::Agreement() const {
  const auto records = LoadRecords();
  try {
    Json body;
    body["percent"] = AgreementPercent(records);
    return JsonResponse(200, body);
  } catch (const Error& e) {
    return ErrorResponse(422, e.what());
  }
}

void AnnotationService::Mount(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.Get("/designs", [this, send](const httplib::Request&,
                                      httplib::Response& res) {
    send(res, ListDesigns());
  });
  server.Get(R"(/designs/([^/]+)/graph)",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, DesignGraph(req.matches[1].str()));
             });
  server.Get(R"(/designs/([^/]+)/dot)",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, DesignDot(req.matches[1].str()));
             });
  server.Get("/pairs/next",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, NextPair(req.get_param_value("annotator")));
             });
  server.Post("/annotations",
              [this, send](const httplib::Request& req, httplib::Response& res) {
                send(res, PostAnnotation(req.body));
              });
  server.Get("/results/ranking", [this, send](const httplib::Request&,
                                              httplib::Response& res) {
    send(res, Ranking());
  });
  server.Get("/results/agreement", [this, send](const httplib::Request&,
                                                httplib::Response& res) {
    send(res, Agreement());
  });
  if (!config_.static_dir.empty()) {
    server.set_mount_point("/", config_.static_dir.string());
  }
}

void RunAnnotationServer(ServiceConfig config, const std::string& host,
                         int port) {
  AnnotationService service(std::move(config));
  httplib::Server server;
  service.Mount(server);
  if (!server.listen(host, port)) {
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  }
}

}  // namespace ltsrank
