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

// ltsrank: complexity metrics for labeled transition systems, pairwise
// annotation, Bradley-Terry ranking and rank correlation.
//
// Exit status: 0 on success, 1 on a usage error, 2 on a data error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "ltsrank/bradley_terry.h"
#include "ltsrank/comparisons.h"
#include "ltsrank/corpus.h"
#include "ltsrank/correlation.h"
#include "ltsrank/csv.h"
#include "ltsrank/error.h"
#include "ltsrank/lts.h"
#include "ltsrank/metrics.h"
#include "ltsrank/pairs.h"
#include "ltsrank/service.h"
#include "ltsrank/simulate.h"

namespace ltsrank {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Bad flag values that CLI11 cannot catch on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Writes to `path`, or to stdout when it is empty.
void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

void Warn(const std::string& message) {
  std::cerr << "ltsrank: warning: " << message << '\n';
}

Metric MetricFlag(const std::string& name) {
  if (const auto metric = ParseMetric(name)) return *metric;
  std::string known;
  for (Metric m : kAllMetrics) {
    known += known.empty() ? "" : ", ";
    known += MetricName(m);
  }
  throw UsageError("unknown metric '" + name + "' (known: " + known + ")");
}

Polarity PolarityFlag(const std::string& name) {
  try {
    return ParsePolarity(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Parsed designs of a corpus; unparseable files are reported and skipped.
struct LoadedCorpus {
  CorpusIndex index;
  std::vector<LtsDesign> designs;
  int failures = 0;
};

LoadedCorpus LoadCorpus(const fs::path& dir) {
  LoadedCorpus corpus;
  corpus.index = IngestDir(dir);
  for (const CorpusEntry& e : corpus.index.entries) {
    if (e.ok) {
      corpus.designs.push_back(e.design);
    } else {
      ++corpus.failures;
      Warn(e.path.string() + ": " + e.error);
    }
  }
  return corpus;
}

std::vector<MetricReport> ComputeReports(std::span<const LtsDesign> designs) {
  std::vector<MetricReport> reports;
  reports.reserve(designs.size());
  for (const LtsDesign& d : designs) {
    try {
      reports.push_back(ComputeAll(d));
    } catch (const Error& e) {
      throw Error("design '" + d.id + "': " + e.what());
    }
  }
  return reports;
}

std::vector<ComparisonRecord> LoadRecords(const fs::path& csv) {
  try {
    return ParseRecordsCsv(ReadText(csv));
  } catch (const ParseError& e) {
    throw Error(csv.string() + ":" + e.what());
  }
}

Json ReportJson(const MetricReport& r) {
  Json json;
  json["design_id"] = r.design_id;
  json["N"] = r.num_states;
  json["E"] = r.num_transitions;
  json["P"] = r.num_components;
  json["V"] = r.cyclomatic;
  json["state_space"] = r.state_space_size;
  json["avg_branching"] = r.avg_branching;
  json["max_depth"] = r.max_depth;
  json["L"] = r.longest_path;
  json["albin"] = r.albin;
  json["modularity_q"] = r.modularity_q;
  json["redundancy_j"] = r.redundancy_j;
  json["identical_pairs"] = r.identical_successor_pairs;
  return json;
}

// The first `left` columns left-aligned, the rest right-aligned, two spaces
// apart.
std::string AlignedTable(const std::vector<std::vector<std::string>>& rows,
                         std::size_t left = 1) {
  if (rows.empty()) return {};
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      if (c < left) {
        out += fmt::format("{:<{}}", row[c], width[c]);
      } else {
        out += fmt::format("{:>{}}", row[c], width[c]);
      }
    }
    out += '\n';
  }
  return out;
}

std::string FormatDouble(double v) { return fmt::format("{:.6f}", v); }

// --- metrics -----------------------------------------------------------

struct MetricsArgs {
  std::string dir;
  std::string format = "csv";
  bool strict = false;
  std::string out;
};

int RunMetrics(const MetricsArgs& args) {
  const LoadedCorpus corpus = LoadCorpus(args.dir);
  std::vector<MetricReport> reports;
  // design id -> error, for files that did not parse or could not be measured
  std::map<std::string, std::string> failed;
  for (const CorpusEntry& e : corpus.index.entries) {
    if (!e.ok) failed[e.design_id] = e.error;
  }
  for (const LtsDesign& d : corpus.designs) {
    try {
      reports.push_back(ComputeAll(d));
    } catch (const Error& e) {
      Warn("design '" + d.id + "': " + e.what());
      failed[d.id] = e.what();
    }
  }

  std::string text;
  if (args.format == "json") {
    Json list = Json::array();
    for (const MetricReport& r : reports) list.push_back(ReportJson(r));
    for (const auto& [id, error] : failed) {
      Json row;
      row["design_id"] = id;
      row["error"] = error;
      list.push_back(std::move(row));
    }
    text = list.dump(2) + "\n";
  } else if (args.format == "table") {
    if (!reports.empty()) {
      std::vector<std::vector<std::string>> rows = {
          {"design_id", "N", "E", "P", "V", "avg_branching", "max_depth", "L",
           "albin", "modularity_q", "redundancy_j"}};
      for (const MetricReport& r : reports) {
        rows.push_back({r.design_id, std::to_string(r.num_states),
                        std::to_string(r.num_transitions),
                        std::to_string(r.num_components),
                        std::to_string(r.cyclomatic),
                        FormatDouble(r.avg_branching),
                        std::to_string(r.max_depth),
                        std::to_string(r.longest_path),
                        std::to_string(r.albin), FormatDouble(r.modularity_q),
                        FormatDouble(r.redundancy_j)});
      }
      text = AlignedTable(rows);
    }
  } else if (!reports.empty() || !failed.empty()) {
    std::ostringstream csv;
    WriteMetricsCsv(csv, reports);
    text = csv.str();
  }
  Emit(text, args.out);
  if (args.strict && !failed.empty()) {
    std::cerr << "ltsrank: error: " << failed.size()
              << " design(s) could not be measured\n";
    return kExitData;
  }
  return 0;
}

// --- rank --------------------------------------------------------------

struct RankArgs {
  std::string dir;
  std::string metric = "albin";
  std::string direction = "asc";
  std::string format = "csv";
  std::string out;
};

int RunRank(const RankArgs& args) {
  const Metric metric = MetricFlag(args.metric);
  const Direction direction =
      args.direction == "asc" ? Direction::kAscending : Direction::kDescending;
  const LoadedCorpus corpus = LoadCorpus(args.dir);
  const std::vector<MetricReport> reports = ComputeReports(corpus.designs);
  const RankedCorpus ranked = RankCorpus(reports, metric, direction);

  std::string text;
  if (args.format == "json") {
    Json json;
    json["metric"] = MetricName(metric);
    json["direction"] = args.direction;
    json["entries"] = Json::array();
    for (const RankedEntry& e : ranked.entries) {
      Json entry;
      entry["design_id"] = e.design_id;
      entry["value"] = e.value;
      entry["rank"] = e.rank;
      json["entries"].push_back(std::move(entry));
    }
    text = json.dump(2) + "\n";
  } else if (args.format == "table") {
    std::vector<std::vector<std::string>> rows = {
        {"design_id", std::string(MetricName(metric)), "rank"}};
    for (const RankedEntry& e : ranked.entries) {
      rows.push_back(
          {e.design_id, fmt::format("{}", e.value), fmt::format("{}", e.rank)});
    }
    text = AlignedTable(rows);
  } else {
    text = fmt::format("rank,design_id,{}\n", MetricName(metric));
    for (const RankedEntry& e : ranked.entries) {
      text += fmt::format("{},{},{}\n", e.rank, CsvEscape(e.design_id),
                          e.value);
    }
  }
  Emit(text, args.out);
  return 0;
}

// --- sample-pairs ------------------------------------------------------

struct SamplePairsArgs {
  int items = 0;
  std::string corpus;
  int pairs = 324;
  std::uint64_t seed = 0;
  std::string out;
};

int RunSamplePairs(const SamplePairsArgs& args) {
  std::vector<std::string> ids;
  int items = args.items;
  if (!args.corpus.empty()) {
    ids = LoadCorpus(args.corpus).index.DesignIds();
    items = static_cast<int>(ids.size());
  }
  const PairSample sample = SamplePairs(items, args.pairs, args.seed);
  if (!sample.connected) {
    Warn(fmt::format("{} pairs leave the {} items disconnected after {} "
                     "draw(s)",
                     sample.pairs.size(), items, sample.attempts));
  }

  std::string text = ids.empty() ? "pair_id,item_a,item_b\n"
                                 : "pair_id,item_a,item_b,design_a,design_b\n";
  for (std::size_t i = 0; i < sample.pairs.size(); ++i) {
    const auto [a, b] = sample.pairs[i];
    text += fmt::format("{},{},{}", i + 1, a, b);
    if (!ids.empty()) {
      text += "," + CsvEscape(ids[a]) + "," + CsvEscape(ids[b]);
    }
    text += '\n';
  }
  Emit(text, args.out);
  return 0;
}

// Reads a sample-pairs CSV. Item indices are resolved against `ids` unless
// the file names the designs itself.
std::vector<AnnotationPair> ReadPairs(const fs::path& path,
                                      std::span<const std::string> ids) {
  const std::vector<CsvRow> rows = ParseCsv(ReadText(path));
  auto fail = [&](int line, const std::string& msg) -> Error {
    return Error(path.string() + ":" + std::to_string(line) + ": " + msg);
  };
  if (rows.empty() || rows[0].size() < 3 || rows[0][0] != "pair_id" ||
      rows[0][1] != "item_a" || rows[0][2] != "item_b") {
    throw fail(1, "expected a pair_id,item_a,item_b header");
  }
  const bool named = rows[0].size() >= 5 && rows[0][3] == "design_a" &&
                     rows[0][4] == "design_b";
  std::vector<AnnotationPair> pairs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    const int line = static_cast<int>(i) + 1;
    if (row.size() != rows[0].size()) throw fail(line, "wrong column count");
    try {
      AnnotationPair pair;
      pair.pair_id = std::stoi(row[0]);
      if (named) {
        pair.design_a = row[3];
        pair.design_b = row[4];
      } else {
        const int a = std::stoi(row[1]);
        const int b = std::stoi(row[2]);
        if (a < 0 || b < 0 || a >= static_cast<int>(ids.size()) ||
            b >= static_cast<int>(ids.size())) {
          throw fail(line, "item index outside the corpus");
        }
        pair.design_a = ids[a];
        pair.design_b = ids[b];
      }
      pairs.push_back(std::move(pair));
    } catch (const std::logic_error&) {
      throw fail(line, "malformed pair");
    }
  }
  return pairs;
}

// --- simulate ----------------------------------------------------------

struct SimulateArgs {
  std::string corpus;
  std::string pairs;
  std::string metric = "albin";
  double noise = 0.1;
  int annotators = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int RunSimulate(const SimulateArgs& args) {
  SyntheticAnnotatorOptions options;
  options.metric = MetricFlag(args.metric);
  options.noise = args.noise;
  options.annotators = args.annotators;
  options.seed = args.seed;
  const LoadedCorpus corpus = LoadCorpus(args.corpus);
  const std::vector<std::string> ids = corpus.index.DesignIds();
  const std::vector<AnnotationPair> pairs = ReadPairs(args.pairs, ids);
  const std::vector<MetricReport> reports = ComputeReports(corpus.designs);
  Emit(WriteRecordsCsv(SimulateAnnotations(reports, pairs, options)),
       args.out);
  return 0;
}

// --- fit-bt ------------------------------------------------------------

struct FitArgs {
  std::string csv;
  std::string polarity = "complexity";
  double alpha = 0.01;
  double tolerance = 1e-8;
  int max_iterations = 10000;
  std::string format = "table";
  std::string out;
};

BtResult Fit(std::span<const ComparisonRecord> records, Polarity polarity,
             const FitArgs& args) {
  BradleyTerryOptions options;
  options.smoothing = args.alpha;
  options.tolerance = args.tolerance;
  options.max_iterations = args.max_iterations;
  BtResult result = FitBradleyTerry(Aggregate(records, polarity), options);
  if (result.smoothed) {
    Warn(fmt::format("win graph not strongly connected; added {} to every "
                     "pair before fitting",
                     args.alpha));
  }
  if (!result.converged) {
    Warn(fmt::format("no convergence after {} iterations", result.iterations));
  }
  return result;
}

int RunFitBt(const FitArgs& args) {
  const Polarity polarity = PolarityFlag(args.polarity);
  const std::vector<ComparisonRecord> records = LoadRecords(args.csv);
  const BtResult result = Fit(records, polarity, args);

  std::string text;
  if (args.format == "json") {
    text = ToJson(result).dump(2) + "\n";
  } else if (args.format == "csv") {
    text = "rank,design_id,strength\n";
    for (std::size_t r = 0; r < result.ranking.size(); ++r) {
      const int i = result.ranking[r];
      text += fmt::format("{},{},{}\n", r + 1, CsvEscape(result.ids[i]),
                          result.strengths(i));
    }
  } else {
    std::vector<std::vector<std::string>> rows = {
        {"rank", "design_id", "strength"}};
    for (std::size_t r = 0; r < result.ranking.size(); ++r) {
      const int i = result.ranking[r];
      rows.push_back({std::to_string(r + 1), result.ids[i],
                      fmt::format("{:.8f}", result.strengths(i))});
    }
    text = AlignedTable(rows, 2);
    text += fmt::format("# polarity {}, {} after {} iterations{}\n",
                        PolarityName(polarity),
                        result.converged ? "converged" : "stopped",
                        result.iterations,
                        result.smoothed ? ", smoothed" : "");
  }
  Emit(text, args.out);
  return 0;
}

// --- correlate ---------------------------------------------------------

struct CorrelateArgs {
  FitArgs fit;
  std::string dir;
  std::string reference = "bradley-terry";
};

int RunCorrelate(const CorrelateArgs& args) {
  const Polarity polarity = PolarityFlag(args.fit.polarity);
  const LoadedCorpus corpus = LoadCorpus(args.dir);
  const std::vector<ComparisonRecord> records = LoadRecords(args.fit.csv);

  std::set<std::string> annotated;
  for (const ComparisonRecord& r : records) {
    annotated.insert(r.design_a);
    annotated.insert(r.design_b);
  }
  std::vector<LtsDesign> designs;
  for (const LtsDesign& d : corpus.designs) {
    if (annotated.contains(d.id)) designs.push_back(d);
  }
  for (const std::string& id : annotated) {
    if (corpus.index.Find(id) == nullptr || !corpus.index.Find(id)->ok) {
      throw Error("annotations reference design '" + id +
                  "', which is not in " + args.dir);
    }
  }
  if (designs.size() < corpus.designs.size()) {
    Warn(fmt::format("{} corpus design(s) have no annotations and are left "
                     "out",
                     corpus.designs.size() - designs.size()));
  }

  const BtResult human = Fit(records, polarity, args.fit);
  const CorrelationReport report =
      Correlate(ComputeReports(designs), human, args.reference);

  std::string text;
  if (args.fit.format == "json") {
    text = ToJson(report).dump(2) + "\n";
  } else if (args.fit.format == "csv") {
    text = FormatCorrelationCsv(report);
  } else {
    text = FormatCorrelationTable(report);
  }
  Emit(text, args.fit.out);
  return 0;
}

// --- agreement ---------------------------------------------------------

int RunAgreement(const std::string& csv) {
  const std::vector<ComparisonRecord> records = LoadRecords(csv);
  std::cout << fmt::format("{:.3f}%\n", AgreementPercent(records));
  return 0;
}

// --- gen ---------------------------------------------------------------

// "x" or "lo:hi".
template <typename T>
std::pair<T, T> ParseRange(const std::string& text, const char* flag) {
  auto parse = [&](const std::string& s) {
    std::istringstream in(s);
    T value{};
    if (!(in >> value) || !in.eof()) {
      throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
    }
    return value;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const T v = parse(text);
    return {v, v};
  }
  const T lo = parse(text.substr(0, colon));
  const T hi = parse(text.substr(colon + 1));
  if (hi < lo) throw UsageError(std::string(flag) + ": empty range " + text);
  return {lo, hi};
}

struct GenArgs {
  std::string states = "12";
  std::string density = "1.5";
  int labels = 3;
  std::uint64_t seed = 0;
  int count = 1;
  std::string prefix = "design";
  std::string out;
};

int RunGen(const GenArgs& args) {
  const auto [n_lo, n_hi] = ParseRange<int>(args.states, "--states");
  const auto [d_lo, d_hi] = ParseRange<double>(args.density, "--density");
  if (args.count < 0) throw UsageError("--count must be non-negative");
  fs::create_directories(args.out);

  std::mt19937_64 rng(args.seed);
  const int digits =
      std::max(3, static_cast<int>(std::to_string(args.count).size()));
  for (int i = 0; i < args.count; ++i) {
    const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
    const double density =
        d_lo == d_hi ? d_lo : std::uniform_real_distribution<double>(d_lo, d_hi)(rng);
    const std::uint64_t design_seed = rng();
    const std::string id = fmt::format("{}_{:0{}}", args.prefix, i, digits);
    LtsDesign design;
    try {
      design = GenerateRandom(n, density, args.labels, design_seed, id);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    Emit(SerializeAut(design), (fs::path(args.out) / (id + ".aut")).string());
  }
  return 0;
}

// --- export ------------------------------------------------------------

struct ExportArgs {
  bool dot = false;
  bool json = false;
  std::string dir;
  std::string out;
};

int RunExport(const ExportArgs& args) {
  if (args.dot == args.json) throw UsageError("pass exactly one of --dot, --json");
  const LoadedCorpus corpus = LoadCorpus(args.dir);
  fs::create_directories(args.out);
  for (const LtsDesign& d : corpus.designs) {
    const fs::path file = fs::path(args.out) / (d.id + (args.dot ? ".dot" : ".json"));
    Emit(args.dot ? ToDot(d) : ToGraphJson(d) + "\n", file.string());
  }
  return corpus.failures > 0 ? kExitData : 0;
}

// --- serve -------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string corpus;
  int pairs = 324;
  std::uint64_t seed = 0;
  std::string log = "annotations.jsonl";
  std::string polarity = "complexity";
  bool shuffle = false;
  double alpha = 0.01;
  std::string ui;
};

int RunServe(const ServeArgs& args) {
  ServiceConfig config;
  config.corpus_dir = args.corpus;
  config.log_path = args.log;
  config.pair_count = args.pairs;
  config.seed = args.seed;
  config.polarity = PolarityFlag(args.polarity);
  config.shuffle_per_annotator = args.shuffle;
  config.smoothing = args.alpha;
  config.static_dir = args.ui;
  std::cerr << fmt::format("ltsrank: serving {} on http://{}:{}\n",
                           args.corpus, args.host, args.port);
  RunAnnotationServer(std::move(config), args.host, args.port);
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{
      "Complexity metrics for labeled transition systems, pairwise "
      "annotation, Bradley-Terry ranking and rank correlation.",
      "ltsrank"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ltsrank 0.1.0");

  const std::vector<std::string> formats = {"csv", "table", "json"};
  const std::vector<std::string> polarities = {"complexity", "preference"};
  std::function<int()> run;

  MetricsArgs metrics;
  auto* cmd = app.add_subcommand("metrics", "Compute all metrics per design");
  cmd->add_option("dir", metrics.dir, "Corpus directory of .aut files")
      ->required();
  cmd->add_option("--format", metrics.format)->check(CLI::IsMember(formats));
  cmd->add_flag("--strict", metrics.strict,
                "Exit with status 2 if any file fails to parse");
  cmd->add_option("-o,--out", metrics.out, "Output file (default stdout)");
  cmd->callback([&] { run = [&] { return RunMetrics(metrics); }; });

  RankArgs rank;
  cmd = app.add_subcommand("rank", "Order a corpus by one metric");
  cmd->add_option("dir", rank.dir)->required();
  cmd->add_option("--metric", rank.metric, "Metric name, e.g. albin");
  cmd->add_option("--direction", rank.direction)
      ->check(CLI::IsMember({"asc", "desc"}));
  cmd->add_option("--format", rank.format)->check(CLI::IsMember(formats));
  cmd->add_option("-o,--out", rank.out);
  cmd->callback([&] { run = [&] { return RunRank(rank); }; });

  SamplePairsArgs sample;
  cmd = app.add_subcommand("sample-pairs", "Draw distinct item pairs");
  auto* items = cmd->add_option("--items", sample.items, "Number of items")
                    ->check(CLI::NonNegativeNumber);
  auto* from = cmd->add_option("--corpus", sample.corpus,
                               "Take the items from a corpus directory");
  items->excludes(from);
  cmd->add_option("-n,--n", sample.pairs, "Number of pairs");
  cmd->add_option("--seed", sample.seed);
  cmd->add_option("-o,--out", sample.out);
  cmd->callback([&] {
    if (sample.corpus.empty() && items->count() == 0) {
      throw CLI::RequiredError("--items or --corpus");
    }
    run = [&] { return RunSamplePairs(sample); };
  });

  SimulateArgs simulate;
  cmd = app.add_subcommand(
      "simulate", "Answer sampled pairs with a noisy metric-driven annotator");
  cmd->add_option("--corpus", simulate.corpus)->required();
  cmd->add_option("--pairs", simulate.pairs, "CSV from sample-pairs")
      ->required();
  cmd->add_option("--metric", simulate.metric);
  cmd->add_option("--noise", simulate.noise, "Probability of a flipped choice");
  cmd->add_option("--annotators", simulate.annotators);
  cmd->add_option("--seed", simulate.seed);
  cmd->add_option("-o,--out", simulate.out);
  cmd->callback([&] { run = [&] { return RunSimulate(simulate); }; });

  auto add_fit_options = [&](CLI::App* sub, FitArgs& fit) {
    sub->add_option("--polarity", fit.polarity,
                    "complexity: the design not chosen as simpler wins; "
                    "preference: the chosen design wins")
        ->check(CLI::IsMember(polarities));
    sub->add_option("--alpha", fit.alpha,
                    "Pseudo-count used when the win graph is not strongly "
                    "connected (0 disables)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", fit.tolerance);
    sub->add_option("--max-iter", fit.max_iterations);
    sub->add_option("-o,--out", fit.out);
  };

  FitArgs fit;
  cmd = app.add_subcommand("fit-bt", "Fit Bradley-Terry strengths");
  cmd->add_option("annotations", fit.csv, "Annotation CSV")->required();
  cmd->add_option("--format", fit.format)->check(CLI::IsMember(formats));
  add_fit_options(cmd, fit);
  cmd->callback([&] { run = [&] { return RunFitBt(fit); }; });

  CorrelateArgs correlate;
  cmd = app.add_subcommand("correlate",
                           "Kendall's tau of each metric against the fitted "
                           "human ranking");
  cmd->add_option("dir", correlate.dir)->required();
  cmd->add_option("annotations", correlate.fit.csv)->required();
  cmd->add_option("--format", correlate.fit.format)
      ->check(CLI::IsMember(formats));
  cmd->add_option("--reference", correlate.reference);
  add_fit_options(cmd, correlate.fit);
  cmd->callback([&] { run = [&] { return RunCorrelate(correlate); }; });

  std::string agreement_csv;
  cmd = app.add_subcommand("agreement", "Mean pairwise annotator agreement");
  cmd->add_option("annotations", agreement_csv)->required();
  cmd->callback([&] { run = [&] { return RunAgreement(agreement_csv); }; });

  GenArgs gen;
  cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  cmd->add_option("--states", gen.states, "States per design: N or LO:HI");
  cmd->add_option("--density", gen.density,
                  "Transitions per state: D or LO:HI");
  cmd->add_option("--labels", gen.labels);
  cmd->add_option("--seed", gen.seed);
  cmd->add_option("--count", gen.count);
  cmd->add_option("--prefix", gen.prefix);
  cmd->add_option("--out", gen.out)->required();
  cmd->callback([&] { run = [&] { return RunGen(gen); }; });

  ExportArgs exporter;
  cmd = app.add_subcommand("export", "Write DOT or graph JSON per design");
  auto* dot = cmd->add_flag("--dot", exporter.dot);
  auto* json = cmd->add_flag("--json", exporter.json);
  dot->excludes(json);
  cmd->add_option("dir", exporter.dir)->required();
  cmd->add_option("--out", exporter.out)->required();
  cmd->callback([&] { run = [&] { return RunExport(exporter); }; });

  ServeArgs serve;
  cmd = app.add_subcommand("serve", "Run the annotation HTTP service");
  cmd->add_option("--host", serve.host);
  cmd->add_option("--port", serve.port)
      ->envname("LTSRANK_PORT")
      ->check(CLI::Range(0, 65535));
  cmd->add_option("--corpus", serve.corpus)
      ->envname("LTSRANK_CORPUS")
      ->required();
  cmd->add_option("--pairs", serve.pairs)->envname("LTSRANK_PAIRS");
  cmd->add_option("--seed", serve.seed)->envname("LTSRANK_SEED");
  cmd->add_option("--log", serve.log, "Annotation log (JSON lines)");
  cmd->add_option("--polarity", serve.polarity)
      ->check(CLI::IsMember(polarities));
  cmd->add_option("--alpha", serve.alpha);
  cmd->add_flag("--shuffle-per-annotator", serve.shuffle);
  cmd->add_option("--ui", serve.ui, "Directory of static client files");
  cmd->callback([&] { run = [&] { return RunServe(serve); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "ltsrank: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ltsrank: error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace
}  // namespace ltsrank

int main(int argc, char** argv) { return ltsrank::Main(argc, argv); }
