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

// On-disk corpus of .aut designs and the append-only annotation log.

#ifndef LTSRANK_CORPUS_H_
#define LTSRANK_CORPUS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ltsrank/comparisons.h"
#include "ltsrank/lts.h"

namespace ltsrank {

struct CorpusEntry {
  std::string design_id;  // file stem
  std::filesystem::path path;
  int num_states = 0;
  int num_transitions = 0;
  bool ok = false;
  std::string error;  // parse failure, when !ok
  LtsDesign design;   // empty when !ok

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

struct CorpusIndex {
  std::filesystem::path root;
  std::vector<CorpusEntry> entries;  // sorted by design_id

  const CorpusEntry* Find(std::string_view design_id) const;
  // Successfully parsed designs, in index order.
  std::vector<LtsDesign> Designs() const;
  std::vector<std::string> DesignIds() const;

  friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;
};

// Parses every *.aut file below `root` (recursively). Files that fail to
// parse are recorded with their error; the scan continues. Throws Error if
// `root` is not a readable directory or two files share a stem.
CorpusIndex IngestDir(const std::filesystem::path& root);

// Line-delimited JSON log of comparison records. Appends take an exclusive
// flock on the file and write each record with a single write(2); loads take
// a shared lock and so observe a prefix of the appends.
class AnnotationLog {
 public:
  struct LoadResult {
    std::vector<ComparisonRecord> records;  // append order
    std::vector<std::string> warnings;      // skipped lines
  };

  // An empty `known_designs` accepts any design id.
  explicit AnnotationLog(std::filesystem::path path,
                         std::set<std::string> known_designs = {});

  // Throws Error for invalid records or unknown design ids.
  void Append(const ComparisonRecord& record) const;
  // A missing file loads as empty. Truncated or unparseable lines are
  // skipped and reported in `warnings`.
  LoadResult Load() const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::set<std::string> known_designs_;
};

}  // namespace ltsrank

#endif  // LTSRANK_CORPUS_H_
