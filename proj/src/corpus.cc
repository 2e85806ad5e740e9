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

#include "ltsrank/corpus.h"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "ltsrank/error.h"

namespace ltsrank {
namespace {

// Owns a file descriptor holding a flock.
class LockedFile {
 public:
  LockedFile(const std::filesystem::path& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags | O_CLOEXEC, 0644);
    if (fd_ < 0) {
      if (errno == ENOENT && !(flags & O_CREAT)) return;
      throw Error("cannot open " + path.string() + ": " + std::strerror(errno));
    }
    while (::flock(fd_, lock) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        throw Error("cannot lock " + path.string() + ": " +
                    std::strerror(errno));
      }
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;

  int fd() const { return fd_; }
  bool is_open() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

void WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("annotation log write failed: ") +
                  std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

const CorpusEntry* CorpusIndex::Find(std::string_view design_id) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), design_id,
      [](const CorpusEntry& e, std::string_view id) { return e.design_id < id; });
  return it != entries.end() && it->design_id == design_id ? &*it : nullptr;
}

std::vector<LtsDesign> CorpusIndex::Designs() const {
  std::vector<LtsDesign> designs;
  for (const CorpusEntry& e : entries) {
    if (e.ok) designs.push_back(e.design);
  }
  return designs;
}

std::vector<std::string> CorpusIndex::DesignIds() const {
  std::vector<std::string> ids;
  for (const CorpusEntry& e : entries) {
    if (e.ok) ids.push_back(e.design_id);
  }
  return ids;
}

CorpusIndex IngestDir(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error("not a readable directory: " + root.string());
  }
  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(root, ec);
  if (ec) throw Error("cannot read " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".aut") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  CorpusIndex index;
  index.root = root;
  std::map<std::string, fs::path> stems;
  for (const fs::path& file : files) {
    CorpusEntry entry;
    entry.design_id = file.stem().string();
    entry.path = file;
    if (auto [pos, inserted] = stems.emplace(entry.design_id, file); !inserted) {
      throw Error("design id '" + entry.design_id + "' used by both " +
                  pos->second.string() + " and " + file.string());
    }
    std::ifstream in(file, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    if (!in) {
      entry.error = "cannot read file";
    } else {
      try {
        entry.design = ParseAut(text.str(), entry.design_id);
        entry.num_states = entry.design.num_states;
        entry.num_transitions = entry.design.num_transitions();
        entry.ok = true;
      } catch (const Error& e) {
        entry.error = e.what();
      }
    }
    index.entries.push_back(std::move(entry));
  }
  std::sort(index.entries.begin(), index.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.design_id < b.design_id;
            });
  return index;
}

AnnotationLog::AnnotationLog(std::filesystem::path path,
                             std::set<std::string> known_designs)
    : path_(std::move(path)), known_designs_(std::move(known_designs)) {}

void AnnotationLog::Append(const ComparisonRecord& record) const {
  CheckRecord(record);
  if (!known_designs_.empty()) {
    for (const std::string* id : {&record.design_a, &record.design_b}) {
      if (!known_designs_.contains(*id)) {
        throw Error("design '" + *id + "' is not in the corpus");
      }
    }
  }
  std::string line = ToJson(record).dump();
  line.push_back('\n');

  LockedFile file(path_, O_RDWR | O_APPEND | O_CREAT, LOCK_EX);
  struct stat st {};
  if (::fstat(file.fd(), &st) == 0 && st.st_size > 0) {
    // A crashed writer may have left a partial line; start a fresh one.
    char last = '\n';
    if (::pread(file.fd(), &last, 1, st.st_size - 1) == 1 && last != '\n') {
      line.insert(line.begin(), '\n');
    }
  }
  WriteAll(file.fd(), line);
}

AnnotationLog::LoadResult AnnotationLog::Load() const {
  LoadResult result;
  std::string content;
  {
    LockedFile file(path_, O_RDONLY, LOCK_SH);
    if (!file.is_open()) return result;
    char buffer[1 << 16];
    for (;;) {
      const ssize_t n = ::read(file.fd(), buffer, sizeof buffer);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw Error("cannot read " + path_.string() + ": " +
                    std::strerror(errno));
      }
      if (n == 0) break;
      content.append(buffer, static_cast<std::size_t>(n));
    }
  }

  std::size_t pos = 0;
  int line_number = 0;
  while (pos < content.size()) {
    ++line_number;
    const auto end = content.find('\n', pos);
    if (end == std::string::npos) {
      result.warnings.push_back(path_.string() + ":" +
                                std::to_string(line_number) +
                                ": skipped truncated trailing line");
      break;
    }
    const std::string_view line(content.data() + pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    try {
      result.records.push_back(
          RecordFromJson(nlohmann::ordered_json::parse(line)));
    } catch (const std::exception& e) {
      result.warnings.push_back(path_.string() + ":" +
                                std::to_string(line_number) +
                                ": skipped unreadable record: " + e.what());
    }
  }
  return result;
}

}  // namespace ltsrank
