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

// Minimal RFC 4180 reading and writing.

#ifndef LTSRANK_CSV_H_
#define LTSRANK_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace ltsrank {

using CsvRow = std::vector<std::string>;

// Quotes the field when it contains a comma, quote or line break.
std::string CsvEscape(std::string_view field);
std::string CsvJoin(const CsvRow& row);

// Splits text into rows. Quoted fields may span lines; "" is an escaped
// quote. Blank lines are skipped. Throws ParseError on an unterminated quote.
std::vector<CsvRow> ParseCsv(std::string_view text);

}  // namespace ltsrank

#endif  // LTSRANK_CSV_H_
