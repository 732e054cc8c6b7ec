// Copyright 2026 The topicsum Authors.
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

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace topicsum {

// RFC 4180 reader: comma separated, double-quote escaping, quoted fields may
// span lines. Malformed rows are still returned, with `malformed` set, so the
// caller can count them; parsing resynchronizes at the next row boundary.
struct CsvRow {
  std::vector<std::string> fields;
  bool malformed = false;
  std::size_t line = 0;  // 1-based line where the row starts
};

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next non-blank row, or nullopt at end of input.
  std::optional<CsvRow> next();

 private:
  int get();
  int peek() { return in_.peek(); }

  std::istream& in_;
  std::size_t line_ = 1;
};

}  // namespace topicsum
