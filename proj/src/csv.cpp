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

#include "csv.hpp"

namespace topicsum {

int CsvReader::get() {
  const int c = in_.get();
  if (c == '\n') ++line_;
  return c;
}

std::optional<CsvRow> CsvReader::next() {
  for (;;) {
    if (peek() == std::char_traits<char>::eof()) return std::nullopt;

    CsvRow row;
    row.line = line_;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool after_closing_quote = false;
    bool any_content = false;

    for (;;) {
      const int c = get();
      if (c == std::char_traits<char>::eof()) {
        if (in_quotes) row.malformed = true;  // unterminated quote
        break;
      }
      if (in_quotes) {
        if (c == '"') {
          if (peek() == '"') {
            get();
            field.push_back('"');
          } else {
            in_quotes = false;
            after_closing_quote = true;
          }
        } else {
          field.push_back(static_cast<char>(c));
        }
        continue;
      }
      if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        after_closing_quote = false;
        any_content = true;
        continue;
      }
      if (c == '\r' && peek() == '\n') continue;
      if (c == '\n') break;
      if (c == '"') {
        if (field.empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
          any_content = true;
          continue;
        }
        row.malformed = true;  // stray quote inside an unquoted field
      } else if (after_closing_quote) {
        row.malformed = true;  // text after a closing quote
      }
      field.push_back(static_cast<char>(c));
      any_content = true;
    }
    row.fields.push_back(std::move(field));

    if (!any_content && row.fields.size() == 1 && row.fields[0].empty()) {
      continue;  // blank line
    }
    return row;
  }
}

}  // namespace topicsum
