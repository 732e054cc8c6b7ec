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
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace topicsum {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using WordSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

// Parses a one-entry-per-line list; blank lines and '#' comments ignored,
// entries trimmed and kept as written.
WordSet parse_word_list(std::string_view text);

// Parses "key<TAB>value" lines with the same comment rules.
StringMap<std::string> parse_tsv_map(std::string_view text);

struct Sentence {
  std::size_t index = 0;
  std::string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// A document's sentences in order; indices run 0..n-1.
struct SentenceGroup {
  std::string doc_id;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
};

// Rule-based splitter. A sentence ends at a run of . ! ? (plus closing
// quotes or brackets) followed by whitespace or end of text, unless the
// period closes a known abbreviation or the next word starts lowercase.
// Line breaks also end a sentence. Sentence text is kept verbatim, trimmed.
class SentenceSplitter {
 public:
  SentenceSplitter();  // bundled abbreviation list
  explicit SentenceSplitter(WordSet abbreviations);

  // Throws DataError when the article is blank.
  SentenceGroup split(std::string_view article, std::string doc_id = {}) const;

 private:
  bool is_abbreviation(std::string_view text, std::size_t period) const;

  WordSet abbreviations_;
};

SentenceGroup segment_sentences(std::string_view article, std::string doc_id = {});

}  // namespace topicsum
