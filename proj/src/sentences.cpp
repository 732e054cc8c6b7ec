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

#include "topicsum/sentences.hpp"

#include <cctype>

#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/resources.hpp"

namespace topicsum {

namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    if (!line.empty() && line.front() != '#') fn(line);
    pos = eol + 1;
  }
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

WordSet parse_word_list(std::string_view text) {
  WordSet out;
  for_each_line(text, [&](std::string_view line) { out.emplace(line); });
  return out;
}

StringMap<std::string> parse_tsv_map(std::string_view text) {
  StringMap<std::string> out;
  for_each_line(text, [&](std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) return;
    out.emplace(std::string(trim(line.substr(0, tab))), std::string(trim(line.substr(tab + 1))));
  });
  return out;
}

SentenceSplitter::SentenceSplitter() : abbreviations_(parse_word_list(resources::abbreviations())) {}

SentenceSplitter::SentenceSplitter(WordSet abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

bool SentenceSplitter::is_abbreviation(std::string_view text, std::size_t period) const {
  std::size_t begin = period;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  while (begin < period && (text[begin] == '(' || text[begin] == '"' || text[begin] == '\'')) {
    ++begin;
  }
  if (begin == period) return false;
  std::string word(text.substr(begin, period - begin));
  for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return abbreviations_.contains(word);
}

SentenceGroup SentenceSplitter::split(std::string_view article, std::string doc_id) const {
  if (trim(article).empty()) throw DataError("cannot segment a blank article");

  SentenceGroup group;
  group.doc_id = std::move(doc_id);
  const auto emit = [&](std::size_t begin, std::size_t end) {
    const auto text = trim(article.substr(begin, end - begin));
    if (!text.empty()) group.sentences.push_back({group.sentences.size(), std::string(text)});
  };

  const std::size_t n = article.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char c = article[i];
    if (c == '\n') {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminator(article[j])) ++j;
    const bool single_period = (j - i == 1 && c == '.');
    while (j < n && is_closer(article[j])) ++j;
    if (j < n && !is_space(article[j])) {
      i = j;  // "3.5", "e.g.x", "?!" inside a token
      continue;
    }
    bool boundary = true;
    if (single_period && is_abbreviation(article, i)) boundary = false;
    if (boundary) {
      std::size_t k = j;
      while (k < n && is_space(article[k]) && article[k] != '\n') ++k;
      if (k < n && std::islower(static_cast<unsigned char>(article[k]))) boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, n);
  return group;
}

SentenceGroup segment_sentences(std::string_view article, std::string doc_id) {
  static const SentenceSplitter splitter;
  return splitter.split(article, std::move(doc_id));
}

}  // namespace topicsum
