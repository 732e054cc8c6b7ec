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

#include "topicsum/vocabulary.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "topicsum/error.hpp"
#include "topicsum/rng.hpp"

namespace topicsum {

std::optional<TokenId> TokenDictionary::id(std::string_view token) const {
  const auto it = token_to_id_.find(token);
  if (it == token_to_id_.end()) return std::nullopt;
  return it->second;
}

TokenId TokenDictionary::add(std::string token, std::uint32_t doc_freq) {
  if (token_to_id_.contains(token)) throw DataError("duplicate dictionary token '" + token + "'");
  const auto id = static_cast<TokenId>(id_to_token_.size());
  token_to_id_.emplace(token, id);
  id_to_token_.push_back(std::move(token));
  doc_freq_.push_back(doc_freq);
  return id;
}

std::uint64_t TokenDictionary::fingerprint() const {
  std::uint64_t h = fnv1a64("topicsum-dictionary");
  for (const auto& t : id_to_token_) {
    h = fnv1a64(t, h);
    h = fnv1a64(std::string_view("\n", 1), h);
  }
  return h;
}

std::string TokenDictionary::serialize() const {
  std::string out = "#docs\t" + std::to_string(num_docs_) + "\n";
  for (std::size_t i = 0; i < id_to_token_.size(); ++i) {
    out += std::to_string(i) + "\t" + id_to_token_[i] + "\t" + std::to_string(doc_freq_[i]) + "\n";
  }
  return out;
}

namespace {

template <typename T>
T parse_int(std::string_view s, std::string_view what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty()) fn(line);
  }
}

}  // namespace

TokenDictionary TokenDictionary::parse(std::string_view text) {
  TokenDictionary dict;
  for_each_line(text, [&](std::string_view line) {
    const auto t1 = line.find('\t');
    if (t1 == std::string_view::npos) throw DataError("bad dictionary line: " + std::string(line));
    if (line.substr(0, t1) == "#docs") {
      dict.num_docs_ = parse_int<std::size_t>(line.substr(t1 + 1), "document count");
      return;
    }
    const auto t2 = line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) throw DataError("bad dictionary line: " + std::string(line));
    const auto id = parse_int<std::size_t>(line.substr(0, t1), "token id");
    if (id != dict.size()) throw DataError("dictionary ids must be dense and ordered");
    dict.add(std::string(line.substr(t1 + 1, t2 - t1 - 1)),
             parse_int<std::uint32_t>(line.substr(t2 + 1), "doc_freq"));
  });
  return dict;
}

TokenDictionary build_dictionary(const std::vector<CleanedDoc>& cleaned, DictionaryFilter filter) {
  if (cleaned.empty()) throw DataError("cannot build a dictionary from zero documents");
  if (filter.no_above < 0.0 || filter.no_above > 1.0) {
    throw ConfigError("no_above must lie in [0, 1]");
  }

  std::vector<std::string> order;
  StringMap<std::uint32_t> df;
  WordSet seen;
  for (const auto& doc : cleaned) {
    seen.clear();
    for (const auto& token : doc.tokens) {
      if (!seen.insert(token).second) continue;
      auto [it, inserted] = df.try_emplace(token, 0);
      if (inserted) order.push_back(token);
      ++it->second;
    }
  }

  const double max_df = filter.no_above * static_cast<double>(cleaned.size());
  TokenDictionary dict;
  dict.set_num_docs(cleaned.size());
  for (auto& token : order) {
    const std::uint32_t f = df.find(token)->second;
    if (f < filter.no_below || static_cast<double>(f) > max_df) continue;
    dict.add(std::move(token), f);
  }
  if (dict.size() == 0) throw DataError("every token was removed by frequency filtering");
  return dict;
}

std::uint64_t BowCorpus::total_tokens() const {
  std::uint64_t n = 0;
  for (const auto& bag : docs) {
    for (const auto& [id, count] : bag) n += count;
  }
  return n;
}

std::string BowCorpus::serialize() const {
  std::string out;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    out += std::to_string(d) + ":";
    for (const auto& [id, count] : docs[d]) {
      out += " " + std::to_string(id) + ":" + std::to_string(count);
    }
    out += "\n";
  }
  return out;
}

BowCorpus BowCorpus::parse(std::string_view text) {
  BowCorpus corpus;
  for_each_line(text, [&](std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw DataError("bad corpus line: " + std::string(line));
    if (parse_int<std::size_t>(line.substr(0, colon), "doc index") != corpus.docs.size()) {
      throw DataError("corpus doc indices must be dense and ordered");
    }
    Bag bag;
    std::size_t pos = colon + 1;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      auto end = line.find(' ', pos);
      if (end == std::string_view::npos) end = line.size();
      const auto entry = line.substr(pos, end - pos);
      const auto c = entry.find(':');
      if (c == std::string_view::npos) throw DataError("bad bag entry: " + std::string(entry));
      const auto id = parse_int<TokenId>(entry.substr(0, c), "token id");
      const auto count = parse_int<std::uint32_t>(entry.substr(c + 1), "count");
      if (count == 0 || id < 0 || (!bag.empty() && id <= bag.back().first)) {
        throw DataError("bag entries must have positive counts and increasing ids");
      }
      bag.emplace_back(id, count);
      pos = end;
    }
    corpus.docs.push_back(std::move(bag));
  });
  return corpus;
}

Bag to_bow(const TokenList& tokens, const TokenDictionary& dict) {
  std::map<TokenId, std::uint32_t> counts;
  for (const auto& t : tokens) {
    if (const auto id = dict.id(t)) ++counts[*id];
  }
  return Bag(counts.begin(), counts.end());
}

BowCorpus to_corpus(const std::vector<CleanedDoc>& docs, const TokenDictionary& dict) {
  BowCorpus corpus;
  corpus.docs.reserve(docs.size());
  for (const auto& d : docs) corpus.docs.push_back(to_bow(d, dict));
  return corpus;
}

std::vector<TokenId> to_ids(const TokenList& tokens, const TokenDictionary& dict) {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (const auto id = dict.id(t)) ids.push_back(*id);
  }
  return ids;
}

std::vector<TokenId> expand(const Bag& bag) {
  std::vector<TokenId> ids;
  for (const auto& [id, count] : bag) ids.insert(ids.end(), count, id);
  return ids;
}

}  // namespace topicsum
