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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topicsum/cleaning.hpp"

namespace topicsum {

using TokenId = std::int32_t;

// Dense token <-> id bijection with per-id document frequencies.
class TokenDictionary {
 public:
  TokenDictionary() = default;

  std::size_t size() const { return id_to_token_.size(); }
  std::size_t num_docs() const { return num_docs_; }

  std::optional<TokenId> id(std::string_view token) const;
  const std::string& token(TokenId id) const { return id_to_token_.at(static_cast<std::size_t>(id)); }
  std::uint32_t doc_freq(TokenId id) const { return doc_freq_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& tokens() const { return id_to_token_; }

  // FNV-1a over tokens in id order; stored with trained models.
  std::uint64_t fingerprint() const;

  // "id<TAB>token<TAB>doc_freq" lines after a "#docs<TAB>D" header.
  std::string serialize() const;
  static TokenDictionary parse(std::string_view text);

  // Appends a token; used by build_dictionary and parse.
  TokenId add(std::string token, std::uint32_t doc_freq);
  void set_num_docs(std::size_t d) { num_docs_ = d; }

  friend bool operator==(const TokenDictionary& a, const TokenDictionary& b) {
    return a.id_to_token_ == b.id_to_token_ && a.doc_freq_ == b.doc_freq_ &&
           a.num_docs_ == b.num_docs_;
  }

 private:
  std::vector<std::string> id_to_token_;
  std::vector<std::uint32_t> doc_freq_;
  StringMap<TokenId> token_to_id_;
  std::size_t num_docs_ = 0;
};

struct DictionaryFilter {
  std::uint32_t no_below = 5;  // drop tokens in fewer documents
  double no_above = 0.5;       // drop tokens in more than this fraction of documents
};

// Ids in first-occurrence order, re-densified after filtering.
// Throws DataError for an empty input and when every token is filtered.
TokenDictionary build_dictionary(const std::vector<CleanedDoc>& cleaned, DictionaryFilter filter);

// (token_id, count) sorted by id; counts positive.
using Bag = std::vector<std::pair<TokenId, std::uint32_t>>;

struct BowCorpus {
  std::vector<Bag> docs;

  std::size_t size() const { return docs.size(); }
  std::uint64_t total_tokens() const;

  // "doc_index: id:count id:count ..." per line.
  std::string serialize() const;
  static BowCorpus parse(std::string_view text);

  friend bool operator==(const BowCorpus&, const BowCorpus&) = default;
};

// Out-of-vocabulary tokens are dropped.
Bag to_bow(const TokenList& tokens, const TokenDictionary& dict);
inline Bag to_bow(const CleanedDoc& doc, const TokenDictionary& dict) {
  return to_bow(doc.tokens, dict);
}

BowCorpus to_corpus(const std::vector<CleanedDoc>& docs, const TokenDictionary& dict);

// Ids of in-vocabulary tokens, in order.
std::vector<TokenId> to_ids(const TokenList& tokens, const TokenDictionary& dict);

// Bag expanded to ids in bag order, each repeated by its count.
std::vector<TokenId> expand(const Bag& bag);

}  // namespace topicsum
