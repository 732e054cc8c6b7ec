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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topicsum/sentences.hpp"

namespace topicsum {

using TokenList = std::vector<std::string>;

const WordSet& default_stopwords();

// Lowercases, folds Latin accents to ASCII, splits on anything that is not
// [a-z0-9], drops tokens shorter than two characters and stopwords.
TokenList strip_and_tokenize(std::string_view text, const WordSet& stopwords);

// ASCII folding of one code point ("é" -> "e", "ß" -> "ss"); empty when the
// code point has no ASCII rendering. Exposed for tests.
std::string_view fold_to_ascii(char32_t cp);

// ---------------------------------------------------------------------------
// Phrase detection. A pair (a, b) of adjacent tokens is scored
//   (count(a,b) - min_count) * vocab_size / (count(a) * count(b))
// and kept when count(a,b) >= min_count and score >= threshold.

struct PhraseStats {
  std::uint64_t count = 0;
  double score = 0.0;

  friend bool operator==(const PhraseStats&, const PhraseStats&) = default;
};

class PhraseModel {
 public:
  PhraseModel() = default;
  PhraseModel(std::uint64_t min_count, double threshold);

  std::uint64_t min_count() const { return min_count_; }
  double threshold() const { return threshold_; }
  std::size_t size() const { return pairs_.size(); }

  const PhraseStats* find(std::string_view a, std::string_view b) const;
  void insert(std::string_view a, std::string_view b, PhraseStats stats);

  // Pairs in lexicographic order, for stable serialization.
  std::vector<std::pair<std::string, PhraseStats>> sorted_pairs() const;

  friend bool operator==(const PhraseModel&, const PhraseModel&) = default;

 private:
  static std::string key(std::string_view a, std::string_view b);

  std::uint64_t min_count_ = 5;
  double threshold_ = 10.0;
  StringMap<PhraseStats> pairs_;  // key "a b"
};

// Throws ConfigError for min_count < 1, threshold <= 0 or an empty corpus.
PhraseModel learn_phrases(const std::vector<TokenList>& corpus, std::uint64_t min_count,
                          double threshold);

// Greedy left-to-right, non-overlapping joining of retained pairs as "a_b".
TokenList apply_phrases(const TokenList& tokens, const PhraseModel& model);

// Bigram stage followed by a stage learned on bigram output (trigrams).
struct PhraseCascade {
  std::vector<PhraseModel> stages;

  TokenList apply(const TokenList& tokens) const;

  // Header "#stage<TAB>min_count<TAB>threshold" then "a b<TAB>count<TAB>score".
  std::string serialize() const;
  static PhraseCascade parse(std::string_view text);

  friend bool operator==(const PhraseCascade&, const PhraseCascade&) = default;
};

PhraseCascade learn_phrase_cascade(const std::vector<TokenList>& corpus, std::uint64_t min_count,
                                   double threshold, std::size_t stages = 2);

// ---------------------------------------------------------------------------
// Lemmatization and part-of-speech filtering.

enum class CoarsePos { kNoun, kVerb, kAdj, kAdv, kPron, kDet, kAdp, kConj, kNum, kPart, kIntj };

class Lemmatizer {
 public:
  Lemmatizer();  // bundled lexicons
  Lemmatizer(StringMap<std::string> exceptions, StringMap<CoarsePos> pos);

  // Root form; repeated application is a no-op. Joined phrase tokens and
  // tokens containing digits pass through unchanged.
  std::string lemma(std::string_view token) const;

  // Lexicon tag of the token or of its lemma; digit-only tokens are numerals
  // and unknown words default to nouns.
  CoarsePos pos(std::string_view token) const;

  static bool is_content(CoarsePos pos);

 private:
  std::string strip_once(const std::string& word) const;

  StringMap<std::string> exceptions_;
  StringMap<CoarsePos> pos_;
};

const Lemmatizer& default_lemmatizer();

// Maps tokens to lemmas and keeps nouns, verbs, adjectives and adverbs.
TokenList lemmatize_filter(const TokenList& tokens, const Lemmatizer& lemmatizer);
TokenList lemmatize_filter(const TokenList& tokens);

// ---------------------------------------------------------------------------

struct CleanedDoc {
  std::string doc_id;
  TokenList tokens;

  friend bool operator==(const CleanedDoc&, const CleanedDoc&) = default;
};

// The modeling-side cleaning context: stopwords, learned phrases and the
// lemmatizer, shared by training and sentence-level inference.
class Cleaner {
 public:
  Cleaner();
  Cleaner(WordSet stopwords, PhraseCascade phrases);

  // strip_and_tokenize -> phrases -> lemmatize_filter, then drops lemmas
  // that are themselves stopwords.
  TokenList clean(std::string_view text) const;
  CleanedDoc clean_document(std::string doc_id, std::string_view article) const;

  TokenList tokenize(std::string_view text) const;

  const WordSet& stopwords() const { return stopwords_; }
  const PhraseCascade& phrases() const { return phrases_; }
  void set_phrases(PhraseCascade phrases) { phrases_ = std::move(phrases); }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  WordSet stopwords_;
  PhraseCascade phrases_;
  Lemmatizer lemmatizer_;
};

CleanedDoc clean_document(std::string_view article, const WordSet& stopwords,
                          const PhraseCascade& phrases, std::string doc_id = {});

}  // namespace topicsum
