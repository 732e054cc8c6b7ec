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

#include <algorithm>

#include "topicsum/cleaning.hpp"
#include "topicsum/resources.hpp"

namespace topicsum {

namespace {

constexpr int kMaxRounds = 4;

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c) && c != 'y'; }

bool has_vowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return is_vowel(c) || c == 'y'; });
}

int vowel_groups(std::string_view s) {
  int groups = 0;
  bool in_group = false;
  for (char c : s) {
    const bool v = is_vowel(c) || c == 'y';
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Undoes spelling changes made when -ing/-ed was attached to `stem`.
std::string restore_stem(std::string stem) {
  const std::size_t n = stem.size();
  const char last = stem[n - 1];
  const char prev = stem[n - 2];

  // runn -> run, knott -> knot; "add", "fill", "press" keep their doubles.
  if (last == prev && is_consonant(last) && last != 'l' && last != 's' && last != 'z' &&
      n >= 4 && is_vowel(stem[n - 3]) && is_consonant(stem[n - 4])) {
    stem.pop_back();
    return stem;
  }
  // tangl -> tangle, handl -> handle
  if (last == 'l' && std::string_view("bcdfgkptz").find(prev) != std::string_view::npos) {
    return stem + 'e';
  }
  // organiz -> organize, mov -> move, produc -> produce, continu -> continue
  if (last == 'z' || last == 'v' || last == 'c' || last == 'u') return stem + 'e';
  // judg -> judge, charg -> charge
  if (last == 'g' && (prev == 'd' || prev == 'r')) return stem + 'e';
  // caus -> cause, clos -> close
  if (last == 's' && is_vowel(prev) && n <= 4) return stem + 'e';
  // mak -> make, wip -> wipe: short stems ending consonant-vowel-consonant
  if (n <= 4 && vowel_groups(stem) == 1 && is_consonant(last) && last != 'w' && last != 'x' &&
      (is_vowel(prev) || prev == 'y') && n >= 3 && is_consonant(stem[n - 3])) {
    return stem + 'e';
  }
  return stem;
}

CoarsePos parse_pos(std::string_view tag) {
  if (tag == "VERB") return CoarsePos::kVerb;
  if (tag == "ADJ") return CoarsePos::kAdj;
  if (tag == "ADV") return CoarsePos::kAdv;
  if (tag == "PRON") return CoarsePos::kPron;
  if (tag == "DET") return CoarsePos::kDet;
  if (tag == "ADP") return CoarsePos::kAdp;
  if (tag == "CONJ") return CoarsePos::kConj;
  if (tag == "NUM") return CoarsePos::kNum;
  if (tag == "PART") return CoarsePos::kPart;
  if (tag == "INTJ") return CoarsePos::kIntj;
  return CoarsePos::kNoun;
}

StringMap<CoarsePos> parse_pos_lexicon(std::string_view text) {
  StringMap<CoarsePos> out;
  for (auto& [word, tag] : parse_tsv_map(text)) out.emplace(word, parse_pos(tag));
  return out;
}

}  // namespace

Lemmatizer::Lemmatizer()
    : Lemmatizer(parse_tsv_map(resources::lemma_exceptions()),
                 parse_pos_lexicon(resources::pos_lexicon())) {}

Lemmatizer::Lemmatizer(StringMap<std::string> exceptions, StringMap<CoarsePos> pos)
    : exceptions_(std::move(exceptions)), pos_(std::move(pos)) {}

std::string Lemmatizer::strip_once(const std::string& w) const {
  const std::size_t n = w.size();
  if (n <= 3) return w;
  const auto ends = [&](std::string_view suffix) { return w.ends_with(suffix); };

  if (ends("ies") && n > 4) return w.substr(0, n - 3) + 'y';
  if (ends("ied") && n > 4) return w.substr(0, n - 3) + 'y';
  if (ends("sses") || ends("ches") || ends("shes") || ends("xes") || ends("zzes")) {
    return w.substr(0, n - 2);
  }
  if (ends("oes") && n > 5) return w.substr(0, n - 2);
  if (ends("ss") || ends("us") || ends("is") || ends("ous")) return w;
  if (ends("s")) return w.substr(0, n - 1);
  if (ends("ing")) {
    const std::string stem = w.substr(0, n - 3);
    if (stem.size() >= 3 && has_vowel(stem)) return restore_stem(stem);
    return w;
  }
  if (ends("ed") && !ends("eed")) {
    const std::string stem = w.substr(0, n - 2);
    if (stem.size() >= 3 && has_vowel(stem)) return restore_stem(stem);
    return w;
  }
  return w;
}

std::string Lemmatizer::lemma(std::string_view token) const {
  std::string word(token);
  if (word.find('_') != std::string::npos) return word;
  if (std::any_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return word;
  }
  for (int round = 0; round < kMaxRounds; ++round) {
    if (const auto it = exceptions_.find(word); it != exceptions_.end()) return it->second;
    std::string next = strip_once(word);
    if (next == word) return word;
    word = std::move(next);
  }
  return word;
}

CoarsePos Lemmatizer::pos(std::string_view token) const {
  if (!token.empty() &&
      std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return CoarsePos::kNum;
  }
  if (const auto it = pos_.find(token); it != pos_.end()) return it->second;
  if (const auto it = pos_.find(lemma(token)); it != pos_.end()) return it->second;
  return CoarsePos::kNoun;
}

bool Lemmatizer::is_content(CoarsePos pos) {
  return pos == CoarsePos::kNoun || pos == CoarsePos::kVerb || pos == CoarsePos::kAdj ||
         pos == CoarsePos::kAdv;
}

const Lemmatizer& default_lemmatizer() {
  static const Lemmatizer lemmatizer;
  return lemmatizer;
}

TokenList lemmatize_filter(const TokenList& tokens, const Lemmatizer& lemmatizer) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!Lemmatizer::is_content(lemmatizer.pos(token))) continue;
    out.push_back(lemmatizer.lemma(token));
  }
  return out;
}

TokenList lemmatize_filter(const TokenList& tokens) {
  return lemmatize_filter(tokens, default_lemmatizer());
}

}  // namespace topicsum
