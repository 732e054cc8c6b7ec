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
#include <charconv>
#include <cstdio>

#include "topicsum/cleaning.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"

namespace topicsum {

PhraseModel::PhraseModel(std::uint64_t min_count, double threshold)
    : min_count_(min_count), threshold_(threshold) {
  if (min_count_ < 1) throw ConfigError("phrase min_count must be >= 1");
  if (!(threshold_ > 0.0)) throw ConfigError("phrase threshold must be > 0");
}

std::string PhraseModel::key(std::string_view a, std::string_view b) {
  std::string k;
  k.reserve(a.size() + b.size() + 1);
  k.append(a);
  k.push_back(' ');
  k.append(b);
  return k;
}

const PhraseStats* PhraseModel::find(std::string_view a, std::string_view b) const {
  const auto it = pairs_.find(key(a, b));
  return it == pairs_.end() ? nullptr : &it->second;
}

void PhraseModel::insert(std::string_view a, std::string_view b, PhraseStats stats) {
  pairs_[key(a, b)] = stats;
}

std::vector<std::pair<std::string, PhraseStats>> PhraseModel::sorted_pairs() const {
  std::vector<std::pair<std::string, PhraseStats>> out(pairs_.begin(), pairs_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

PhraseModel learn_phrases(const std::vector<TokenList>& corpus, std::uint64_t min_count,
                          double threshold) {
  PhraseModel model(min_count, threshold);
  if (corpus.empty()) throw ConfigError("cannot learn phrases from an empty corpus");

  StringMap<std::uint64_t> unigrams;
  StringMap<std::uint64_t> bigrams;
  for (const auto& doc : corpus) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      ++unigrams[doc[i]];
      if (i + 1 < doc.size()) ++bigrams[doc[i] + ' ' + doc[i + 1]];
    }
  }
  const double vocab_size = static_cast<double>(unigrams.size());

  for (const auto& [pair, count] : bigrams) {
    if (count < min_count) continue;
    const auto space = pair.find(' ');
    const std::string_view a(pair.data(), space);
    const std::string_view b(pair.data() + space + 1, pair.size() - space - 1);
    const double ca = static_cast<double>(unigrams.find(a)->second);
    const double cb = static_cast<double>(unigrams.find(b)->second);
    const double score =
        (static_cast<double>(count) - static_cast<double>(min_count)) * vocab_size / (ca * cb);
    if (score >= threshold) model.insert(a, b, {count, score});
  }
  return model;
}

TokenList apply_phrases(const TokenList& tokens, const PhraseModel& model) {
  if (model.size() == 0) return tokens;
  TokenList out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (i + 1 < tokens.size() && model.find(tokens[i], tokens[i + 1])) {
      out.push_back(tokens[i] + '_' + tokens[i + 1]);
      i += 2;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  return out;
}

TokenList PhraseCascade::apply(const TokenList& tokens) const {
  TokenList out = tokens;
  for (const auto& stage : stages) out = apply_phrases(out, stage);
  return out;
}

std::string PhraseCascade::serialize() const {
  std::string out;
  char buf[64];
  for (const auto& stage : stages) {
    std::snprintf(buf, sizeof buf, "%.17g", stage.threshold());
    out += "#stage\t" + std::to_string(stage.min_count()) + "\t" + buf + "\n";
    for (const auto& [pair, stats] : stage.sorted_pairs()) {
      std::snprintf(buf, sizeof buf, "%.17g", stats.score);
      out += pair + "\t" + std::to_string(stats.count) + "\t" + buf + "\n";
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto tab = line.find('\t', pos);
    parts.push_back(line.substr(pos, tab == std::string_view::npos ? line.npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return parts;
}

double parse_double(std::string_view s) {
  // strtod: std::from_chars for double is fine on GCC 11 but not everywhere.
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end == tmp.c_str() || *end != '\0') throw DataError("bad number '" + tmp + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("bad count '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

PhraseCascade PhraseCascade::parse(std::string_view text) {
  PhraseCascade cascade;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const auto parts = split_tabs(line);
    if (parts.size() != 3) throw DataError("bad phrase line: " + std::string(line));
    if (parts[0] == "#stage") {
      cascade.stages.emplace_back(parse_u64(parts[1]), parse_double(parts[2]));
      continue;
    }
    if (cascade.stages.empty()) throw DataError("phrase entry before any #stage header");
    const auto space = parts[0].find(' ');
    if (space == std::string_view::npos) throw DataError("bad phrase pair: " + std::string(line));
    cascade.stages.back().insert(parts[0].substr(0, space), parts[0].substr(space + 1),
                                 {parse_u64(parts[1]), parse_double(parts[2])});
  }
  return cascade;
}

PhraseCascade learn_phrase_cascade(const std::vector<TokenList>& corpus, std::uint64_t min_count,
                                   double threshold, std::size_t stages) {
  PhraseCascade cascade;
  std::vector<TokenList> current = corpus;
  for (std::size_t s = 0; s < stages; ++s) {
    cascade.stages.push_back(learn_phrases(current, min_count, threshold));
    if (s + 1 < stages) {
      for (auto& doc : current) doc = apply_phrases(doc, cascade.stages.back());
    }
  }
  return cascade;
}

}  // namespace topicsum
