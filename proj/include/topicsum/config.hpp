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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topicsum/lda.hpp"
#include "topicsum/rouge.hpp"
#include "topicsum/textrank.hpp"

namespace topicsum {

struct CleaningConfig {
  std::uint64_t phrase_min_count = 5;
  double phrase_threshold = 10.0;
  std::size_t phrase_stages = 2;
  DictionaryFilter filter;
};

struct PipelineConfig {
  std::filesystem::path corpus;  // WikiHow-style CSV
  std::filesystem::path output = "run";
  std::filesystem::path embeddings;  // optional
  std::size_t limit = 0;             // 0: every row

  CleaningConfig cleaning;
  LdaConfig lda = LdaConfig::with_topics(20);
  int fold_sweeps = 50;
  std::size_t top_words = 10;
  TextRankConfig textrank;
  std::vector<RougeMetric> metrics = parse_metrics("r1,r2,r3,r4,rl,rw,rs,rsu");
  RougeOptions rouge;
  std::size_t random_k = 3;

  std::uint64_t seed = 1;
  std::size_t workers = 1;

  void validate() const;  // ConfigError

  // Sets one "section.key" value; throws ConfigError on an unknown key or a
  // malformed value. Setting lda.topics also resets alpha to 50 / K unless
  // lda.alpha was given explicitly.
  void set(std::string_view key, std::string_view value);

  // Every key in canonical order, as an INI document that load_config reads
  // back to an equal config.
  std::string to_ini() const;

 private:
  bool alpha_explicit_ = false;
};

// "[section]" headers, "key = value" lines, '#' or ';' comments.
// Returns "section.key" -> value in file order; ConfigError on syntax errors.
std::vector<std::pair<std::string, std::string>> parse_ini(std::string_view text);

PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace topicsum
