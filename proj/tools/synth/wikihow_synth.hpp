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
#include <string>

namespace topicsum::synth {

// Deterministic how-to corpus in the WikiHow CSV layout (headline, title,
// text). Every article is a few steps; each step is a heading sentence plus
// detail sentences that reuse the heading's key words, drawn from one of
// `themes` disjoint vocabularies, with generic filler sentences mixed in.
// The headline column is the list of step headings.
struct WikiHowOptions {
  std::size_t articles = 500;
  std::size_t themes = 16;
  std::size_t words_per_theme = 30;
  std::uint64_t seed = 7;
  bool include_sample_article = true;  // the long-hair combing article as row 0
};

std::string wikihow_csv(const WikiHowOptions& options);
void write_wikihow_csv(const std::filesystem::path& path, const WikiHowOptions& options);

// The long-hair combing article and its reference summary.
std::string sample_article();
std::string sample_summary();

}  // namespace topicsum::synth
