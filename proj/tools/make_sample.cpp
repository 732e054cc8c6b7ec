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

#include <CLI11.hpp>
#include <cstdio>

#include "synth/wikihow_synth.hpp"
#include "topicsum/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write a deterministic WikiHow-format sample corpus"};
  topicsum::synth::WikiHowOptions o;
  std::string out;
  bool no_sample = false;
  app.add_option("output", out, "CSV path")->required();
  app.add_option("-n,--articles", o.articles, "Generated articles")->capture_default_str();
  app.add_option("--themes", o.themes, "Disjoint step vocabularies")->capture_default_str();
  app.add_option("--words", o.words_per_theme, "Words per vocabulary")->capture_default_str();
  app.add_option("--seed", o.seed)->capture_default_str();
  app.add_flag("--no-sample-article", no_sample, "Leave out the long-hair combing article");
  CLI11_PARSE(app, argc, argv);
  o.include_sample_article = !no_sample;
  try {
    topicsum::synth::write_wikihow_csv(out, o);
  } catch (const topicsum::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
