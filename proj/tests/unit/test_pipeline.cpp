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

#include <doctest.h>

#include <json.hpp>

#include "synth/wikihow_synth.hpp"
#include "temp_dir.hpp"
#include "topicsum/config.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/pipeline.hpp"

using namespace topicsum;
namespace fs = std::filesystem;

namespace {

SentenceGroup group_of(std::size_t n) {
  SentenceGroup g;
  g.doc_id = "g";
  for (std::size_t i = 0; i < n; ++i) g.sentences.push_back({i, "S" + std::to_string(i) + "."});
  return g;
}

PipelineConfig small_config(const TempDir& dir, const std::string& run) {
  PipelineConfig c;
  c.corpus = dir / "corpus.csv";
  c.output = dir / run;
  c.set("lda.topics", "6");
  c.set("lda.sweeps", "60");
  c.set("lda.burn_in", "0");
  c.set("lda.fold_sweeps", "10");
  c.set("cleaning.no_below", "2");
  c.set("rouge.metrics", "r1,r2,rl");
  return c;
}

void write_corpus(const TempDir& dir, std::size_t articles) {
  synth::WikiHowOptions o;
  o.articles = articles;
  o.themes = 6;
  synth::write_wikihow_csv(dir / "corpus.csv", o);
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), root).string();
    if (rel == "timings.json" || rel == "config.ini") continue;
    files[rel] = read_file(e.path());
  }
  return files;
}

}  // namespace

TEST_CASE("ini parsing and overrides") {
  const auto kv = parse_ini("# comment\n[lda]\ntopics = 8\n; other\n[run]\nseed=5\n");
  REQUIRE(kv.size() == 2);
  CHECK(kv[0] == std::pair<std::string, std::string>{"lda.topics", "8"});
  CHECK_THROWS_AS(parse_ini("topics = 8\n"), ConfigError);
  CHECK_THROWS_AS(parse_ini("[lda\n"), ConfigError);
  CHECK_THROWS_AS(parse_ini("[lda]\njunk\n"), ConfigError);

  PipelineConfig c;
  c.set("lda.topics", "10");
  CHECK(c.lda.alpha == doctest::Approx(5.0));
  c.set("lda.alpha", "0.1");
  c.set("lda.topics", "4");
  CHECK(c.lda.alpha == doctest::Approx(0.1));
  CHECK_THROWS_AS(c.set("lda.nope", "1"), ConfigError);
  CHECK_THROWS_AS(c.set("lda.sweeps", "many"), ConfigError);
  CHECK_THROWS_AS(c.set("rouge.stem", "maybe"), ConfigError);
  c.set("rouge.max_skip", "4");
  CHECK(c.rouge.max_skip == std::size_t{4});

  TempDir dir;
  write_file(dir / "c.ini", c.to_ini());
  const PipelineConfig back = load_config(dir / "c.ini");
  CHECK(back.to_ini() == c.to_ini());
  CHECK_THROWS_AS(load_config(dir / "missing.ini"), ConfigError);

  PipelineConfig bad;
  bad.set("textrank.damping", "1.5");
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  PipelineConfig emb;
  emb.set("textrank.similarity", "embedding");
  CHECK_THROWS_AS(emb.validate(), ConfigError);
}

TEST_CASE("lead-3 and random baselines") {
  const auto five = lead3_baseline(group_of(5));
  REQUIRE(five.sentences.size() == 3);
  CHECK(five.sentences[2].sentence_index == 2);
  CHECK(lead3_baseline(group_of(2)).sentences.size() == 2);

  const auto all = random_baseline(group_of(3), 5, 1);
  CHECK(all.sentences.size() == 3);
  const auto r1 = random_baseline(group_of(20), 3, 9);
  const auto r2 = random_baseline(group_of(20), 3, 9);
  REQUIRE(r1.sentences.size() == 3);
  CHECK(r1.sentences == r2.sentences);
  CHECK(r1.sentences[0].sentence_index < r1.sentences[1].sentence_index);
  CHECK(r1.sentences[1].sentence_index < r1.sentences[2].sentence_index);
  bool any_differs = false;
  for (std::uint64_t seed = 0; seed < 10 && !any_differs; ++seed) {
    any_differs = random_baseline(group_of(20), 3, seed).sentences != r1.sentences;
  }
  CHECK(any_differs);
}

TEST_CASE("report table") {
  const auto rows = published_rows();
  CHECK(rows[0].values.at("r1") == 27.08);
  CHECK(rows[0].values.at("r2") == 6.89);
  CHECK(rows[0].values.at("rl") == 25.43);
  CHECK(rows[1].values.at("r1") == 27.53);
  CHECK(rows[1].values.at("rl") == 20.00);

  RunReport r;
  r.scorer = "lowercase=1";
  r.systems.push_back({"Mine", {{"r1", make_score(0.3, 0.3)}}, 4});
  const ReportTable t = report_table(r);
  CHECK(t.text.find("Mine") != std::string::npos);
  CHECK(t.text.find("(published, not reproduced)") != std::string::npos);
  // Ascending R-1: 22.04 comes first, Mine (30.00) last.
  const auto first = t.text.find("Seq-to-seq");
  CHECK(first < t.text.find("Lead-3"));
  CHECK(t.text.find("Mine") > t.text.find("Topic Augmented Generator + Coverage"));
  CHECK(t.csv.find("\"Mine\",0,30.00,-,-") != std::string::npos);
}

TEST_CASE("one-document corpus summarizes to itself") {
  TempDir dir;
  write_file(dir / "corpus.csv",
             "headline,title,text\n\"Untie every knot gently.\",How to Untie,\"Untie every knot gently.\"\n");
  PipelineConfig c;
  c.corpus = dir / "corpus.csv";
  c.output = dir / "run";
  c.set("lda.topics", "1");
  c.set("lda.sweeps", "5");
  c.set("lda.burn_in", "0");
  c.set("cleaning.no_below", "1");
  c.set("cleaning.no_above", "1");
  Pipeline p(c);
  const RunReport r = p.run_all();
  CHECK(read_file(dir / "run/summaries/untie.txt") == "Untie every knot gently.\n");
  REQUIRE(r.systems.size() == 3);
  for (const auto& [name, score] : r.systems[0].metrics) {
    CAPTURE(name);
    if (name == "r2" || name == "r3") CHECK(score.f1 == 1.0);
    if (name == "r1" || name == "rl" || name == "rsu") CHECK(score.f1 == 1.0);
  }
}

TEST_CASE("stage errors carry the stage name") {
  TempDir dir;
  PipelineConfig c;
  c.corpus = dir / "absent.csv";
  c.output = dir / "run";
  Pipeline p(c);
  try {
    p.run_stage(Stage::kIngest);
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage() == Stage::kIngest);
    CHECK(std::string(e.what()).starts_with("ingest: "));
  }
  CHECK_THROWS_AS(p.run_stage(Stage::kTrain), StageError);
}

TEST_CASE("pipeline is worker-count independent and resumes after deleted artifacts") {
  TempDir dir;
  write_corpus(dir, 60);
  PipelineConfig one = small_config(dir, "one");
  PipelineConfig four = small_config(dir, "four");
  four.workers = 4;
  Pipeline(one).run_all();
  Pipeline(four).run_all();
  const auto a = snapshot(dir / "one");
  const auto b = snapshot(dir / "four");
  CHECK(a.size() == b.size());
  for (const auto& [file, content] : a) {
    CAPTURE(file);
    REQUIRE(b.contains(file));
    CHECK(b.at(file) == content);
  }

  Pipeline resumed(one);
  CHECK(resumed.stage_complete(Stage::kSummarize));
  fs::remove(dir / "one/model/model.lda");
  fs::remove(dir / "one/summaries/comb_long_hair.txt");
  CHECK_FALSE(resumed.stage_complete(Stage::kTrain));
  CHECK_FALSE(resumed.stage_complete(Stage::kSummarize));
  resumed.run_all();
  CHECK(snapshot(dir / "one") == a);

  fs::remove_all(dir / "one/eval");
  Pipeline(one).run_all();
  CHECK(snapshot(dir / "one") == a);
}

TEST_CASE("emitted summaries are extractive and ordered") {
  TempDir dir;
  write_corpus(dir, 40);
  const PipelineConfig c = small_config(dir, "run");
  Pipeline(c).run_all();
  for (const auto& e : fs::directory_iterator(dir / "run/provenance")) {
    const auto id = e.path().stem().string();
    const auto prov = nlohmann::json::parse(read_file(e.path()));
    const std::string article = read_file(dir / "run/split/articles" / (id + ".txt"));
    const std::string summary = read_file(dir / "run/summaries" / (id + ".txt"));
    const auto group = segment_sentences(article, id);
    long last = -1;
    std::string rebuilt;
    for (const auto& s : prov["sentences"]) {
      const long idx = s["sentence_index"];
      CHECK(idx > last);
      last = idx;
      rebuilt += group.sentences.at(static_cast<std::size_t>(idx)).text + "\n";
    }
    CHECK(rebuilt == summary);
  }
}
