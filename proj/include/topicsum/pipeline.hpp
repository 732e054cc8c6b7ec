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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topicsum/config.hpp"
#include "topicsum/error.hpp"
#include "topicsum/rouge.hpp"
#include "topicsum/sentences.hpp"
#include "topicsum/textrank.hpp"

namespace topicsum {

// First min(3, n) sentences.
ExtractiveSummary lead3_baseline(const SentenceGroup& group);

// k distinct sentences drawn uniformly with a seed derived from (seed,
// doc_id), returned in document order; the whole document when k >= n.
ExtractiveSummary random_baseline(const SentenceGroup& group, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct SystemScores {
  std::string label;
  std::map<std::string, RougeScore> metrics;  // keyed by metric name
  std::size_t documents = 0;
};

struct RunReport {
  std::size_t records = 0;          // valid ingested pairs
  std::size_t ingest_skipped = 0;   // malformed or empty CSV rows
  std::size_t train_documents = 0;
  std::size_t heldout_documents = 0;
  std::size_t vocabulary = 0;
  std::size_t summarized = 0;
  std::size_t summarize_skipped = 0;  // per-document failures
  double perplexity = 0.0;
  double mean_coherence = 0.0;
  std::string scorer;
  std::vector<SystemScores> systems;
  std::map<std::string, double> timings_seconds;  // kept out of to_json

  std::string to_json() const;
  static RunReport from_json(std::string_view text);
  std::string timings_json() const;
};

struct TableRow {
  std::string label;
  std::map<std::string, double> values;  // metric name -> F1 x 100
  bool published = false;
};

// Reference rows from the literature, marked as not reproduced here.
std::vector<TableRow> published_rows();

struct ReportTable {
  std::string text;  // aligned columns
  std::string csv;
};

// Rows sorted by R-1 ascending (label breaks ties); columns r1, r2, rl and
// then `extra_metrics`. Missing values render as "-".
ReportTable report_table(std::vector<TableRow> rows,
                         const std::vector<std::string>& extra_metrics = {});

// Measured systems as rows, plus the published reference rows.
ReportTable report_table(const RunReport& report, const std::vector<std::string>& extra_metrics = {});

// ---------------------------------------------------------------------------

enum class Stage { kIngest, kClean, kTrain, kSummarize, kEvaluate, kReport };

std::string_view stage_name(Stage s);

// Raised when a stage fails as a whole; carries the stage name.
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& what);
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

// Every stage reads its inputs from and writes its outputs to the run
// directory, so any stage can be re-run on its own and a full run resumes
// after the last stage whose artifacts are all present.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig& config() const { return config_; }

  void run_stage(Stage stage);
  // Runs every stage whose outputs are missing, and everything after the
  // first such stage. Returns the final report.
  RunReport run_all();

  bool stage_complete(Stage stage) const;

  // Paths inside the run directory.
  std::filesystem::path path(std::string_view relative) const { return config_.output / relative; }

 private:
  void ingest();
  void clean();
  void train();
  void summarize();
  void evaluate();
  RunReport report();

  template <typename F>
  void parallel_for(std::size_t n, F&& body) const;

  PipelineConfig config_;
  std::map<std::string, double> timings_;
};

}  // namespace topicsum
