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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topicsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool degenerate = false;  // undefined on this input, reported as 0

  friend bool operator==(const RougeScore&, const RougeScore&) = default;
};

// Balanced F1 from precision and recall.
RougeScore make_score(double precision, double recall);

struct EvalTokenization {
  bool lowercase = true;
  bool stem = false;  // map tokens through the lemmatizer
};

// Alphanumeric runs; bytes >= 0x80 count as word characters.
std::vector<std::string> eval_tokens(std::string_view text, const EvalTokenization& tok = {});

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n,
                   const EvalTokenization& tok = {});
// Summary-level union LCS over sentences, with clipped hit counts.
RougeScore rouge_l(std::string_view candidate, std::string_view reference,
                   const EvalTokenization& tok = {});
// Weighted LCS with f(k) = k^weight_exponent over the full token sequences.
RougeScore rouge_w(std::string_view candidate, std::string_view reference,
                   double weight_exponent = 1.2, const EvalTokenization& tok = {});
// Skip-bigrams with at most max_skip tokens between the pair; unlimited
// when absent.
RougeScore rouge_s(std::string_view candidate, std::string_view reference,
                   std::optional<std::size_t> max_skip = std::nullopt,
                   const EvalTokenization& tok = {});
// Skip-bigrams plus unigrams.
RougeScore rouge_su(std::string_view candidate, std::string_view reference,
                    std::optional<std::size_t> max_skip = std::nullopt,
                    const EvalTokenization& tok = {});

// Mean of P, R and F1 independently. Throws DataError when empty.
RougeScore aggregate(std::span<const RougeScore> scores);

enum class RougeMetric { kR1, kR2, kR3, kR4, kRL, kRW, kRS, kRSU };

std::string_view metric_name(RougeMetric m);  // "r1", "rl", ...
// Comma-separated list; throws ConfigError on unknown or repeated names.
std::vector<RougeMetric> parse_metrics(std::string_view list);
std::string format_metrics(std::span<const RougeMetric> metrics);

struct RougeOptions {
  EvalTokenization tokenization;
  double weight_exponent = 1.2;
  std::optional<std::size_t> max_skip;

  // "lowercase=1 stem=0 w=1.2 max_skip=none", recorded beside reported rows.
  std::string describe() const;
};

// Scores for each metric in order; tokenizes each side once.
std::vector<RougeScore> score_metrics(std::string_view candidate, std::string_view reference,
                                      std::span<const RougeMetric> metrics,
                                      const RougeOptions& options = {});

struct DocumentScores {
  std::string doc_id;
  std::vector<RougeScore> scores;  // parallel to the metric list
};

// "doc_id,metric,precision,recall,f1" with a header row.
std::string per_document_csv(std::span<const DocumentScores> docs,
                             std::span<const RougeMetric> metrics);
// {"r1": {"precision":..., "recall":..., "f1":..., "documents": n}, ...}
std::string corpus_json(std::span<const DocumentScores> docs, std::span<const RougeMetric> metrics,
                        const RougeOptions& options);

}  // namespace topicsum
