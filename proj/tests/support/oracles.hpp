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

// Independent reference computations used as test oracles. None of these
// share code with the library implementations they check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topicsum/lda.hpp"
#include "topicsum/textrank.hpp"

namespace oracle {

// Stationary PageRank vector from a direct solve of
//   (I - d W^T) r = (1 - d)/n
// by Gaussian elimination with partial pivoting; W is the row-normalized
// similarity matrix with zero rows replaced by uniform rows.
std::vector<double> pagerank_direct(const topicsum::SimilarityMatrix& sim, double damping);

// Tables rebuilt token by token from the sampler's assignments.
struct CountTables {
  std::vector<std::vector<std::int64_t>> doc_topic;   // D x K
  std::vector<std::vector<std::int64_t>> topic_word;  // K x V
  std::vector<std::int64_t> topic_total;
  std::vector<std::int64_t> doc_total;
};
CountTables recount(const topicsum::LdaModel& model);
bool tables_match(const CountTables& t, const topicsum::LdaModel& model);

// Sum over the multiset union: sum(min) / sum(max).
double multiset_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

// LCS length by the textbook recursion with memoization.
std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Clipped n-gram overlap count.
std::size_t clipped_ngram_matches(const std::vector<std::string>& cand,
                                  const std::vector<std::string>& ref, std::size_t n);

// Whitespace split, lowercase, punctuation dropped: matches the evaluation
// tokenizer on plain ASCII inputs.
std::vector<std::string> words(const std::string& text);

// Greedy matching of estimated topics to true topics by smallest L1
// distance; returns the mean matched L1.
double greedy_matched_l1(const std::vector<std::vector<double>>& estimated,
                         const std::vector<std::vector<double>>& truth);

}  // namespace oracle
