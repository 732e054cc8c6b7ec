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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topicsum/cleaning.hpp"
#include "topicsum/clustering.hpp"
#include "topicsum/vocabulary.hpp"

namespace topicsum {

enum class SimilarityMode { kTfidf, kEmbedding };

SimilarityMode parse_similarity_mode(std::string_view s);  // ConfigError on junk
std::string_view similarity_mode_name(SimilarityMode mode);

struct TextRankConfig {
  double damping = 0.85;
  double tol = 1e-6;
  int max_iter = 100;
  std::size_t top_n = 1;
  std::size_t min_cluster_sentences = 3;
  SimilarityMode similarity_mode = SimilarityMode::kTfidf;

  void validate() const;  // ConfigError

  friend bool operator==(const TextRankConfig&, const TextRankConfig&) = default;
};

// Whitespace-separated "token v1 ... vd" lines; d is fixed by the first line.
class EmbeddingTable {
 public:
  static EmbeddingTable parse(std::string_view text);
  static EmbeddingTable load(const std::filesystem::path& path);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return index_.size(); }
  // Empty span for unknown tokens.
  std::span<const double> find(std::string_view token) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
  StringMap<std::size_t> index_;
};

struct SummarizerContext {
  const TokenDictionary& dictionary;
  const Cleaner& cleaner;
  const EmbeddingTable* embeddings = nullptr;
};

using Vector = std::vector<double>;

// TF-IDF: raw term counts of cleaned tokens times log((1 + D) / (1 + df)) + 1,
// df from the training dictionary (0 for unseen tokens); dense over the
// batch's own vocabulary. Embedding: mean vector of in-table surface tokens.
// Throws ConfigError in embedding mode without a table.
std::vector<Vector> sentence_vectors(const std::vector<std::string>& sentences, SimilarityMode mode,
                                     const SummarizerContext& ctx);

struct SimilarityMatrix {
  std::size_t n = 0;
  std::vector<double> values;  // row-major n x n

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

// max(0, cosine) off the diagonal, 0 on it and for zero vectors.
SimilarityMatrix similarity_matrix(const std::vector<Vector>& vectors);

struct TextRankResult {
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
};

// Power iteration r <- (1 - d)/n + d W^T r over the row-normalized matrix;
// all-zero rows are treated as uniform.
TextRankResult textrank_scores(const SimilarityMatrix& sim, const TextRankConfig& config);
TextRankResult textrank_scores(const SimilarityMatrix& sim, const TextRankConfig& config,
                               std::span<const double> start);

// Indices of the n highest scores, best first; near-equal scores (within
// 1e-12) resolve toward the lower index.
std::vector<std::size_t> top_indices(std::span<const double> scores, std::size_t n);

struct SelectedSentence {
  std::size_t sentence_index = 0;
  std::string text;
  std::size_t topic_id = 0;
  std::size_t rank = 0;       // position in the cluster's ranking
  bool whole_cluster = false;  // selected by the short-cluster rule

  friend bool operator==(const SelectedSentence&, const SelectedSentence&) = default;
};

// Clusters shorter than min_cluster_sentences come back whole; otherwise
// the top_n by TextRank, in document order.
std::vector<SelectedSentence> summarize_cluster(const std::vector<ClusterEntry>& cluster,
                                                std::size_t topic_id, const TextRankConfig& config,
                                                const SummarizerContext& ctx);

struct ExtractiveSummary {
  std::string doc_id;
  std::vector<SelectedSentence> sentences;  // document order

  // Sentences joined by newlines, trailing newline.
  std::string text() const;
  std::string provenance_json() const;
};

ExtractiveSummary assemble_summary(const TopicClusterSet& clusters, const TextRankConfig& config,
                                   const SummarizerContext& ctx);

}  // namespace topicsum
