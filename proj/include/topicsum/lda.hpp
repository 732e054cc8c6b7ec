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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topicsum/rng.hpp"
#include "topicsum/vocabulary.hpp"

namespace topicsum {

struct LdaConfig {
  int num_topics = 20;
  double alpha = 50.0 / 20;  // symmetric document-topic prior
  double beta = 0.01;        // symmetric topic-word prior
  int sweeps = 1000;
  int burn_in = 100;  // reserved for sample averaging; the final state is used
  std::uint64_t seed = 1;

  // K topics with alpha = 50 / K and the remaining defaults.
  static LdaConfig with_topics(int k);

  // Throws ConfigError unless alpha > 0, beta > 0, K >= 1, 0 <= burn_in < sweeps.
  void validate() const;

  friend bool operator==(const LdaConfig&, const LdaConfig&) = default;
};

// Count tables of a collapsed Gibbs LDA state. Topic-word counts are stored
// word-major (V x K) so one word's K counts are contiguous for the sampler.
// Models loaded from disk carry topic-word tables only; trained models also
// keep the training tokens, assignments and document-topic tables.
class LdaModel {
 public:
  LdaModel() = default;

  // Model with the given topic-word counts (n_kw[k][w]); no training state.
  static LdaModel from_topic_word_counts(const LdaConfig& config, std::size_t vocab_size,
                                         const std::vector<std::vector<std::int32_t>>& n_kw);

  const LdaConfig& config() const { return config_; }
  std::size_t num_topics() const { return static_cast<std::size_t>(config_.num_topics); }
  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t num_docs() const { return doc_total_.size(); }
  bool has_training_state() const { return !assignments_.empty() || !doc_total_.empty(); }

  std::int32_t topic_word(std::size_t k, TokenId w) const {
    return word_topic_[static_cast<std::size_t>(w) * num_topics() + k];
  }
  std::span<const std::int32_t> word_topics(TokenId w) const {
    return {word_topic_.data() + static_cast<std::size_t>(w) * num_topics(), num_topics()};
  }
  std::span<const std::int32_t> topic_totals() const { return topic_total_; }
  std::int32_t doc_topic(std::size_t d, std::size_t k) const {
    return doc_topic_[d * num_topics() + k];
  }
  std::span<const std::int32_t> doc_topics(std::size_t d) const {
    return {doc_topic_.data() + d * num_topics(), num_topics()};
  }
  std::int32_t doc_total(std::size_t d) const { return doc_total_[d]; }
  std::span<const TokenId> doc_tokens(std::size_t d) const { return tokens_[d]; }
  std::span<const std::int32_t> assignments(std::size_t d) const { return assignments_[d]; }

  // phi[k][w] = (n_kw + beta) / (n_k + V beta)
  double phi(std::size_t k, TokenId w) const;
  std::vector<double> phi_row(std::size_t k) const;
  // All of phi, word-major: entry [w * K + k].
  std::vector<double> phi_by_word() const;
  // theta[d][k] = (n_dk + alpha) / (n_d + K alpha), training documents only.
  std::vector<double> theta(std::size_t d) const;

  // Topics ordered by a label-independent key (total count, then counts by
  // word id). Fold-in walks topics in this order so relabeling a model
  // permutes its inferences exactly.
  std::span<const std::uint32_t> canonical_order() const { return canonical_order_; }

  // Same model with topic k renamed to perm[k].
  LdaModel permuted(std::span<const std::size_t> perm) const;

  std::uint64_t dictionary_fingerprint() const { return dictionary_fingerprint_; }
  void set_dictionary_fingerprint(std::uint64_t fp) { dictionary_fingerprint_ = fp; }

  // Rebuilds every count table from tokens and assignments.
  struct Recount {
    std::vector<std::int32_t> word_topic, topic_total, doc_topic, doc_total;
  };
  Recount recount() const;
  bool counts_consistent() const;

 private:
  friend class GibbsSampler;
  friend LdaModel load_model(const std::filesystem::path&, std::uint64_t);

  void init_tables(const LdaConfig& config, std::size_t vocab_size, std::size_t num_docs);
  void refresh_canonical_order();

  LdaConfig config_;
  std::size_t vocab_size_ = 0;
  std::vector<std::int32_t> word_topic_;  // V x K
  std::vector<std::int32_t> topic_total_;
  std::vector<std::int32_t> doc_topic_;  // D x K
  std::vector<std::int32_t> doc_total_;
  std::vector<std::vector<TokenId>> tokens_;
  std::vector<std::vector<std::int32_t>> assignments_;
  std::vector<std::uint32_t> canonical_order_;
  std::uint64_t dictionary_fingerprint_ = 0;
};

// Sequential-scan collapsed Gibbs sampler. Each token's topic is redrawn from
//   p(z = k) ~ (n_dk + alpha) (n_kw + beta) / (n_k + V beta)
// with the token's own assignment removed from every count.
class GibbsSampler {
 public:
  // Assignments start uniformly at random from config.seed.
  GibbsSampler(const BowCorpus& corpus, std::size_t vocab_size, const LdaConfig& config);

  void sweep();
  int sweeps_done() const { return sweeps_done_; }

  // Unnormalized conditional for token i of document d, computed with that
  // token removed from the counts. Does not modify the state.
  void conditional(std::size_t d, std::size_t i, std::span<double> out) const;

  const LdaModel& model() const { return model_; }
  LdaModel release() &&;

 private:
  LdaModel model_;
  Rng rng_;
  int sweeps_done_ = 0;
  std::vector<double> weights_;
};

using SweepObserver = std::function<void(const GibbsSampler&)>;

// Runs config.sweeps sweeps. Throws DataError for an empty corpus or
// vocab_size == 0. `observer`, when set, runs after every sweep.
LdaModel train(const BowCorpus& corpus, std::size_t vocab_size, const LdaConfig& config,
               const SweepObserver& observer = {});
LdaModel train(const BowCorpus& corpus, const TokenDictionary& dict, const LdaConfig& config,
               const SweepObserver& observer = {});

struct TopicMixture {
  std::vector<double> theta;
  bool unassignable = false;  // no in-vocabulary token; theta is uniform
};

// Fold-in Gibbs: topic-word counts frozen, a local document-topic table is
// sampled for fold_sweeps sweeps; returns (n_dk + alpha) / (n + K alpha).
TopicMixture infer_theta(std::span<const TokenId> ids, const LdaModel& model, int fold_sweeps,
                         std::uint64_t seed);

struct DominantTopic {
  std::size_t topic = 0;
  bool unassignable = false;
};

// Argmax of infer_theta, ties toward the lowest topic id.
DominantTopic dominant_topic(std::span<const TokenId> ids, const LdaModel& model, int fold_sweeps,
                             std::uint64_t seed);

// exp(-LL / N) over held-out bags, theta per document from infer_theta.
// Throws DataError when no held-out token is in the vocabulary.
double perplexity(const LdaModel& model, const BowCorpus& held_out, int fold_sweeps = 20,
                  std::uint64_t seed = 0);

// Top-m word ids of topic k by phi, descending; ties toward lower ids.
std::vector<TokenId> top_words(const LdaModel& model, std::size_t k, std::size_t m);

struct CoherenceResult {
  std::vector<double> per_topic;
  std::size_t degenerate_pairs = 0;  // pairs skipped because D(w_j) = 0
};

// UMass: C(k) = sum_{i>=2} sum_{j<i} log((D(w_i, w_j) + 1) / D(w_j)).
CoherenceResult umass_coherence(const LdaModel& model, const BowCorpus& corpus, std::size_t top_m);

struct TopicReport {
  struct Topic {
    std::size_t id = 0;
    std::vector<std::pair<std::string, double>> top_words;
    double coherence = 0.0;
  };
  std::vector<Topic> topics;
  double perplexity = 0.0;
  double mean_coherence = 0.0;
  std::size_t degenerate_pairs = 0;

  std::string to_json() const;
};

TopicReport build_topic_report(const LdaModel& model, const TokenDictionary& dict,
                               const BowCorpus& corpus, const BowCorpus& held_out,
                               std::size_t top_m, int fold_sweeps, std::uint64_t seed);

// Versioned binary model file: magic, config, V, dictionary fingerprint,
// dense n_kw (topic-major) and n_k. Throws IoError.
void save_model(const LdaModel& model, const std::filesystem::path& path);

// Throws DataError when the file is corrupt or was trained against a
// dictionary with another fingerprint.
LdaModel load_model(const std::filesystem::path& path, std::uint64_t expected_fingerprint);

}  // namespace topicsum
