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

#include "topicsum/lda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <spdlog/spdlog.h>

#include "topicsum/error.hpp"
#include "topicsum/kernels.hpp"

namespace topicsum {

LdaConfig LdaConfig::with_topics(int k) {
  LdaConfig c;
  c.num_topics = k;
  c.alpha = 50.0 / k;
  return c;
}

void LdaConfig::validate() const {
  if (num_topics < 1) throw ConfigError("num_topics must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be > 0");
  if (sweeps < 1) throw ConfigError("sweeps must be >= 1");
  if (burn_in < 0 || burn_in >= sweeps) throw ConfigError("burn_in must lie in [0, sweeps)");
}

void LdaModel::init_tables(const LdaConfig& config, std::size_t vocab_size,
                           std::size_t num_docs) {
  config_ = config;
  vocab_size_ = vocab_size;
  const std::size_t k = num_topics();
  word_topic_.assign(vocab_size * k, 0);
  topic_total_.assign(k, 0);
  doc_topic_.assign(num_docs * k, 0);
  doc_total_.assign(num_docs, 0);
}

LdaModel LdaModel::from_topic_word_counts(const LdaConfig& config, std::size_t vocab_size,
                                          const std::vector<std::vector<std::int32_t>>& n_kw) {
  config.validate();
  const auto k = static_cast<std::size_t>(config.num_topics);
  if (n_kw.size() != k) throw DataError("topic-word table must have K rows");
  LdaModel m;
  m.init_tables(config, vocab_size, 0);
  for (std::size_t t = 0; t < k; ++t) {
    if (n_kw[t].size() != vocab_size) throw DataError("topic-word rows must have V entries");
    for (std::size_t w = 0; w < vocab_size; ++w) {
      if (n_kw[t][w] < 0) throw DataError("negative topic-word count");
      m.word_topic_[w * k + t] = n_kw[t][w];
      m.topic_total_[t] += n_kw[t][w];
    }
  }
  m.refresh_canonical_order();
  return m;
}

double LdaModel::phi(std::size_t k, TokenId w) const {
  const double vbeta = static_cast<double>(vocab_size_) * config_.beta;
  return (topic_word(k, w) + config_.beta) / (topic_total_[k] + vbeta);
}

std::vector<double> LdaModel::phi_row(std::size_t k) const {
  std::vector<double> row(vocab_size_);
  for (std::size_t w = 0; w < vocab_size_; ++w) row[w] = phi(k, static_cast<TokenId>(w));
  return row;
}

std::vector<double> LdaModel::phi_by_word() const {
  const std::size_t k = num_topics();
  const double vbeta = static_cast<double>(vocab_size_) * config_.beta;
  std::vector<double> out(vocab_size_ * k);
  for (std::size_t w = 0; w < vocab_size_; ++w) {
    for (std::size_t t = 0; t < k; ++t) {
      out[w * k + t] = (word_topic_[w * k + t] + config_.beta) / (topic_total_[t] + vbeta);
    }
  }
  return out;
}

std::vector<double> LdaModel::theta(std::size_t d) const {
  const std::size_t k = num_topics();
  const double denom = doc_total_.at(d) + static_cast<double>(k) * config_.alpha;
  std::vector<double> out(k);
  for (std::size_t t = 0; t < k; ++t) out[t] = (doc_topic(d, t) + config_.alpha) / denom;
  return out;
}

void LdaModel::refresh_canonical_order() {
  const std::size_t k = num_topics();
  canonical_order_.resize(k);
  std::iota(canonical_order_.begin(), canonical_order_.end(), 0u);
  std::stable_sort(canonical_order_.begin(), canonical_order_.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     if (topic_total_[a] != topic_total_[b]) {
                       return topic_total_[a] > topic_total_[b];
                     }
                     for (std::size_t w = 0; w < vocab_size_; ++w) {
                       const auto ca = word_topic_[w * k + a];
                       const auto cb = word_topic_[w * k + b];
                       if (ca != cb) return ca > cb;
                     }
                     return false;
                   });
}

LdaModel LdaModel::permuted(std::span<const std::size_t> perm) const {
  const std::size_t k = num_topics();
  if (perm.size() != k) throw DataError("permutation must have K entries");
  LdaModel m = *this;
  for (std::size_t w = 0; w < vocab_size_; ++w) {
    for (std::size_t t = 0; t < k; ++t) m.word_topic_[w * k + perm[t]] = word_topic_[w * k + t];
  }
  for (std::size_t t = 0; t < k; ++t) m.topic_total_[perm[t]] = topic_total_[t];
  for (std::size_t d = 0; d < num_docs(); ++d) {
    for (std::size_t t = 0; t < k; ++t) m.doc_topic_[d * k + perm[t]] = doc_topic_[d * k + t];
  }
  for (auto& z : m.assignments_) {
    for (auto& topic : z) topic = static_cast<std::int32_t>(perm[static_cast<std::size_t>(topic)]);
  }
  m.refresh_canonical_order();
  return m;
}

LdaModel::Recount LdaModel::recount() const {
  const std::size_t k = num_topics();
  Recount r;
  r.word_topic.assign(vocab_size_ * k, 0);
  r.topic_total.assign(k, 0);
  r.doc_topic.assign(tokens_.size() * k, 0);
  r.doc_total.assign(tokens_.size(), 0);
  for (std::size_t d = 0; d < tokens_.size(); ++d) {
    for (std::size_t i = 0; i < tokens_[d].size(); ++i) {
      const auto w = static_cast<std::size_t>(tokens_[d][i]);
      const auto t = static_cast<std::size_t>(assignments_[d][i]);
      ++r.word_topic[w * k + t];
      ++r.topic_total[t];
      ++r.doc_topic[d * k + t];
      ++r.doc_total[d];
    }
  }
  return r;
}

bool LdaModel::counts_consistent() const {
  const Recount r = recount();
  return r.word_topic == word_topic_ && r.topic_total == topic_total_ &&
         r.doc_topic == doc_topic_ && r.doc_total == doc_total_;
}

// ---------------------------------------------------------------------------

GibbsSampler::GibbsSampler(const BowCorpus& corpus, std::size_t vocab_size,
                           const LdaConfig& config)
    : rng_(config.seed) {
  config.validate();
  if (corpus.docs.empty()) throw DataError("cannot train on an empty corpus");
  if (vocab_size == 0) throw DataError("cannot train with an empty vocabulary");
  const std::uint64_t total = corpus.total_tokens();
  if (total == 0) throw DataError("training corpus has no tokens");
  if (static_cast<std::uint64_t>(config.num_topics) > total) {
    spdlog::warn("K = {} exceeds the {} training tokens", config.num_topics, total);
  }

  model_.init_tables(config, vocab_size, corpus.docs.size());
  const std::size_t k = model_.num_topics();
  model_.tokens_.resize(corpus.docs.size());
  model_.assignments_.resize(corpus.docs.size());
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    auto& tokens = model_.tokens_[d];
    tokens = expand(corpus.docs[d]);
    auto& z = model_.assignments_[d];
    z.resize(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const auto w = static_cast<std::size_t>(tokens[i]);
      if (w >= vocab_size) throw DataError("token id out of vocabulary range");
      const auto t = static_cast<std::size_t>(uniform_index(rng_, k));
      z[i] = static_cast<std::int32_t>(t);
      ++model_.word_topic_[w * k + t];
      ++model_.topic_total_[t];
      ++model_.doc_topic_[d * k + t];
    }
    model_.doc_total_[d] = static_cast<std::int32_t>(tokens.size());
  }
  weights_.resize(k);
  model_.refresh_canonical_order();
}

void GibbsSampler::sweep() {
  const auto& kt = kernels::active();
  const std::size_t k = model_.num_topics();
  const double alpha = model_.config_.alpha;
  const double beta = model_.config_.beta;
  const double vbeta = static_cast<double>(model_.vocab_size_) * beta;
  auto& word_topic = model_.word_topic_;
  auto& topic_total = model_.topic_total_;
  double* weights = weights_.data();

  for (std::size_t d = 0; d < model_.tokens_.size(); ++d) {
    const auto& tokens = model_.tokens_[d];
    auto& z = model_.assignments_[d];
    std::int32_t* doc_topic = model_.doc_topic_.data() + d * k;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const auto w = static_cast<std::size_t>(tokens[i]);
      std::int32_t* wt = word_topic.data() + w * k;
      auto t = static_cast<std::size_t>(z[i]);
      --doc_topic[t];
      --wt[t];
      --topic_total[t];

      kt.gibbs_weights(doc_topic, wt, topic_total.data(), alpha, beta, vbeta, weights, k);
      for (std::size_t j = 1; j < k; ++j) weights[j] += weights[j - 1];
      const double u = uniform01(rng_) * weights[k - 1];
      t = 0;
      while (t + 1 < k && weights[t] <= u) ++t;

      z[i] = static_cast<std::int32_t>(t);
      ++doc_topic[t];
      ++wt[t];
      ++topic_total[t];
    }
  }
  ++sweeps_done_;
}

void GibbsSampler::conditional(std::size_t d, std::size_t i, std::span<double> out) const {
  const std::size_t k = model_.num_topics();
  const auto w = static_cast<std::size_t>(model_.tokens_.at(d).at(i));
  const auto own = static_cast<std::size_t>(model_.assignments_[d][i]);
  std::vector<std::int32_t> dt(model_.doc_topic_.begin() + static_cast<std::ptrdiff_t>(d * k),
                               model_.doc_topic_.begin() + static_cast<std::ptrdiff_t>((d + 1) * k));
  std::vector<std::int32_t> wt(model_.word_topic_.begin() + static_cast<std::ptrdiff_t>(w * k),
                               model_.word_topic_.begin() + static_cast<std::ptrdiff_t>((w + 1) * k));
  std::vector<std::int32_t> tt = model_.topic_total_;
  --dt[own];
  --wt[own];
  --tt[own];
  const double beta = model_.config_.beta;
  kernels::active().gibbs_weights(dt.data(), wt.data(), tt.data(), model_.config_.alpha, beta,
                                  static_cast<double>(model_.vocab_size_) * beta, out.data(), k);
}

LdaModel GibbsSampler::release() && {
  model_.refresh_canonical_order();
  return std::move(model_);
}

LdaModel train(const BowCorpus& corpus, std::size_t vocab_size, const LdaConfig& config,
               const SweepObserver& observer) {
  GibbsSampler sampler(corpus, vocab_size, config);
  for (int s = 0; s < config.sweeps; ++s) {
    sampler.sweep();
    if (observer) observer(sampler);
  }
  return std::move(sampler).release();
}

LdaModel train(const BowCorpus& corpus, const TokenDictionary& dict, const LdaConfig& config,
               const SweepObserver& observer) {
  LdaModel model = train(corpus, dict.size(), config, observer);
  model.set_dictionary_fingerprint(dict.fingerprint());
  return model;
}

// ---------------------------------------------------------------------------

TopicMixture infer_theta(std::span<const TokenId> ids, const LdaModel& model, int fold_sweeps,
                         std::uint64_t seed) {
  const std::size_t k = model.num_topics();
  const double alpha = model.config().alpha;
  const double beta = model.config().beta;
  const double vbeta = static_cast<double>(model.vocab_size()) * beta;

  std::vector<TokenId> words;
  words.reserve(ids.size());
  for (TokenId w : ids) {
    if (w >= 0 && static_cast<std::size_t>(w) < model.vocab_size()) words.push_back(w);
  }
  TopicMixture out;
  if (words.empty()) {
    out.theta.assign(k, 1.0 / static_cast<double>(k));
    out.unassignable = true;
    return out;
  }

  const auto order = model.canonical_order();
  const auto totals = model.topic_totals();
  const auto& kt = kernels::active();
  Rng rng(seed);
  std::vector<std::int32_t> doc_topic(k, 0);
  std::vector<std::int32_t> z(words.size());
  std::vector<double> weights(k);
  for (std::size_t i = 0; i < words.size(); ++i) {
    z[i] = static_cast<std::int32_t>(order[uniform_index(rng, k)]);
    ++doc_topic[static_cast<std::size_t>(z[i])];
  }
  for (int s = 0; s < fold_sweeps; ++s) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      --doc_topic[static_cast<std::size_t>(z[i])];
      kt.gibbs_weights(doc_topic.data(), model.word_topics(words[i]).data(), totals.data(), alpha,
                       beta, vbeta, weights.data(), k);
      double total = 0.0;
      for (std::size_t c = 0; c < k; ++c) total += weights[order[c]];
      const double u = uniform01(rng) * total;
      double acc = 0.0;
      std::size_t pick = order[k - 1];
      for (std::size_t c = 0; c + 1 < k; ++c) {
        acc += weights[order[c]];
        if (u < acc) {
          pick = order[c];
          break;
        }
      }
      z[i] = static_cast<std::int32_t>(pick);
      ++doc_topic[pick];
    }
  }

  const double denom = static_cast<double>(words.size()) + static_cast<double>(k) * alpha;
  out.theta.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.theta[t] = (doc_topic[t] + alpha) / denom;
  return out;
}

DominantTopic dominant_topic(std::span<const TokenId> ids, const LdaModel& model, int fold_sweeps,
                             std::uint64_t seed) {
  const TopicMixture mix = infer_theta(ids, model, fold_sweeps, seed);
  DominantTopic out;
  out.unassignable = mix.unassignable;
  for (std::size_t t = 1; t < mix.theta.size(); ++t) {
    if (mix.theta[t] > mix.theta[out.topic]) out.topic = t;
  }
  return out;
}

double perplexity(const LdaModel& model, const BowCorpus& held_out, int fold_sweeps,
                  std::uint64_t seed) {
  const std::size_t k = model.num_topics();
  const std::vector<double> phi = model.phi_by_word();
  double log_likelihood = 0.0;
  std::uint64_t n = 0;
  for (std::size_t d = 0; d < held_out.docs.size(); ++d) {
    Bag bag;
    for (const auto& entry : held_out.docs[d]) {
      if (entry.first >= 0 && static_cast<std::size_t>(entry.first) < model.vocab_size()) {
        bag.push_back(entry);
      }
    }
    if (bag.empty()) continue;
    const auto ids = expand(bag);
    const TopicMixture mix = infer_theta(ids, model, fold_sweeps, derive_seed(seed, "perplexity", d));
    for (const auto& [w, count] : bag) {
      const double p = kernels::dot(mix.theta, {phi.data() + static_cast<std::size_t>(w) * k, k});
      log_likelihood += count * std::log(p);
      n += count;
    }
  }
  if (n == 0) throw DataError("held-out set has no in-vocabulary tokens");
  return std::exp(-log_likelihood / static_cast<double>(n));
}

std::vector<TokenId> top_words(const LdaModel& model, std::size_t k, std::size_t m) {
  std::vector<TokenId> ids(model.vocab_size());
  std::iota(ids.begin(), ids.end(), 0);
  m = std::min(m, ids.size());
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(m), ids.end(),
                    [&](TokenId a, TokenId b) {
                      const auto ca = model.topic_word(k, a);
                      const auto cb = model.topic_word(k, b);
                      return ca != cb ? ca > cb : a < b;
                    });
  ids.resize(m);
  return ids;
}

CoherenceResult umass_coherence(const LdaModel& model, const BowCorpus& corpus,
                                std::size_t top_m) {
  if (top_m < 1) throw ConfigError("top_m must be >= 1");
  CoherenceResult result;
  result.per_topic.assign(model.num_topics(), 0.0);
  std::vector<char> present(model.vocab_size(), 0);

  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    const auto words = top_words(model, k, top_m);
    const std::size_t m = words.size();
    std::vector<std::uint32_t> df(m, 0);
    std::vector<std::uint32_t> co(m * m, 0);
    for (const auto& bag : corpus.docs) {
      for (const auto& [w, c] : bag) {
        if (static_cast<std::size_t>(w) < present.size()) present[static_cast<std::size_t>(w)] = 1;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!present[static_cast<std::size_t>(words[i])]) continue;
        ++df[i];
        for (std::size_t j = 0; j < i; ++j) {
          if (present[static_cast<std::size_t>(words[j])]) ++co[i * m + j];
        }
      }
      for (const auto& [w, c] : bag) {
        if (static_cast<std::size_t>(w) < present.size()) present[static_cast<std::size_t>(w)] = 0;
      }
    }
    double c = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (df[j] == 0) {
          ++result.degenerate_pairs;
          continue;
        }
        c += std::log((co[i * m + j] + 1.0) / df[j]);
      }
    }
    result.per_topic[k] = c;
  }
  return result;
}

}  // namespace topicsum
