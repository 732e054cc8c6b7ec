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

#include "topicsum/textrank.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "topicsum/error.hpp"
#include "topicsum/kernels.hpp"

namespace topicsum {

SimilarityMode parse_similarity_mode(std::string_view s) {
  if (s == "tfidf") return SimilarityMode::kTfidf;
  if (s == "embedding") return SimilarityMode::kEmbedding;
  throw ConfigError("unknown similarity mode '" + std::string(s) + "'");
}

std::string_view similarity_mode_name(SimilarityMode mode) {
  return mode == SimilarityMode::kTfidf ? "tfidf" : "embedding";
}

void TextRankConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) throw ConfigError("damping must lie in (0, 1)");
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (top_n < 1) throw ConfigError("top_n must be >= 1");
  if (min_cluster_sentences < 1) throw ConfigError("min_cluster_sentences must be >= 1");
}

std::vector<Vector> sentence_vectors(const std::vector<std::string>& sentences, SimilarityMode mode,
                                     const SummarizerContext& ctx) {
  std::vector<Vector> out;
  out.reserve(sentences.size());
  if (mode == SimilarityMode::kEmbedding) {
    if (!ctx.embeddings || ctx.embeddings->dim() == 0) {
      throw ConfigError("embedding similarity requires an embedding table");
    }
    const std::size_t dim = ctx.embeddings->dim();
    for (const auto& s : sentences) {
      Vector v(dim, 0.0);
      std::size_t hits = 0;
      for (const auto& tok : ctx.cleaner.tokenize(s)) {
        const auto e = ctx.embeddings->find(tok);
        if (e.empty()) continue;
        kernels::axpy(1.0, e, v);
        ++hits;
      }
      if (hits) {
        for (auto& x : v) x /= static_cast<double>(hits);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<TokenList> tokens;
  tokens.reserve(sentences.size());
  StringMap<std::size_t> column;
  std::vector<double> idf;
  const double num_docs = static_cast<double>(ctx.dictionary.num_docs());
  for (const auto& s : sentences) {
    tokens.push_back(ctx.cleaner.clean(s));
    for (const auto& t : tokens.back()) {
      if (column.contains(t)) continue;
      const auto id = ctx.dictionary.id(t);
      const double df = id ? ctx.dictionary.doc_freq(*id) : 0.0;
      column.emplace(t, idf.size());
      idf.push_back(std::log((1.0 + num_docs) / (1.0 + df)) + 1.0);
    }
  }
  for (const auto& toks : tokens) {
    Vector v(idf.size(), 0.0);
    for (const auto& t : toks) v[column.find(t)->second] += 1.0;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] *= idf[c];
    out.push_back(std::move(v));
  }
  return out;
}

SimilarityMatrix similarity_matrix(const std::vector<Vector>& vectors) {
  SimilarityMatrix sim;
  sim.n = vectors.size();
  sim.values.assign(sim.n * sim.n, 0.0);
  std::vector<double> norms(sim.n);
  for (std::size_t i = 0; i < sim.n; ++i) norms[i] = std::sqrt(kernels::dot(vectors[i], vectors[i]));
  for (std::size_t i = 0; i < sim.n; ++i) {
    for (std::size_t j = i + 1; j < sim.n; ++j) {
      if (norms[i] == 0.0 || norms[j] == 0.0) continue;
      const double c = kernels::dot(vectors[i], vectors[j]) / (norms[i] * norms[j]);
      sim(i, j) = sim(j, i) = std::clamp(c, 0.0, 1.0);
    }
  }
  return sim;
}

TextRankResult textrank_scores(const SimilarityMatrix& sim, const TextRankConfig& config) {
  const std::vector<double> start(sim.n, sim.n ? 1.0 / static_cast<double>(sim.n) : 0.0);
  return textrank_scores(sim, config, start);
}

TextRankResult textrank_scores(const SimilarityMatrix& sim, const TextRankConfig& config,
                               std::span<const double> start) {
  config.validate();
  const std::size_t n = sim.n;
  if (n == 0) throw DataError("textrank needs at least one sentence");
  if (start.size() != n) throw DataError("start vector has the wrong length");

  std::vector<double> w(sim.values);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = w.data() + i * n;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += row[j];
    if (sum > 0.0) {
      for (std::size_t j = 0; j < n; ++j) row[j] /= sum;
    } else {
      std::fill(row, row + n, 1.0 / static_cast<double>(n));
    }
  }

  const auto& kt = kernels::active();
  const double d = config.damping;
  const double teleport = (1.0 - d) / static_cast<double>(n);
  TextRankResult result;
  std::vector<double> r(start.begin(), start.end());
  std::vector<double> next(n);
  while (result.iterations < config.max_iter) {
    std::fill(next.begin(), next.end(), teleport);
    for (std::size_t i = 0; i < n; ++i) kt.axpy(d * r[i], w.data() + i * n, next.data(), n);
    ++result.iterations;
    const double delta = kt.l1_distance(next.data(), r.data(), n);
    r.swap(next);
    if (delta < config.tol) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(r);
  return result;
}

std::vector<std::size_t> top_indices(std::span<const double> scores, std::size_t n) {
  std::vector<std::size_t> picked;
  std::vector<char> used(scores.size(), 0);
  n = std::min(n, scores.size());
  while (picked.size() < n) {
    std::size_t best = scores.size();
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (used[i]) continue;
      if (best == scores.size() || scores[i] > scores[best] + 1e-12) best = i;
    }
    used[best] = 1;
    picked.push_back(best);
  }
  return picked;
}

std::vector<SelectedSentence> summarize_cluster(const std::vector<ClusterEntry>& cluster,
                                                std::size_t topic_id, const TextRankConfig& config,
                                                const SummarizerContext& ctx) {
  std::vector<SelectedSentence> out;
  if (cluster.size() < config.min_cluster_sentences) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      out.push_back({cluster[i].sentence_index, cluster[i].text, topic_id, i, true});
    }
    return out;
  }
  std::vector<std::string> texts;
  texts.reserve(cluster.size());
  for (const auto& e : cluster) texts.push_back(e.text);
  const auto sim = similarity_matrix(sentence_vectors(texts, config.similarity_mode, ctx));
  const TextRankResult ranked = textrank_scores(sim, config);
  if (!ranked.converged) {
    spdlog::debug("textrank did not converge in {} iterations", ranked.iterations);
  }
  const auto top = top_indices(ranked.scores, config.top_n);
  for (std::size_t rank = 0; rank < top.size(); ++rank) {
    const auto& e = cluster[top[rank]];
    out.push_back({e.sentence_index, e.text, topic_id, rank, false});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sentence_index < b.sentence_index; });
  return out;
}

std::string ExtractiveSummary::text() const {
  std::string out;
  for (const auto& s : sentences) {
    out += s.text;
    out += '\n';
  }
  return out;
}

std::string ExtractiveSummary::provenance_json() const {
  nlohmann::ordered_json j;
  j["doc_id"] = doc_id;
  auto& arr = j["sentences"] = nlohmann::ordered_json::array();
  for (const auto& s : sentences) {
    arr.push_back({{"sentence_index", s.sentence_index},
                   {"topic_id", s.topic_id},
                   {"rank", s.rank},
                   {"whole_cluster", s.whole_cluster}});
  }
  return j.dump(2) + "\n";
}

ExtractiveSummary assemble_summary(const TopicClusterSet& clusters, const TextRankConfig& config,
                                   const SummarizerContext& ctx) {
  ExtractiveSummary summary;
  summary.doc_id = clusters.doc_id;
  if (clusters.present_topics.empty()) {
    spdlog::warn("document {} has no clusters; empty summary", clusters.doc_id);
    return summary;
  }
  for (std::size_t topic : clusters.present_topics) {
    auto picked = summarize_cluster(clusters.clusters.at(topic), topic, config, ctx);
    for (auto& s : picked) summary.sentences.push_back(std::move(s));
  }
  std::stable_sort(summary.sentences.begin(), summary.sentences.end(),
                   [](const auto& a, const auto& b) { return a.sentence_index < b.sentence_index; });
  summary.sentences.erase(std::unique(summary.sentences.begin(), summary.sentences.end(),
                                      [](const auto& a, const auto& b) {
                                        return a.sentence_index == b.sentence_index;
                                      }),
                          summary.sentences.end());
  return summary;
}

}  // namespace topicsum
