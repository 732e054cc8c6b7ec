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

#include "synthetic_lda.hpp"

#include <map>
#include <random>

namespace synthetic {
namespace {

std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t n, double a) {
  std::gamma_distribution<double> g(a, 1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) sum += (x = g(rng));
  for (auto& x : v) x /= sum;
  return v;
}

std::size_t draw(std::mt19937_64& rng, const std::vector<double>& p) {
  return std::discrete_distribution<std::size_t>(p.begin(), p.end())(rng);
}

}  // namespace

topicsum::Bag to_bag(const std::vector<topicsum::TokenId>& ids) {
  std::map<topicsum::TokenId, std::uint32_t> counts;
  for (auto id : ids) ++counts[id];
  return {counts.begin(), counts.end()};
}

LdaCorpus disjoint_topics(std::size_t k, std::size_t words_per_topic, std::size_t docs,
                          std::size_t doc_length, double doc_alpha, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LdaCorpus c;
  c.vocab_size = k * words_per_topic;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<double> row(c.vocab_size, 0.0);
    const auto block = dirichlet(rng, words_per_topic, 2.0);
    for (std::size_t w = 0; w < words_per_topic; ++w) row[t * words_per_topic + w] = block[w];
    c.phi.push_back(std::move(row));
  }
  for (std::size_t d = 0; d < docs; ++d) {
    const auto theta = dirichlet(rng, k, doc_alpha);
    std::vector<topicsum::TokenId> ids;
    for (std::size_t i = 0; i < doc_length; ++i) {
      ids.push_back(static_cast<topicsum::TokenId>(draw(rng, c.phi[draw(rng, theta)])));
    }
    c.corpus.docs.push_back(to_bag(ids));
  }
  return c;
}

std::vector<LabeledSentence> single_topic_sentences(const LdaCorpus& c, std::size_t count,
                                                    std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledSentence> out;
  for (std::size_t s = 0; s < count; ++s) {
    LabeledSentence ls;
    ls.topic = s % c.phi.size();
    for (std::size_t i = 0; i < length; ++i) {
      ls.ids.push_back(static_cast<topicsum::TokenId>(draw(rng, c.phi[ls.topic])));
    }
    out.push_back(std::move(ls));
  }
  return out;
}

topicsum::BowCorpus uniform_corpus(std::size_t docs, std::size_t vocab, std::size_t max_length,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::uniform_int_distribution<topicsum::TokenId> word(0, static_cast<topicsum::TokenId>(vocab) - 1);
  topicsum::BowCorpus c;
  for (std::size_t d = 0; d < docs; ++d) {
    std::vector<topicsum::TokenId> ids(len(rng));
    for (auto& id : ids) id = word(rng);
    c.docs.push_back(to_bag(ids));
  }
  return c;
}

}  // namespace synthetic
