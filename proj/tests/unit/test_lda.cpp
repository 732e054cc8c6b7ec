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

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "synthetic_lda.hpp"
#include "temp_dir.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/lda.hpp"

using namespace topicsum;

namespace {

LdaConfig small_config(int k, int sweeps, std::uint64_t seed = 3) {
  LdaConfig c = LdaConfig::with_topics(k);
  c.sweeps = sweeps;
  c.burn_in = 0;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(LdaConfig::with_topics(10).alpha == doctest::Approx(5.0));
  LdaConfig c;
  CHECK_NOTHROW(c.validate());
  c.alpha = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.beta = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.num_topics = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.burn_in = c.sweeps;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("training rejects empty input") {
  CHECK_THROWS_AS(train(BowCorpus{}, 5, small_config(2, 1)), DataError);
  BowCorpus c;
  c.docs.push_back({{0, 1}});
  CHECK_THROWS_AS(train(c, 0, small_config(2, 1)), DataError);
}

TEST_CASE("counts stay consistent with assignments across sweeps") {
  const BowCorpus corpus = synthetic::uniform_corpus(20, 30, 25, 11);
  int checked = 0;
  train(corpus, 30, small_config(4, 20), [&](const GibbsSampler& s) {
    CHECK(oracle::tables_match(oracle::recount(s.model()), s.model()));
    CHECK(s.model().counts_consistent());
    ++checked;
  });
  CHECK(checked == 20);
}

TEST_CASE("the conditional matches the collapsed Gibbs formula") {
  const BowCorpus corpus = synthetic::uniform_corpus(5, 8, 10, 5);
  GibbsSampler s(corpus, 8, small_config(3, 1));
  s.sweep();
  const LdaModel& m = s.model();
  const double alpha = m.config().alpha, beta = m.config().beta, vbeta = 8 * beta;
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    for (std::size_t i = 0; i < m.doc_tokens(d).size(); ++i) {
      std::vector<double> p(3);
      s.conditional(d, i, p);
      const TokenId w = m.doc_tokens(d)[i];
      const auto own = static_cast<std::size_t>(m.assignments(d)[i]);
      for (std::size_t k = 0; k < 3; ++k) {
        const double minus = k == own ? 1.0 : 0.0;
        const double expect = (m.doc_topic(d, k) - minus + alpha) *
                              (m.topic_word(k, w) - minus + beta) /
                              (m.topic_totals()[k] - minus + vbeta);
        CHECK(p[k] == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("training is deterministic for a fixed seed") {
  const BowCorpus corpus = synthetic::uniform_corpus(10, 20, 15, 2);
  const LdaModel a = train(corpus, 20, small_config(3, 10, 9));
  const LdaModel b = train(corpus, 20, small_config(3, 10, 9));
  const LdaModel c = train(corpus, 20, small_config(3, 10, 10));
  bool same = true, differs = false;
  for (std::size_t d = 0; d < a.num_docs(); ++d) {
    const auto za = a.assignments(d), zb = b.assignments(d), zc = c.assignments(d);
    same = same && std::equal(za.begin(), za.end(), zb.begin());
    differs = differs || !std::equal(za.begin(), za.end(), zc.begin());
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("phi and theta are distributions") {
  const BowCorpus corpus = synthetic::uniform_corpus(8, 12, 20, 4);
  const LdaModel m = train(corpus, 12, small_config(3, 5));
  for (std::size_t k = 0; k < 3; ++k) {
    const auto row = m.phi_row(k);
    CHECK(std::accumulate(row.begin(), row.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    const auto t = m.theta(d);
    CHECK(std::accumulate(t.begin(), t.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("uniform topics give perplexity V") {
  const std::size_t v = 37;
  LdaConfig c = small_config(4, 1);
  const LdaModel m = LdaModel::from_topic_word_counts(
      c, v, std::vector<std::vector<std::int32_t>>(4, std::vector<std::int32_t>(v, 0)));
  const BowCorpus held = synthetic::uniform_corpus(6, v, 30, 8);
  CHECK(perplexity(m, held, 5, 1) == doctest::Approx(static_cast<double>(v)).epsilon(1e-6));
}

TEST_CASE("perplexity needs in-vocabulary tokens") {
  LdaConfig c = small_config(2, 1);
  const LdaModel m = LdaModel::from_topic_word_counts(
      c, 3, std::vector<std::vector<std::int32_t>>(2, std::vector<std::int32_t>(3, 1)));
  CHECK_THROWS_AS(perplexity(m, BowCorpus{}), DataError);
}

TEST_CASE("fold-in of unseen text") {
  const auto syn = synthetic::disjoint_topics(2, 10, 40, 30, 0.3, 5);
  const LdaModel m = train(syn.corpus, syn.vocab_size, small_config(2, 100));

  const TopicMixture none = infer_theta(std::vector<TokenId>{-1, 999}, m, 10, 1);
  CHECK(none.unassignable);
  CHECK(none.theta == std::vector<double>{0.5, 0.5});
  const DominantTopic dt = dominant_topic(std::vector<TokenId>{}, m, 10, 1);
  CHECK(dt.unassignable);
  CHECK(dt.topic == 0);

  const TopicMixture mix = infer_theta(std::vector<TokenId>{0, 1, 2, 3}, m, 20, 7);
  CHECK_FALSE(mix.unassignable);
  CHECK(std::accumulate(mix.theta.begin(), mix.theta.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const auto again = infer_theta(std::vector<TokenId>{0, 1, 2, 3}, m, 20, 7);
  CHECK(again.theta == mix.theta);
}

TEST_CASE("relabeling topics permutes inference and keeps perplexity") {
  const auto syn = synthetic::disjoint_topics(3, 8, 60, 30, 0.5, 13);
  const LdaModel m = train(syn.corpus, syn.vocab_size, small_config(3, 60));
  const std::vector<std::size_t> perm = {2, 0, 1};
  const LdaModel p = m.permuted(perm);
  CHECK(p.counts_consistent());
  const BowCorpus held = synthetic::disjoint_topics(3, 8, 10, 20, 0.5, 99).corpus;
  CHECK(perplexity(p, held, 10, 4) == doctest::Approx(perplexity(m, held, 10, 4)).epsilon(1e-9));

  const std::vector<TokenId> ids = {0, 3, 9, 17, 5};
  const auto a = infer_theta(ids, m, 15, 21);
  const auto b = infer_theta(ids, p, 15, 21);
  for (std::size_t k = 0; k < 3; ++k) CHECK(b.theta[perm[k]] == doctest::Approx(a.theta[k]));
}

TEST_CASE("top words and UMass coherence on a hand-built model") {
  LdaConfig c = small_config(1, 1);
  // Topic 0 ranks words 2, 0, 1 (id breaks the 0/3 tie).
  const LdaModel m = LdaModel::from_topic_word_counts(c, 4, {{5, 1, 9, 5}});
  CHECK(top_words(m, 0, 3) == std::vector<TokenId>{2, 0, 3});
  CHECK(top_words(m, 0, 10).size() == 4);

  BowCorpus corpus;
  corpus.docs = {{{0, 1}, {2, 1}}, {{2, 2}}, {{0, 1}, {3, 1}}, {{1, 1}}};
  // Words 2, 0, 3: D(2)=2, D(0)=2, D(3)=1, D(0,2)=1, D(3,2)=0, D(3,0)=1.
  const double expected = std::log((1.0 + 1) / 2) + std::log((0.0 + 1) / 2) + std::log((1.0 + 1) / 2);
  const auto coh = umass_coherence(m, corpus, 3);
  CHECK(coh.per_topic[0] == doctest::Approx(expected));
  CHECK(coh.degenerate_pairs == 0);

  BowCorpus sparse;
  sparse.docs = {{{1, 1}}};
  CHECK(umass_coherence(m, sparse, 3).degenerate_pairs == 3);
}

TEST_CASE("model file round trip and failure modes") {
  TempDir dir;
  const BowCorpus corpus = synthetic::uniform_corpus(6, 10, 12, 1);
  LdaModel m = train(corpus, 10, small_config(3, 5));
  m.set_dictionary_fingerprint(1234);
  save_model(m, dir / "m.lda");
  const LdaModel back = load_model(dir / "m.lda", 1234);
  CHECK(back.config() == m.config());
  CHECK(back.vocab_size() == 10);
  for (std::size_t k = 0; k < 3; ++k) {
    for (TokenId w = 0; w < 10; ++w) CHECK(back.topic_word(k, w) == m.topic_word(k, w));
  }
  CHECK(perplexity(back, corpus, 5, 2) == perplexity(m, corpus, 5, 2));

  CHECK_THROWS_AS(load_model(dir / "m.lda", 999), DataError);
  CHECK_THROWS_AS(load_model(dir / "absent.lda", 1234), IoError);
  std::string bytes = read_file(dir / "m.lda");
  write_file(dir / "short.lda", bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(load_model(dir / "short.lda", 1234), DataError);
  bytes[0] = 'X';
  write_file(dir / "magic.lda", bytes);
  CHECK_THROWS_AS(load_model(dir / "magic.lda", 1234), DataError);
}

TEST_CASE("topic report") {
  const auto syn = synthetic::disjoint_topics(2, 6, 30, 20, 0.5, 2);
  TokenDictionary dict;
  for (std::size_t w = 0; w < syn.vocab_size; ++w) dict.add("w" + std::to_string(w), 1);
  const LdaModel m = train(syn.corpus, dict, small_config(2, 30));
  const TopicReport r = build_topic_report(m, dict, syn.corpus, syn.corpus, 4, 10, 1);
  CHECK(r.topics.size() == 2);
  CHECK(r.topics[0].top_words.size() == 4);
  CHECK(r.perplexity > 1.0);
  CHECK(r.to_json().find("\"top_words\"") != std::string::npos);
}
