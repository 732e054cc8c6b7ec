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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "synth/wikihow_synth.hpp"
#include "synthetic_lda.hpp"
#include "temp_dir.hpp"
#include "topicsum/cleaning.hpp"
#include "topicsum/io.hpp"
#include "topicsum/lda.hpp"
#include "topicsum/pipeline.hpp"
#include "topicsum/rouge.hpp"
#include "topicsum/sentences.hpp"
#include "topicsum/textrank.hpp"

using namespace topicsum;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// ---- AC1 -------------------------------------------------------------------

Outcome ac1_rouge() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();

  const auto r1 = rouge_n("the cat ran home", "the cat sat", 1);
  o.require(close(r1.precision, 0.5) && close(r1.recall, 2.0 / 3.0) && close(r1.f1, 4.0 / 7.0),
            "R-1 hand example");
  const auto rl = rouge_l("a c b d", "a b c d");
  o.require(close(rl.precision, 0.75) && close(rl.recall, 0.75), "R-L a c b d");
  const auto rev = rouge_l("d c b a", "a b c d");
  o.require(close(rev.precision, 0.25) && close(rev.recall, 0.25), "R-L reversed");
  o.require(rouge_w("a b x d", "a b c d").f1 > rouge_w("a x b d", "a b c d").f1, "R-W run bonus");
  o.require(rouge_s("a b c", "a b c").f1 == 1.0, "R-S identity 3 tokens");
  o.require(rouge_s("c b a", "a b c").f1 == 0.0, "R-S reversed");

  std::mt19937_64 rng(2024);
  const std::vector<std::string> vocab = {"the", "cat", "sat", "on", "a", "mat", "dog", "ran",
                                          "home", "fast", "slow", "red"};
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 25);
  auto random_text = [&] {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + vocab[word(rng)];
    return s;
  };

  const auto all = parse_metrics("r1,r2,r3,r4,rl,rw,rs,rsu");
  std::size_t range_bad = 0, identity_bad = 0, order_bad = 0, oracle_bad = 0;
  std::string first_order_case;
  for (int i = 0; i < 1000; ++i) {
    const std::string cand = random_text();
    const std::string ref = random_text();
    for (const auto& s : score_metrics(cand, ref, all)) {
      for (double v : {s.precision, s.recall, s.f1}) {
        if (!(v >= 0.0 && v <= 1.0)) ++range_bad;
      }
    }
    for (const auto& s : score_metrics(ref, ref, all)) {
      if (!s.degenerate && s.f1 != 1.0) ++identity_bad;
    }
    double prev = 2.0;
    bool ordered = true;
    const auto ct = oracle::words(cand), rt = oracle::words(ref);
    for (std::size_t n = 1; n <= 4; ++n) {
      const double r = rouge_n(cand, ref, n).recall;
      if (rt.size() >= n) {
        const double want = static_cast<double>(oracle::clipped_ngram_matches(ct, rt, n)) /
                            static_cast<double>(rt.size() - n + 1);
        if (!close(r, want)) ++oracle_bad;
      }
      if (r > prev + 1e-12) ordered = false;
      prev = r;
    }
    if (!ordered) {
      if (first_order_case.empty()) first_order_case = "cand='" + cand + "' ref='" + ref + "'";
      ++order_bad;
    }
  }
  o.require(range_bad == 0, std::to_string(range_bad) + " scores outside [0,1]");
  o.require(identity_bad == 0, std::to_string(identity_bad) + " identity scores != 1");
  o.require(oracle_bad == 0, std::to_string(oracle_bad) + " recalls disagree with clipped-count oracle");
  o.require(order_bad == 0, std::to_string(order_bad) +
                                "/1000 pairs violate R-1>=R-2>=R-3>=R-4 recall (clipped recall "
                                "is not monotone in n; first: " + first_order_case + ")");
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "runtime " + fmt("%.2f s", secs));
  o.note("hand examples, oracle and invariants over 1000 pairs, " + fmt("%.2f s", secs));
  return o;
}

// ---- AC2 -------------------------------------------------------------------

Outcome ac2_counts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const BowCorpus corpus = synthetic::uniform_corpus(50, 200, 80, 17);
  LdaConfig cfg = LdaConfig::with_topics(8);
  cfg.seed = 3;
  GibbsSampler sampler(corpus, 200, cfg);
  std::size_t mismatches = 0;
  o.require(oracle::tables_match(oracle::recount(sampler.model()), sampler.model()), "initial state");
  for (int s = 0; s < 100; ++s) {
    sampler.sweep();
    if (!oracle::tables_match(oracle::recount(sampler.model()), sampler.model())) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " sweeps with mismatched tables");
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime " + fmt("%.2f s", secs));
  o.note("100 sweeps, 4 tables recounted each, " + fmt("%.2f s", secs));
  return o;
}

// ---- AC3 -------------------------------------------------------------------

// Greedy matching of estimated to true topics by smallest L1; est -> truth.
std::vector<std::size_t> greedy_match(const std::vector<std::vector<double>>& est,
                                      const std::vector<std::vector<double>>& truth) {
  struct Pair {
    double d;
    std::size_t e, t;
  };
  std::vector<Pair> pairs;
  for (std::size_t e = 0; e < est.size(); ++e) {
    for (std::size_t t = 0; t < truth.size(); ++t) {
      double d = 0.0;
      for (std::size_t w = 0; w < est[e].size(); ++w) d += std::abs(est[e][w] - truth[t][w]);
      pairs.push_back({d, e, t});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });
  std::vector<std::size_t> map(est.size(), SIZE_MAX);
  std::vector<bool> used(truth.size(), false);
  for (const auto& p : pairs) {
    if (map[p.e] != SIZE_MAX || used[p.t]) continue;
    map[p.e] = p.t;
    used[p.t] = true;
  }
  return map;
}

Outcome ac3_recovery() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto data = synthetic::disjoint_topics(3, 20, 200, 50, 0.5, 11);
  LdaConfig cfg = LdaConfig::with_topics(3);
  cfg.alpha = 0.5;
  cfg.sweeps = 500;
  cfg.seed = 5;
  const LdaModel model = train(data.corpus, data.vocab_size, cfg);

  std::vector<std::vector<double>> est;
  for (std::size_t k = 0; k < 3; ++k) est.push_back(model.phi_row(k));
  const double l1 = oracle::greedy_matched_l1(est, data.phi);
  o.require(l1 < 0.2, "mean L1 " + fmt("%.4f", l1));
  const auto map = greedy_match(est, data.phi);

  const auto held = synthetic::single_topic_sentences(data, 300, 8, 99);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < held.size(); ++i) {
    const auto dom = dominant_topic(held[i].ids, model, 50, derive_seed(1, "ac3", i));
    if (!dom.unassignable && map[dom.topic] == held[i].topic) ++correct;
  }
  const double acc = static_cast<double>(correct) / static_cast<double>(held.size());
  o.require(acc >= 0.95, "held-out accuracy " + fmt("%.3f", acc));
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime " + fmt("%.2f s", secs));
  o.note("L1 " + fmt("%.4f", l1) + ", accuracy " + fmt("%.3f", acc) + ", " + fmt("%.2f s", secs));
  return o;
}

// ---- AC4 -------------------------------------------------------------------

Outcome ac4_perplexity() {
  Outcome o;
  const std::size_t v = 37;
  LdaConfig cfg = LdaConfig::with_topics(4);
  const std::vector<std::vector<std::int32_t>> flat(4, std::vector<std::int32_t>(v, 3));
  const LdaModel uniform = LdaModel::from_topic_word_counts(cfg, v, flat);
  const BowCorpus probe = synthetic::uniform_corpus(10, v, 30, 4);
  const double pu = perplexity(uniform, probe, 20, 1);
  o.require(std::abs(pu - static_cast<double>(v)) <= 1e-6 * static_cast<double>(v),
            "uniform perplexity " + fmt("%.9f", pu));

  std::string trend;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto data = synthetic::disjoint_topics(4, 25, 240, 60, 0.3, 100 + seed);
    BowCorpus train_set, held;
    for (std::size_t d = 0; d < data.corpus.size(); ++d) {
      (d % 6 == 0 ? held : train_set).docs.push_back(data.corpus.docs[d]);
    }
    LdaConfig c = LdaConfig::with_topics(4);
    c.seed = seed;
    c.sweeps = 1;
    c.burn_in = 0;
    const double one = perplexity(train(train_set, data.vocab_size, c), held, 20, seed);
    c.sweeps = 200;
    const double many = perplexity(train(train_set, data.vocab_size, c), held, 20, seed);
    o.require(many < one, "seed " + std::to_string(seed) + ": trained " + fmt("%.2f", many) +
                              " >= 1-sweep " + fmt("%.2f", one));
    trend += (trend.empty() ? "" : ", ") + fmt("%.1f", one) + "->" + fmt("%.1f", many);
  }
  o.note("uniform " + fmt("%.9f", pu) + " (V=37); held-out " + trend);
  return o;
}

// ---- AC5 -------------------------------------------------------------------

Outcome ac5_textrank() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TextRankConfig cfg;
  cfg.tol = 1e-10;
  cfg.max_iter = 10000;
  double worst = 0.0;
  std::size_t top_changed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    SimilarityMatrix s{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double x = u(rng) < 0.2 ? 0.0 : u(rng);
        s(i, j) = s(j, i) = x;
      }
    }
    const auto power = textrank_scores(s, cfg);
    const auto direct = oracle::pagerank_direct(s, cfg.damping);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(power.scores[i] - direct[i]));

    SimilarityMatrix scaled = s;
    for (double& x : scaled.values) x *= 10.0;
    if (top_indices(power.scores, 1) != top_indices(textrank_scores(scaled, cfg).scores, 1)) {
      ++top_changed;
    }
  }
  o.require(worst <= 1e-6, "max L-inf " + fmt("%.3g", worst));
  o.require(top_changed == 0, std::to_string(top_changed) + " top-1 changes under scaling");

  std::size_t uniform_bad = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    SimilarityMatrix s{n, std::vector<double>(n * n, 1.0)};
    for (std::size_t i = 0; i < n; ++i) s(i, i) = 0.0;
    for (double x : textrank_scores(s, TextRankConfig{}).scores) {
      if (std::abs(x - 1.0 / static_cast<double>(n)) > 1e-12) ++uniform_bad;
    }
  }
  o.require(uniform_bad == 0, std::to_string(uniform_bad) + " uniform-graph scores != 1/n");
  o.note("max L-inf " + fmt("%.3g", worst) + " over 100 matrices");
  return o;
}

// ---- AC6 -------------------------------------------------------------------

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Outcome ac6_cleaning() {
  Outcome o;
  const fs::path data = TOPICSUM_TEST_DATA;
  const auto article = read_file(data / "comb_long_hair_article.txt");
  const auto expected = split_ws(read_file(data / "comb_long_hair_cleaned.txt"));
  const Cleaner cleaner;
  const auto got = cleaner.clean_document("comb_long_hair", article).tokens;
  const double j = oracle::multiset_jaccard(got, expected);
  o.require(j >= 0.7, "Jaccard " + fmt("%.3f", j));
  o.note("Jaccard " + fmt("%.3f", j) + " (" + std::to_string(got.size()) + " vs " +
         std::to_string(expected.size()) + " tokens)");
  return o;
}

// ---- AC7 to AC9 ------------------------------------------------------------

struct SampleRuns {
  TempDir dir;
  fs::path corpus;
  RunReport first, second;
  double first_seconds = 0.0;
  std::string error;
};

SampleRuns& sample_runs() {
  static SampleRuns r;
  static bool ran = false;
  if (!ran) {
    ran = true;
    r.corpus = r.dir / "sample.csv";
    synth::WikiHowOptions opt;
    opt.articles = 499;  // plus the long-hair article
    synth::write_wikihow_csv(r.corpus, opt);
    try {
      PipelineConfig c;
      c.corpus = r.corpus;
      c.output = r.dir / "run_a";
      c.workers = 1;
      const auto t0 = std::chrono::steady_clock::now();
      r.first = Pipeline(c).run_all();
      r.first_seconds = seconds_since(t0);
      c.output = r.dir / "run_b";
      c.workers = 4;
      r.second = Pipeline(c).run_all();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  }
  return r;
}

Outcome ac7_extractive() {
  Outcome o;
  auto& runs = sample_runs();
  if (!runs.error.empty()) {
    o.require(false, "pipeline failed: " + runs.error);
    return o;
  }
  const fs::path run = runs.dir / "run_a";
  std::size_t docs = 0, sentences = 0, not_member = 0, out_of_order = 0;
  for (const auto& e : fs::directory_iterator(run / "split/articles")) {
    const std::string id = e.path().stem().string();
    const fs::path summary_path = run / "summaries" / (id + ".txt");
    if (!fs::exists(summary_path)) continue;
    ++docs;
    const std::string article = read_file(e.path());
    const auto group = segment_sentences(article, id);
    std::vector<std::string> members;
    for (const auto& s : group.sentences) members.push_back(s.text);

    std::istringstream lines(read_file(summary_path));
    long last = -1;
    std::size_t search_from = 0;
    for (std::string line; std::getline(lines, line);) {
      if (line.empty()) continue;
      ++sentences;
      long idx = -1;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] == line && static_cast<long>(i) > last) {
          idx = static_cast<long>(i);
          break;
        }
      }
      const auto at = article.find(line, search_from);
      if (at == std::string::npos) {
        ++(std::find(members.begin(), members.end(), line) == members.end() ? not_member
                                                                             : out_of_order);
        continue;
      }
      if (idx < 0) {
        ++out_of_order;
        continue;
      }
      last = idx;
      search_from = at + line.size();
    }
  }
  o.require(docs >= 490, "only " + std::to_string(docs) + " summaries");
  o.require(not_member == 0, std::to_string(not_member) + " sentences not in source");
  o.require(out_of_order == 0, std::to_string(out_of_order) + " sentences out of document order");
  o.note(std::to_string(sentences) + " sentences over " + std::to_string(docs) +
         " summaries, all verbatim and ordered");
  return o;
}

double r1_f1(const RunReport& r, const std::string& label) {
  for (const auto& s : r.systems) {
    if (s.label == label) return s.metrics.at("r1").f1 * 100.0;
  }
  throw std::runtime_error("missing system " + label);
}

Outcome ac8_baselines() {
  Outcome o;
  auto& runs = sample_runs();
  if (!runs.error.empty()) {
    o.require(false, "pipeline failed: " + runs.error);
    return o;
  }
  const double sys = r1_f1(runs.first, "LDA+TextRank (this run)");
  const double rnd = r1_f1(runs.first, "Random-3 (this run)");
  const double lead = r1_f1(runs.first, "Lead-3 (this run)");
  o.require(sys >= rnd + 3.0, "R-1 F1 " + fmt("%.2f", sys) + " vs random " + fmt("%.2f", rnd));
  o.require(runs.first_seconds < 1800.0, "runtime " + fmt("%.1f s", runs.first_seconds));
  o.note("R-1 F1 " + fmt("%.2f", sys) + " vs random-3 " + fmt("%.2f", rnd) + " (lead-3 " +
         fmt("%.2f", lead) + "), " + std::to_string(runs.first.records) + " docs in " +
         fmt("%.1f s", runs.first_seconds));
  return o;
}

Outcome ac9_determinism() {
  Outcome o;
  auto& runs = sample_runs();
  if (!runs.error.empty()) {
    o.require(false, "pipeline failed: " + runs.error);
    return o;
  }
  const fs::path a = runs.dir / "run_a", b = runs.dir / "run_b";
  std::size_t compared = 0, differ = 0;
  std::string first_diff;
  auto compare = [&](const fs::path& rel) {
    ++compared;
    const bool same = fs::exists(b / rel) && read_file(a / rel) == read_file(b / rel);
    if (!same) {
      ++differ;
      if (first_diff.empty()) first_diff = rel.string();
    }
  };
  for (const char* dir : {"summaries", "baselines/lead3", "baselines/random3", "eval"}) {
    for (const auto& e : fs::recursive_directory_iterator(a / dir)) {
      if (e.is_regular_file()) compare(fs::relative(e.path(), a));
    }
  }
  for (const char* f : {"report.txt", "report.csv", "run_report.json", "model/model.lda"}) {
    compare(f);
  }
  o.require(differ == 0, std::to_string(differ) + " files differ (first: " + first_diff + ")");
  o.require(runs.first.to_json() == runs.second.to_json(), "in-memory reports differ");
  o.note(std::to_string(compared) + " files byte-identical between 1 and 4 workers");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1_rouge},     {"AC2", ac2_counts},      {"AC3", ac3_recovery},
      {"AC4", ac4_perplexity}, {"AC5", ac5_textrank},   {"AC6", ac6_cleaning},
      {"AC7", ac7_extractive}, {"AC8", ac8_baselines},  {"AC9", ac9_determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    std::printf("%s %s  %s\n", name, out.pass ? "PASS" : "FAIL", out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
