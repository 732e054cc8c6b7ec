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

#include "topicsum/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <spdlog/spdlog.h>
#include <thread>

#include "topicsum/clustering.hpp"
#include "topicsum/dataset.hpp"
#include "topicsum/io.hpp"
#include "topicsum/lda.hpp"
#include "topicsum/rng.hpp"

namespace topicsum {
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSystems[][2] = {
    {"lda_textrank", "LDA+TextRank (this run)"},
    {"lead3", "Lead-3 (this run)"},
    {"random3", "Random-3 (this run)"},
};

bool is_heldout(std::string_view doc_id) { return fnv1a64(doc_id) % 10 == 0; }

std::string join_tokens(const TokenList& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// "key<TAB>value..." lines, preserving order.
std::vector<std::pair<std::string, std::string>> read_tsv(const fs::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string text = read_file(path);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    out.emplace_back(std::string(line.substr(0, tab)),
                     tab == std::string_view::npos ? std::string() : std::string(line.substr(tab + 1)));
  }
  return out;
}

nlohmann::json read_json(const fs::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kIngest: return "ingest";
    case Stage::kClean: return "clean";
    case Stage::kTrain: return "train";
    case Stage::kSummarize: return "summarize";
    case Stage::kEvaluate: return "evaluate";
    case Stage::kReport: return "report";
  }
  return "?";
}

StageError::StageError(Stage stage, const std::string& what)
    : Error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) { config_.validate(); }

template <typename F>
void Pipeline::parallel_for(std::size_t n, F&& body) const {
  const std::size_t workers = std::min(config_.workers, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool Pipeline::stage_complete(Stage stage) const {
  const auto all_exist = [this](std::initializer_list<std::string_view> files) {
    return std::all_of(files.begin(), files.end(), [this](auto f) { return fs::exists(path(f)); });
  };
  switch (stage) {
    case Stage::kIngest:
      return all_exist({"manifest.json", "split/index.tsv"});
    case Stage::kClean:
      return all_exist({"clean/phrases.tsv", "clean/dictionary.tsv", "clean/train.txt",
                        "clean/heldout.txt", "clean/stats.json"});
    case Stage::kTrain:
      return all_exist({"model/model.lda", "model/topics.json"});
    case Stage::kSummarize: {
      if (!fs::exists(path("summaries/index.tsv"))) return false;
      for (const auto& [id, status] : read_tsv(path("summaries/index.tsv"))) {
        if (status != "ok") continue;
        const std::string file = id + ".txt";
        if (!fs::exists(path("summaries") / file) || !fs::exists(path("baselines/lead3") / file) ||
            !fs::exists(path("baselines/random3") / file)) {
          return false;
        }
      }
      return true;
    }
    case Stage::kEvaluate:
      return all_exist({"eval/summary.json"});
    case Stage::kReport:
      return all_exist({"run_report.json", "report.txt", "report.csv"});
  }
  return false;
}

void Pipeline::run_stage(Stage stage) {
  const auto start = std::chrono::steady_clock::now();
  spdlog::info("stage {} started", stage_name(stage));
  try {
    switch (stage) {
      case Stage::kIngest: ingest(); break;
      case Stage::kClean: clean(); break;
      case Stage::kTrain: train(); break;
      case Stage::kSummarize: summarize(); break;
      case Stage::kEvaluate: evaluate(); break;
      case Stage::kReport: report(); break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  timings_[std::string(stage_name(stage))] = took.count();
  spdlog::info("stage {} finished in {:.2f}s", stage_name(stage), took.count());
}

RunReport Pipeline::run_all() {
  constexpr Stage kOrder[] = {Stage::kIngest, Stage::kClean, Stage::kTrain,
                              Stage::kSummarize, Stage::kEvaluate};
  bool rerun = false;
  for (Stage s : kOrder) {
    rerun = rerun || !stage_complete(s);
    if (rerun) {
      run_stage(s);
    } else {
      spdlog::info("stage {} already complete, skipping", stage_name(s));
    }
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    RunReport r = report();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    timings_["report"] = took.count();
    r.timings_seconds = timings_;
    write_file(path("timings.json"), r.timings_json());
    return r;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(Stage::kReport, e.what());
  }
}

void Pipeline::ingest() {
  if (config_.corpus.empty()) throw ConfigError("paths.corpus is not set");
  const auto limit = config_.limit ? std::optional<std::size_t>(config_.limit) : std::nullopt;
  IngestResult result = ingest_csv(config_.corpus, limit);
  fs::remove_all(path("split"));
  write_split(result.pairs, path("split"));
  write_file(path("manifest.json"), result.manifest.to_json());
  spdlog::info("ingested {} articles, skipped {}", result.manifest.record_count,
               result.manifest.skipped_count);
}

void Pipeline::clean() {
  const auto pairs = read_split(path("split"));
  if (pairs.empty()) throw EmptyCorpusError("split is empty");
  const WordSet& stopwords = default_stopwords();

  std::vector<TokenList> raw(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    raw[i] = strip_and_tokenize(pairs[i].article, stopwords);
  });
  const PhraseCascade phrases =
      learn_phrase_cascade(raw, config_.cleaning.phrase_min_count,
                           config_.cleaning.phrase_threshold, config_.cleaning.phrase_stages);
  raw.clear();

  const Cleaner cleaner(stopwords, phrases);
  std::vector<CleanedDoc> cleaned(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    cleaned[i] = cleaner.clean_document(pairs[i].id, pairs[i].article);
  });

  const TokenDictionary dict = build_dictionary(cleaned, config_.cleaning.filter);

  std::vector<CleanedDoc> train_docs, heldout_docs;
  std::string split_tsv, cleaned_tsv;
  for (const auto& d : cleaned) {
    (is_heldout(d.doc_id) ? heldout_docs : train_docs).push_back(d);
  }
  if (train_docs.empty()) {
    spdlog::warn("every document hashed into the held-out slice; training on all of them");
    train_docs = std::move(heldout_docs);
    heldout_docs.clear();
  }
  for (const auto& d : train_docs) split_tsv += d.doc_id + "\ttrain\n";
  for (const auto& d : heldout_docs) split_tsv += d.doc_id + "\theldout\n";
  for (const auto& d : cleaned) cleaned_tsv += d.doc_id + "\t" + join_tokens(d.tokens) + "\n";

  const BowCorpus train_corpus = to_corpus(train_docs, dict);
  const BowCorpus heldout_corpus = to_corpus(heldout_docs, dict);

  write_file(path("clean/phrases.tsv"), phrases.serialize());
  write_file(path("clean/dictionary.tsv"), dict.serialize());
  write_file(path("clean/cleaned.tsv"), cleaned_tsv);
  write_file(path("clean/split.tsv"), split_tsv);
  write_file(path("clean/train.txt"), train_corpus.serialize());
  write_file(path("clean/heldout.txt"), heldout_corpus.serialize());
  nlohmann::ordered_json stats;
  stats["documents"] = cleaned.size();
  stats["train_documents"] = train_docs.size();
  stats["heldout_documents"] = heldout_docs.size();
  stats["vocabulary"] = dict.size();
  stats["train_tokens"] = train_corpus.total_tokens();
  stats["phrases"] = [&] {
    std::size_t n = 0;
    for (const auto& s : phrases.stages) n += s.size();
    return n;
  }();
  write_file(path("clean/stats.json"), stats.dump(2) + "\n");
  spdlog::info("vocabulary {} tokens, {} train / {} held-out documents", dict.size(),
               train_docs.size(), heldout_docs.size());
}

void Pipeline::train() {
  const TokenDictionary dict = TokenDictionary::parse(read_file(path("clean/dictionary.tsv")));
  const BowCorpus corpus = BowCorpus::parse(read_file(path("clean/train.txt")));
  const BowCorpus heldout = BowCorpus::parse(read_file(path("clean/heldout.txt")));
  LdaConfig lda = config_.lda;
  lda.seed = derive_seed(config_.seed, "lda");
  const int every = std::max(1, lda.sweeps / 10);
  const LdaModel model = topicsum::train(corpus, dict, lda, [every](const GibbsSampler& s) {
    if (s.sweeps_done() % every == 0) spdlog::info("sweep {}", s.sweeps_done());
  });
  save_model(model, path("model/model.lda"));
  const TopicReport topics =
      build_topic_report(model, dict, corpus, heldout, config_.top_words, config_.fold_sweeps,
                         derive_seed(config_.seed, "perplexity"));
  write_file(path("model/topics.json"), topics.to_json());
  spdlog::info("perplexity {:.2f}, mean coherence {:.3f}", topics.perplexity, topics.mean_coherence);
}

void Pipeline::summarize() {
  const auto pairs = read_split(path("split"));
  const TokenDictionary dict = TokenDictionary::parse(read_file(path("clean/dictionary.tsv")));
  const PhraseCascade phrases = PhraseCascade::parse(read_file(path("clean/phrases.tsv")));
  const LdaModel model = load_model(path("model/model.lda"), dict.fingerprint());
  const Cleaner cleaner(default_stopwords(), phrases);
  std::optional<EmbeddingTable> embeddings;
  if (config_.textrank.similarity_mode == SimilarityMode::kEmbedding) {
    embeddings = EmbeddingTable::load(config_.embeddings);
  }
  const InferenceContext infer{model, dict, cleaner, config_.fold_sweeps,
                               derive_seed(config_.seed, "fold-in")};
  const SummarizerContext ctx{dict, cleaner, embeddings ? &*embeddings : nullptr};
  const std::uint64_t random_seed = derive_seed(config_.seed, "random-baseline");

  for (const char* dir : {"summaries", "clusters", "provenance", "baselines"}) fs::remove_all(path(dir));
  ensure_directory(path("summaries"));

  std::vector<std::string> status(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& p = pairs[i];
    try {
      const SentenceGroup group = segment_sentences(p.article, p.id);
      const TopicClusterSet clusters = build_clusters(assign_sentences(group, infer), group);
      const ExtractiveSummary summary = assemble_summary(clusters, config_.textrank, ctx);
      write_file(path("summaries") / (p.id + ".txt"), summary.text());
      write_file(path("clusters") / (p.id + ".json"), clusters.to_json(model.num_topics()));
      write_file(path("provenance") / (p.id + ".json"), summary.provenance_json());
      write_file(path("baselines/lead3") / (p.id + ".txt"), lead3_baseline(group).text());
      write_file(path("baselines/random3") / (p.id + ".txt"),
                 random_baseline(group, config_.random_k, random_seed).text());
      status[i] = "ok";
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      spdlog::warn("skipping {}: {}", p.id, e.what());
      status[i] = std::string("skipped\t") + e.what();
    }
  });

  std::string index;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index += pairs[i].id + "\t" + status[i] + "\n";
    ok += status[i] == "ok";
  }
  write_file(path("summaries/index.tsv"), index);
  spdlog::info("summarized {} of {} documents", ok, pairs.size());
}

void Pipeline::evaluate() {
  const auto pairs = read_split(path("split"));
  StringMap<std::string> reference;
  for (const auto& p : pairs) reference.emplace(p.id, p.reference_summary);
  std::vector<std::string> ids;
  for (const auto& [id, status] : read_tsv(path("summaries/index.tsv"))) {
    if (status == "ok") ids.push_back(id);
  }
  if (ids.empty()) throw DataError("no summaries to evaluate");

  const fs::path dirs[] = {path("summaries"), path("baselines/lead3"), path("baselines/random3")};
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < std::size(kSystems); ++s) {
    std::vector<DocumentScores> docs(ids.size());
    parallel_for(ids.size(), [&](std::size_t i) {
      const auto it = reference.find(ids[i]);
      if (it == reference.end()) throw DataError("no reference summary for " + ids[i]);
      const std::string candidate = read_file(dirs[s] / (ids[i] + ".txt"));
      docs[i] = {ids[i], score_metrics(candidate, it->second, config_.metrics, config_.rouge)};
    });
    const std::string key(kSystems[s][0]);
    write_file(path("eval") / (key + ".csv"), per_document_csv(docs, config_.metrics));
    const std::string json = corpus_json(docs, config_.metrics, config_.rouge);
    write_file(path("eval") / (key + ".json"), json);
    auto j = nlohmann::ordered_json::parse(json);
    j["system"] = key;
    j["label"] = kSystems[s][1];
    summary.push_back(std::move(j));
  }
  write_file(path("eval/summary.json"), summary.dump(2) + "\n");
}

RunReport Pipeline::report() {
  RunReport r;
  const auto manifest = CorpusManifest::from_json(read_file(path("manifest.json")));
  r.records = manifest.record_count;
  r.ingest_skipped = manifest.skipped_count;
  const auto stats = read_json(path("clean/stats.json"));
  r.train_documents = stats.at("train_documents");
  r.heldout_documents = stats.at("heldout_documents");
  r.vocabulary = stats.at("vocabulary");
  const auto topics = read_json(path("model/topics.json"));
  r.perplexity = topics.at("perplexity").is_null() ? 0.0 : topics.at("perplexity").get<double>();
  r.mean_coherence = topics.at("mean_coherence");
  for (const auto& [id, status] : read_tsv(path("summaries/index.tsv"))) {
    (status == "ok" ? r.summarized : r.summarize_skipped) += 1;
  }
  r.scorer = config_.rouge.describe();
  for (const auto& js : read_json(path("eval/summary.json"))) {
    SystemScores s;
    s.label = js.at("label");
    s.documents = js.at("documents");
    for (auto m : config_.metrics) {
      const std::string name(metric_name(m));
      if (!js.contains(name)) continue;
      const auto& v = js.at(name);
      s.metrics[name] = {v.at("precision"), v.at("recall"), v.at("f1"), false};
    }
    r.systems.push_back(std::move(s));
  }

  std::vector<std::string> extras;
  for (auto m : config_.metrics) extras.emplace_back(metric_name(m));
  const ReportTable table = report_table(r, extras);
  write_file(path("report.txt"), table.text);
  write_file(path("report.csv"), table.csv);
  write_file(path("run_report.json"), r.to_json());
  return r;
}

}  // namespace topicsum
