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

#include "topicsum/config.hpp"

#include <charconv>

#include "topicsum/error.hpp"
#include "topicsum/io.hpp"

namespace topicsum {
namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("bad boolean for " + std::string(key) + ": '" + std::string(v) + "'");
}

// Shortest text that parses back to the same double.
std::string num(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

void PipelineConfig::validate() const {
  lda.validate();
  textrank.validate();
  if (cleaning.phrase_min_count < 1) throw ConfigError("cleaning.phrase_min_count must be >= 1");
  if (!(cleaning.phrase_threshold > 0)) throw ConfigError("cleaning.phrase_threshold must be > 0");
  if (!(cleaning.filter.no_above > 0 && cleaning.filter.no_above <= 1)) {
    throw ConfigError("cleaning.no_above must lie in (0, 1]");
  }
  if (fold_sweeps < 1) throw ConfigError("lda.fold_sweeps must be >= 1");
  if (top_words < 2) throw ConfigError("lda.top_words must be >= 2");
  if (!(rouge.weight_exponent >= 1.0)) throw ConfigError("rouge.weight_exponent must be >= 1");
  if (metrics.empty()) throw ConfigError("rouge.metrics must name at least one metric");
  if (random_k < 1) throw ConfigError("baselines.random_k must be >= 1");
  if (workers < 1) throw ConfigError("run.workers must be >= 1");
  if (textrank.similarity_mode == SimilarityMode::kEmbedding && embeddings.empty()) {
    throw ConfigError("textrank.similarity = embedding needs paths.embeddings");
  }
}

void PipelineConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "paths.corpus") corpus = std::string(v);
  else if (key == "paths.output") output = std::string(v);
  else if (key == "paths.embeddings") embeddings = std::string(v);
  else if (key == "ingest.limit") limit = parse_number<std::size_t>(key, v);
  else if (key == "cleaning.phrase_min_count") cleaning.phrase_min_count = parse_number<std::uint64_t>(key, v);
  else if (key == "cleaning.phrase_threshold") cleaning.phrase_threshold = parse_number<double>(key, v);
  else if (key == "cleaning.phrase_stages") cleaning.phrase_stages = parse_number<std::size_t>(key, v);
  else if (key == "cleaning.no_below") cleaning.filter.no_below = parse_number<std::uint32_t>(key, v);
  else if (key == "cleaning.no_above") cleaning.filter.no_above = parse_number<double>(key, v);
  else if (key == "lda.topics") {
    lda.num_topics = parse_number<int>(key, v);
    if (lda.num_topics < 1) throw ConfigError("lda.topics must be >= 1");
    if (!alpha_explicit_) lda.alpha = 50.0 / lda.num_topics;
  } else if (key == "lda.alpha") {
    lda.alpha = parse_number<double>(key, v);
    alpha_explicit_ = true;
  } else if (key == "lda.beta") lda.beta = parse_number<double>(key, v);
  else if (key == "lda.sweeps") lda.sweeps = parse_number<int>(key, v);
  else if (key == "lda.burn_in") lda.burn_in = parse_number<int>(key, v);
  else if (key == "lda.fold_sweeps") fold_sweeps = parse_number<int>(key, v);
  else if (key == "lda.top_words") top_words = parse_number<std::size_t>(key, v);
  else if (key == "textrank.damping") textrank.damping = parse_number<double>(key, v);
  else if (key == "textrank.tol") textrank.tol = parse_number<double>(key, v);
  else if (key == "textrank.max_iter") textrank.max_iter = parse_number<int>(key, v);
  else if (key == "textrank.top_n") textrank.top_n = parse_number<std::size_t>(key, v);
  else if (key == "textrank.min_cluster_sentences") textrank.min_cluster_sentences = parse_number<std::size_t>(key, v);
  else if (key == "textrank.similarity") textrank.similarity_mode = parse_similarity_mode(v);
  else if (key == "rouge.metrics") metrics = parse_metrics(v);
  else if (key == "rouge.lowercase") rouge.tokenization.lowercase = parse_bool(key, v);
  else if (key == "rouge.stem") rouge.tokenization.stem = parse_bool(key, v);
  else if (key == "rouge.weight_exponent") rouge.weight_exponent = parse_number<double>(key, v);
  else if (key == "rouge.max_skip") {
    if (v == "none" || v.empty()) rouge.max_skip.reset();
    else rouge.max_skip = parse_number<std::size_t>(key, v);
  } else if (key == "baselines.random_k") random_k = parse_number<std::size_t>(key, v);
  else if (key == "run.seed") seed = parse_number<std::uint64_t>(key, v);
  else if (key == "run.workers") workers = parse_number<std::size_t>(key, v);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string PipelineConfig::to_ini() const {
  std::string o;
  const auto line = [&o](std::string_view k, const std::string& v) {
    o += k;
    o += " = ";
    o += v;
    o += '\n';
  };
  o += "[paths]\n";
  line("corpus", corpus.string());
  line("output", output.string());
  line("embeddings", embeddings.string());
  o += "\n[ingest]\n";
  line("limit", std::to_string(limit));
  o += "\n[cleaning]\n";
  line("phrase_min_count", std::to_string(cleaning.phrase_min_count));
  line("phrase_threshold", num(cleaning.phrase_threshold));
  line("phrase_stages", std::to_string(cleaning.phrase_stages));
  line("no_below", std::to_string(cleaning.filter.no_below));
  line("no_above", num(cleaning.filter.no_above));
  o += "\n[lda]\n";
  line("topics", std::to_string(lda.num_topics));
  line("alpha", num(lda.alpha));
  line("beta", num(lda.beta));
  line("sweeps", std::to_string(lda.sweeps));
  line("burn_in", std::to_string(lda.burn_in));
  line("fold_sweeps", std::to_string(fold_sweeps));
  line("top_words", std::to_string(top_words));
  o += "\n[textrank]\n";
  line("damping", num(textrank.damping));
  line("tol", num(textrank.tol));
  line("max_iter", std::to_string(textrank.max_iter));
  line("top_n", std::to_string(textrank.top_n));
  line("min_cluster_sentences", std::to_string(textrank.min_cluster_sentences));
  line("similarity", std::string(similarity_mode_name(textrank.similarity_mode)));
  o += "\n[rouge]\n";
  line("metrics", format_metrics(metrics));
  line("lowercase", rouge.tokenization.lowercase ? "1" : "0");
  line("stem", rouge.tokenization.stem ? "1" : "0");
  line("weight_exponent", num(rouge.weight_exponent));
  line("max_skip", rouge.max_skip ? std::to_string(*rouge.max_skip) : "none");
  o += "\n[baselines]\n";
  line("random_k", std::to_string(random_k));
  o += "\n[run]\n";
  line("seed", std::to_string(seed));
  line("workers", std::to_string(workers));
  return o;
}

std::vector<std::pair<std::string, std::string>> parse_ini(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string section;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError("config line " + std::to_string(line_no) + ": bad section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (section.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": key outside a section");
    }
    out.emplace_back(section + "." + std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  PipelineConfig config;
  for (const auto& [key, value] : parse_ini(text)) config.set(key, value);
  return config;
}

}  // namespace topicsum
