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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <json.hpp>

#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/lda.hpp"

namespace topicsum {
namespace {

constexpr std::array<char, 8> kMagic = {'T', 'S', 'L', 'D', 'A', 'M', 'D', 'L'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  template <typename T>
  void put(T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    // Little-endian on disk regardless of host order.
    if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
    out_.append(reinterpret_cast<const char*>(buf), sizeof(T));
  }
  void raw(const char* p, std::size_t n) { out_.append(p, n); }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  template <typename T>
  T get() {
    if (pos_ + sizeof(T) > data_.size()) throw DataError("model file is truncated");
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, data_.data() + pos_, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
    pos_ += sizeof(T);
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
  }
  std::string_view raw(std::size_t n) {
    if (pos_ + n > data_.size()) throw DataError("model file is truncated");
    std::string_view v(data_.data() + pos_, n);
    pos_ += n;
    return v;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_model(const LdaModel& model, const std::filesystem::path& path) {
  const auto& c = model.config();
  Writer w;
  w.raw(kMagic.data(), kMagic.size());
  w.put<std::uint32_t>(kVersion);
  w.put<std::int32_t>(c.num_topics);
  w.put<double>(c.alpha);
  w.put<double>(c.beta);
  w.put<std::int32_t>(c.sweeps);
  w.put<std::int32_t>(c.burn_in);
  w.put<std::uint64_t>(c.seed);
  w.put<std::uint64_t>(model.vocab_size());
  w.put<std::uint64_t>(model.dictionary_fingerprint());
  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    for (std::size_t v = 0; v < model.vocab_size(); ++v) {
      w.put<std::int32_t>(model.topic_word(k, static_cast<TokenId>(v)));
    }
  }
  for (auto n : model.topic_totals()) w.put<std::int32_t>(n);
  write_file(path, w.str());
}

LdaModel load_model(const std::filesystem::path& path, std::uint64_t expected_fingerprint) {
  Reader r(read_file(path));
  if (r.raw(kMagic.size()) != std::string_view(kMagic.data(), kMagic.size())) {
    throw DataError("not a topicsum model file: " + path.string());
  }
  if (const auto version = r.get<std::uint32_t>(); version != kVersion) {
    throw DataError("unsupported model version " + std::to_string(version));
  }
  LdaConfig c;
  c.num_topics = r.get<std::int32_t>();
  c.alpha = r.get<double>();
  c.beta = r.get<double>();
  c.sweeps = r.get<std::int32_t>();
  c.burn_in = r.get<std::int32_t>();
  c.seed = r.get<std::uint64_t>();
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw DataError(std::string("model file has an invalid config: ") + e.what());
  }
  const auto vocab = r.get<std::uint64_t>();
  const auto fingerprint = r.get<std::uint64_t>();
  if (fingerprint != expected_fingerprint) {
    throw DataError("model was trained against a different dictionary");
  }
  const auto k = static_cast<std::size_t>(c.num_topics);
  if (vocab == 0 || vocab > (std::uint64_t{1} << 31) / k) throw DataError("bad vocabulary size");

  LdaModel m;
  m.init_tables(c, static_cast<std::size_t>(vocab), 0);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t v = 0; v < vocab; ++v) {
      const auto n = r.get<std::int32_t>();
      if (n < 0) throw DataError("negative count in model file");
      m.word_topic_[v * k + t] = n;
      m.topic_total_[t] += n;
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    if (r.get<std::int32_t>() != m.topic_total_[t]) {
      throw DataError("model file topic totals do not match its counts");
    }
  }
  if (!r.done()) throw DataError("trailing bytes in model file");
  m.dictionary_fingerprint_ = fingerprint;
  m.refresh_canonical_order();
  return m;
}

std::string TopicReport::to_json() const {
  nlohmann::ordered_json j;
  j["perplexity"] = perplexity;
  j["mean_coherence"] = mean_coherence;
  j["degenerate_pairs"] = degenerate_pairs;
  auto& arr = j["topics"] = nlohmann::ordered_json::array();
  for (const auto& t : topics) {
    nlohmann::ordered_json jt;
    jt["id"] = t.id;
    jt["coherence"] = t.coherence;
    auto& words = jt["top_words"] = nlohmann::ordered_json::array();
    for (const auto& [word, weight] : t.top_words) words.push_back({{"word", word}, {"phi", weight}});
    arr.push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

TopicReport build_topic_report(const LdaModel& model, const TokenDictionary& dict,
                               const BowCorpus& corpus, const BowCorpus& held_out,
                               std::size_t top_m, int fold_sweeps, std::uint64_t seed) {
  if (dict.size() != model.vocab_size()) throw DataError("dictionary does not match model");
  TopicReport report;
  const CoherenceResult coherence = umass_coherence(model, corpus, top_m);
  report.degenerate_pairs = coherence.degenerate_pairs;
  double sum = 0.0;
  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    TopicReport::Topic t;
    t.id = k;
    t.coherence = coherence.per_topic[k];
    for (TokenId w : top_words(model, k, top_m)) t.top_words.emplace_back(dict.token(w), model.phi(k, w));
    sum += t.coherence;
    report.topics.push_back(std::move(t));
  }
  report.mean_coherence = sum / static_cast<double>(model.num_topics());
  report.perplexity = held_out.docs.empty() ? std::nan("") : perplexity(model, held_out, fold_sweeps, seed);
  return report;
}

}  // namespace topicsum
