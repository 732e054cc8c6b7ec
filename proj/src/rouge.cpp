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

#include "topicsum/rouge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <unordered_map>

#include "topicsum/cleaning.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"

namespace topicsum {
namespace {

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

// Token strings of both sides interned into one id space.
class Interner {
 public:
  int id(const std::string& s) {
    auto [it, inserted] = ids_.try_emplace(s, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  StringMap<int> ids_;
};

struct Tokenized {
  std::vector<std::vector<int>> sentences;
  std::vector<int> flat;
};

Tokenized tokenize_side(std::string_view text, const EvalTokenization& tok, Interner& interner) {
  Tokenized out;
  if (trim(text).empty()) return out;
  for (const auto& s : segment_sentences(text).sentences) {
    std::vector<int> ids;
    for (const auto& t : eval_tokens(s.text, tok)) ids.push_back(interner.id(t));
    if (ids.empty()) continue;
    out.flat.insert(out.flat.end(), ids.begin(), ids.end());
    out.sentences.push_back(std::move(ids));
  }
  return out;
}

struct Pair {
  Tokenized candidate, reference;
};

Pair tokenize_pair(std::string_view candidate, std::string_view reference,
                   const EvalTokenization& tok) {
  Interner interner;
  Pair p;
  p.candidate = tokenize_side(candidate, tok, interner);
  p.reference = tokenize_side(reference, tok, interner);
  return p;
}

RougeScore degenerate() {
  RougeScore s;
  s.degenerate = true;
  return s;
}

RougeScore ratio_score(double hits, double candidate_total, double reference_total) {
  return make_score(candidate_total > 0 ? hits / candidate_total : 0.0,
                    reference_total > 0 ? hits / reference_total : 0.0);
}

template <typename Key, typename Hash = std::hash<Key>>
std::size_t clipped_matches(const std::unordered_map<Key, std::size_t, Hash>& cand,
                            const std::unordered_map<Key, std::size_t, Hash>& ref) {
  std::size_t hits = 0;
  for (const auto& [key, count] : cand) {
    if (auto it = ref.find(key); it != ref.end()) hits += std::min(count, it->second);
  }
  return hits;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
using NgramCounts = std::unordered_map<std::vector<int>, std::size_t, VecHash>;

NgramCounts ngrams(const std::vector<int>& tokens, std::size_t n) {
  NgramCounts out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[std::vector<int>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                           tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

RougeScore rouge_n_tokens(const Pair& p, std::size_t n) {
  if (n == 0) throw ConfigError("ROUGE-N needs n >= 1");
  const auto& c = p.candidate.flat;
  const auto& r = p.reference.flat;
  if (r.size() < n) return degenerate();
  if (c.size() < n) return make_score(0.0, 0.0);
  const double hits = static_cast<double>(clipped_matches(ngrams(c, n), ngrams(r, n)));
  return ratio_score(hits, static_cast<double>(c.size() - n + 1),
                     static_cast<double>(r.size() - n + 1));
}

// Positions in `ref` covered by one LCS of (ref, cand).
std::vector<std::size_t> lcs_positions(const std::vector<int>& ref, const std::vector<int>& cand) {
  const std::size_t m = ref.size();
  const std::size_t n = cand.size();
  std::vector<std::uint32_t> t((m + 1) * (n + 1), 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      t[i * (n + 1) + j] = ref[i - 1] == cand[j - 1]
                               ? t[(i - 1) * (n + 1) + j - 1] + 1
                               : std::max(t[(i - 1) * (n + 1) + j], t[i * (n + 1) + j - 1]);
    }
  }
  std::vector<std::size_t> pos;
  std::size_t i = m, j = n;
  while (i > 0 && j > 0) {
    if (ref[i - 1] == cand[j - 1]) {
      pos.push_back(i - 1);
      --i;
      --j;
    } else if (t[(i - 1) * (n + 1) + j] >= t[i * (n + 1) + j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

RougeScore rouge_l_tokens(const Pair& p) {
  const auto& cand = p.candidate;
  const auto& ref = p.reference;
  if (cand.flat.empty() || ref.flat.empty()) return degenerate();
  std::unordered_map<int, std::size_t> cand_left, ref_left;
  for (int t : cand.flat) ++cand_left[t];
  for (int t : ref.flat) ++ref_left[t];
  std::size_t hits = 0;
  for (const auto& rs : ref.sentences) {
    std::vector<char> in_union(rs.size(), 0);
    for (const auto& cs : cand.sentences) {
      for (std::size_t pos : lcs_positions(rs, cs)) in_union[pos] = 1;
    }
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (!in_union[i]) continue;
      auto& cl = cand_left[rs[i]];
      auto& rl = ref_left[rs[i]];
      if (cl > 0 && rl > 0) {
        ++hits;
        --cl;
        --rl;
      }
    }
  }
  return ratio_score(static_cast<double>(hits), static_cast<double>(cand.flat.size()),
                     static_cast<double>(ref.flat.size()));
}

RougeScore rouge_w_tokens(const Pair& p, double w) {
  if (!(w >= 1.0)) throw ConfigError("ROUGE-W weight exponent must be >= 1");
  const auto& x = p.reference.flat;
  const auto& y = p.candidate.flat;
  if (x.empty() || y.empty()) return degenerate();
  const auto f = [w](double k) { return std::pow(k, w); };
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  // Score = closed + f(run): runs are scored whole, so a perfect match
  // yields exactly f(m).
  std::vector<double> score((m + 1) * (n + 1), 0.0), closed((m + 1) * (n + 1), 0.0);
  std::vector<std::uint32_t> run((m + 1) * (n + 1), 0);
  const auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t here = at(i, j);
      if (x[i - 1] == y[j - 1]) {
        const std::size_t diag = at(i - 1, j - 1);
        closed[here] = closed[diag];
        run[here] = run[diag] + 1;
        score[here] = closed[here] + f(run[here]);
      } else {
        score[here] = std::max(score[at(i - 1, j)], score[at(i, j - 1)]);
        closed[here] = score[here];
        run[here] = 0;
      }
    }
  }
  const double wlcs = score[at(m, n)];
  const auto finv = [w](double v) { return std::pow(v, 1.0 / w); };
  return make_score(std::min(1.0, finv(wlcs / f(static_cast<double>(n)))),
                    std::min(1.0, finv(wlcs / f(static_cast<double>(m)))));
}

using UnitCounts = std::unordered_map<std::uint64_t, std::size_t>;

UnitCounts skip_units(const std::vector<int>& t, std::optional<std::size_t> max_skip, bool unigrams) {
  UnitCounts out;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (unigrams) ++out[(static_cast<std::uint64_t>(t[i]) << 32) | 0xffffffffULL];
    std::size_t end = n;
    if (max_skip) end = std::min(n, i + *max_skip + 2);
    for (std::size_t j = i + 1; j < end; ++j) {
      ++out[(static_cast<std::uint64_t>(t[i]) << 32) | static_cast<std::uint32_t>(t[j])];
    }
  }
  return out;
}

std::size_t total(const UnitCounts& c) {
  std::size_t s = 0;
  for (const auto& [k, v] : c) s += v;
  return s;
}

RougeScore rouge_skip_tokens(const Pair& p, std::optional<std::size_t> max_skip, bool unigrams) {
  const std::size_t min_len = unigrams ? 1 : 2;
  if (p.candidate.flat.size() < min_len || p.reference.flat.size() < min_len) return degenerate();
  const UnitCounts c = skip_units(p.candidate.flat, max_skip, unigrams);
  const UnitCounts r = skip_units(p.reference.flat, max_skip, unigrams);
  return ratio_score(static_cast<double>(clipped_matches(c, r)), static_cast<double>(total(c)),
                     static_cast<double>(total(r)));
}

RougeScore score_one(const Pair& p, RougeMetric m, const RougeOptions& o) {
  switch (m) {
    case RougeMetric::kR1: return rouge_n_tokens(p, 1);
    case RougeMetric::kR2: return rouge_n_tokens(p, 2);
    case RougeMetric::kR3: return rouge_n_tokens(p, 3);
    case RougeMetric::kR4: return rouge_n_tokens(p, 4);
    case RougeMetric::kRL: return rouge_l_tokens(p);
    case RougeMetric::kRW: return rouge_w_tokens(p, o.weight_exponent);
    case RougeMetric::kRS: return rouge_skip_tokens(p, o.max_skip, false);
    case RougeMetric::kRSU: return rouge_skip_tokens(p, o.max_skip, true);
  }
  throw ConfigError("unknown metric");
}

constexpr RougeMetric kAllMetrics[] = {RougeMetric::kR1, RougeMetric::kR2, RougeMetric::kR3,
                                       RougeMetric::kR4, RougeMetric::kRL, RougeMetric::kRW,
                                       RougeMetric::kRS, RougeMetric::kRSU};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

RougeScore make_score(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  s.f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  return s;
}

std::vector<std::string> eval_tokens(std::string_view text, const EvalTokenization& tok) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) continue;
    std::string t(text.substr(start, i - start));
    if (tok.lowercase) {
      for (auto& c : t) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
    }
    if (tok.stem) t = default_lemmatizer().lemma(t);
    out.push_back(std::move(t));
  }
  return out;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n,
                   const EvalTokenization& tok) {
  return rouge_n_tokens(tokenize_pair(candidate, reference, tok), n);
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference,
                   const EvalTokenization& tok) {
  return rouge_l_tokens(tokenize_pair(candidate, reference, tok));
}

RougeScore rouge_w(std::string_view candidate, std::string_view reference, double weight_exponent,
                   const EvalTokenization& tok) {
  return rouge_w_tokens(tokenize_pair(candidate, reference, tok), weight_exponent);
}

RougeScore rouge_s(std::string_view candidate, std::string_view reference,
                   std::optional<std::size_t> max_skip, const EvalTokenization& tok) {
  return rouge_skip_tokens(tokenize_pair(candidate, reference, tok), max_skip, false);
}

RougeScore rouge_su(std::string_view candidate, std::string_view reference,
                    std::optional<std::size_t> max_skip, const EvalTokenization& tok) {
  return rouge_skip_tokens(tokenize_pair(candidate, reference, tok), max_skip, true);
}

RougeScore aggregate(std::span<const RougeScore> scores) {
  if (scores.empty()) throw DataError("cannot aggregate an empty score list");
  RougeScore mean;
  for (const auto& s : scores) {
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f1 += s.f1;
  }
  const double n = static_cast<double>(scores.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.f1 /= n;
  return mean;
}

std::string_view metric_name(RougeMetric m) {
  switch (m) {
    case RougeMetric::kR1: return "r1";
    case RougeMetric::kR2: return "r2";
    case RougeMetric::kR3: return "r3";
    case RougeMetric::kR4: return "r4";
    case RougeMetric::kRL: return "rl";
    case RougeMetric::kRW: return "rw";
    case RougeMetric::kRS: return "rs";
    case RougeMetric::kRSU: return "rsu";
  }
  return "?";
}

std::vector<RougeMetric> parse_metrics(std::string_view list) {
  std::vector<RougeMetric> out;
  while (true) {
    const auto comma = list.find(',');
    const auto name = trim(list.substr(0, comma));
    const auto it = std::find_if(std::begin(kAllMetrics), std::end(kAllMetrics),
                                 [&](RougeMetric m) { return metric_name(m) == name; });
    if (it == std::end(kAllMetrics)) throw ConfigError("unknown metric '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *it) != out.end()) {
      throw ConfigError("metric listed twice: " + std::string(name));
    }
    out.push_back(*it);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_metrics(std::span<const RougeMetric> metrics) {
  std::string out;
  for (auto m : metrics) {
    if (!out.empty()) out += ',';
    out += metric_name(m);
  }
  return out;
}

std::string RougeOptions::describe() const {
  char w[32];
  std::snprintf(w, sizeof w, "%g", weight_exponent);
  return std::string("lowercase=") + (tokenization.lowercase ? "1" : "0") +
         " stem=" + (tokenization.stem ? "1" : "0") + " w=" + w +
         " max_skip=" + (max_skip ? std::to_string(*max_skip) : "none");
}

std::vector<RougeScore> score_metrics(std::string_view candidate, std::string_view reference,
                                      std::span<const RougeMetric> metrics,
                                      const RougeOptions& options) {
  const Pair p = tokenize_pair(candidate, reference, options.tokenization);
  std::vector<RougeScore> out;
  out.reserve(metrics.size());
  for (auto m : metrics) out.push_back(score_one(p, m, options));
  return out;
}

std::string per_document_csv(std::span<const DocumentScores> docs,
                             std::span<const RougeMetric> metrics) {
  std::string out = "doc_id,metric,precision,recall,f1\n";
  for (const auto& d : docs) {
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      const auto& s = d.scores.at(i);
      out += d.doc_id + ',' + std::string(metric_name(metrics[i])) + ',' + fmt(s.precision) + ',' +
             fmt(s.recall) + ',' + fmt(s.f1) + '\n';
    }
  }
  return out;
}

std::string corpus_json(std::span<const DocumentScores> docs, std::span<const RougeMetric> metrics,
                        const RougeOptions& options) {
  nlohmann::ordered_json j;
  j["scorer"] = options.describe();
  j["documents"] = docs.size();
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    std::vector<RougeScore> column;
    std::size_t degenerate_docs = 0;
    for (const auto& d : docs) {
      column.push_back(d.scores.at(i));
      degenerate_docs += d.scores.at(i).degenerate;
    }
    const RougeScore mean = column.empty() ? RougeScore{} : aggregate(column);
    j[std::string(metric_name(metrics[i]))] = {{"precision", mean.precision},
                                               {"recall", mean.recall},
                                               {"f1", mean.f1},
                                               {"degenerate", degenerate_docs}};
  }
  return j.dump(2) + "\n";
}

}  // namespace topicsum
