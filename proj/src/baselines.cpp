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

#include "topicsum/pipeline.hpp"
#include "topicsum/rng.hpp"

namespace topicsum {

ExtractiveSummary lead3_baseline(const SentenceGroup& group) {
  ExtractiveSummary s;
  s.doc_id = group.doc_id;
  const std::size_t n = std::min<std::size_t>(3, group.size());
  for (std::size_t i = 0; i < n; ++i) {
    s.sentences.push_back({group.sentences[i].index, group.sentences[i].text, 0, i, false});
  }
  return s;
}

ExtractiveSummary random_baseline(const SentenceGroup& group, std::size_t k, std::uint64_t seed) {
  const std::size_t n = group.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  k = std::min(k, n);
  Rng rng(derive_seed(seed, "random:" + group.doc_id));
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(rng, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  ExtractiveSummary s;
  s.doc_id = group.doc_id;
  for (std::size_t r = 0; r < k; ++r) {
    const auto& sent = group.sentences[idx[r]];
    s.sentences.push_back({sent.index, sent.text, 0, r, false});
  }
  return s;
}

}  // namespace topicsum
