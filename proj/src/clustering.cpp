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

#include "topicsum/clustering.hpp"

#include <json.hpp>

#include "topicsum/error.hpp"
#include "topicsum/rng.hpp"

namespace topicsum {

std::vector<SentenceAssignment> assign_sentences(const SentenceGroup& group,
                                                 const InferenceContext& ctx) {
  std::vector<SentenceAssignment> out;
  out.reserve(group.size());
  for (const auto& s : group.sentences) {
    const auto ids = to_ids(ctx.cleaner.clean(s.text), ctx.dictionary);
    const auto seed = derive_seed(ctx.seed, group.doc_id, s.index);
    const DominantTopic dom = dominant_topic(ids, ctx.model, ctx.fold_sweeps, seed);
    out.push_back({group.doc_id, s.index, dom.topic, dom.unassignable});
  }
  return out;
}

std::size_t TopicClusterSet::sentence_count() const {
  std::size_t n = 0;
  for (const auto& [topic, entries] : clusters) n += entries.size();
  return n;
}

std::string TopicClusterSet::to_json(std::size_t num_topics) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < num_topics; ++k) {
    auto& arr = j[std::to_string(k)] = nlohmann::ordered_json::array();
    if (auto it = clusters.find(k); it != clusters.end()) {
      for (const auto& e : it->second) arr.push_back(e.text);
    }
  }
  return j.dump(2) + "\n";
}

TopicClusterSet build_clusters(const std::vector<SentenceAssignment>& assignments,
                               const SentenceGroup& group) {
  if (assignments.empty()) throw DataError("no sentence assignments for " + group.doc_id);
  const std::size_t n = group.size();
  std::vector<const SentenceAssignment*> by_index(n, nullptr);
  for (const auto& a : assignments) {
    if (a.doc_id != group.doc_id) throw DataError("assignment for another document: " + a.doc_id);
    if (a.sentence_index >= n) throw DataError("assignment for a missing sentence index");
    if (by_index[a.sentence_index]) throw DataError("duplicate assignment for a sentence index");
    by_index[a.sentence_index] = &a;
  }
  TopicClusterSet set;
  set.doc_id = group.doc_id;
  for (std::size_t i = 0; i < n; ++i) {
    if (!by_index[i]) throw DataError("sentence " + std::to_string(i) + " has no assignment");
    const auto& s = group.sentences[i];
    set.clusters[by_index[i]->topic_id].push_back({s.index, s.text});
  }
  for (const auto& [topic, entries] : set.clusters) set.present_topics.push_back(topic);
  return set;
}

}  // namespace topicsum
