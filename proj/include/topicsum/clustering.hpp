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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topicsum/cleaning.hpp"
#include "topicsum/lda.hpp"
#include "topicsum/sentences.hpp"
#include "topicsum/vocabulary.hpp"

namespace topicsum {

struct SentenceAssignment {
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::size_t topic_id = 0;
  bool flagged_unassignable = false;

  friend bool operator==(const SentenceAssignment&, const SentenceAssignment&) = default;
};

// Shared, read-only inputs for sentence-level inference.
struct InferenceContext {
  const LdaModel& model;
  const TokenDictionary& dictionary;
  const Cleaner& cleaner;
  int fold_sweeps = 50;
  std::uint64_t seed = 0;
};

// One assignment per sentence, in order. The fold-in seed of sentence i is
// derived from (seed, doc_id, i) so results do not depend on scheduling.
std::vector<SentenceAssignment> assign_sentences(const SentenceGroup& group,
                                                 const InferenceContext& ctx);

struct ClusterEntry {
  std::size_t sentence_index = 0;
  std::string text;

  friend bool operator==(const ClusterEntry&, const ClusterEntry&) = default;
};

struct TopicClusterSet {
  std::string doc_id;
  std::map<std::size_t, std::vector<ClusterEntry>> clusters;  // non-empty only
  std::vector<std::size_t> present_topics;

  std::size_t sentence_count() const;

  // {"0": [...], "1": [], ...}: every topic in [0, num_topics), empty ones
  // as empty lists.
  std::string to_json(std::size_t num_topics) const;
};

// Throws DataError when assignments are empty, repeat or miss a sentence
// index, or name another document.
TopicClusterSet build_clusters(const std::vector<SentenceAssignment>& assignments,
                               const SentenceGroup& group);

}  // namespace topicsum
