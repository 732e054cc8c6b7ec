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

#include "topicsum/cleaning.hpp"

namespace topicsum {

Cleaner::Cleaner() : stopwords_(default_stopwords()), lemmatizer_(default_lemmatizer()) {}

Cleaner::Cleaner(WordSet stopwords, PhraseCascade phrases)
    : stopwords_(std::move(stopwords)),
      phrases_(std::move(phrases)),
      lemmatizer_(default_lemmatizer()) {}

TokenList Cleaner::tokenize(std::string_view text) const {
  return strip_and_tokenize(text, stopwords_);
}

TokenList Cleaner::clean(std::string_view text) const {
  TokenList tokens = lemmatize_filter(phrases_.apply(tokenize(text)), lemmatizer_);
  std::erase_if(tokens, [&](const std::string& t) { return stopwords_.contains(t); });
  return tokens;
}

CleanedDoc Cleaner::clean_document(std::string doc_id, std::string_view article) const {
  return {std::move(doc_id), clean(article)};
}

CleanedDoc clean_document(std::string_view article, const WordSet& stopwords,
                          const PhraseCascade& phrases, std::string doc_id) {
  const Cleaner cleaner(stopwords, phrases);
  return cleaner.clean_document(std::move(doc_id), article);
}

}  // namespace topicsum
