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

#include <string_view>

// Text resources compiled into the library from resources/*.
namespace topicsum::resources {

std::string_view stopwords();         // one word per line, '#' comments
std::string_view abbreviations();     // one abbreviation per line, no final '.'
std::string_view lemma_exceptions();  // form<TAB>lemma
std::string_view pos_lexicon();       // word<TAB>TAG

}  // namespace topicsum::resources
