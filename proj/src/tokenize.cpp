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

#include <array>

#include "topicsum/cleaning.hpp"
#include "topicsum/resources.hpp"
#include "topicsum/utf8.hpp"

namespace topicsum {

namespace {

constexpr std::size_t kMinTokenLength = 2;

// U+00C0..U+00FF
constexpr std::array<std::string_view, 64> kLatin1 = {
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i",  "i", "i",
    "d", "n", "o", "o", "o", "o", "o",  "",  "o", "u", "u", "u", "u", "y",  "th", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i",  "i", "i",
    "d", "n", "o", "o", "o", "o", "o",  "",  "o", "u", "u", "u", "u", "y",  "th", "y"};

// U+0100..U+017F, one base letter per code point except the ligatures.
constexpr std::string_view kLatinExtA =
    "aaaaaaccccccccddddeeeeeeeeeegggggggghhhhiiiiiiiiii"
    "\x01\x01jjkkkllllllllllnnnnnnnnnoooooo\x02\x02rrrrrrssssssssttttttuuuuuuuuuuuuwwyyyzzzzzzs";

bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

}  // namespace

std::string_view fold_to_ascii(char32_t cp) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  if (cp < 0x80) return {};
  if (cp >= 0xC0 && cp <= 0xFF) return kLatin1[cp - 0xC0];
  if (cp >= 0x100 && cp <= 0x17F) {
    const char c = kLatinExtA[cp - 0x100];
    if (c == '\x01') return "ij";
    if (c == '\x02') return "oe";
    return kLetters.substr(static_cast<std::size_t>(c - 'a'), 1);
  }
  return {};
}

const WordSet& default_stopwords() {
  static const WordSet words = parse_word_list(resources::stopwords());
  return words;
}

TokenList strip_and_tokenize(std::string_view text, const WordSet& stopwords) {
  TokenList out;
  std::string current;
  const auto flush = [&] {
    if (current.size() >= kMinTokenLength && !stopwords.contains(current)) {
      out.push_back(current);
    }
    current.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::next(text, pos);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
        current.push_back(c);
      } else {
        flush();
      }
      continue;
    }
    if (is_combining_mark(cp)) continue;
    const auto folded = fold_to_ascii(cp);
    if (folded.empty()) {
      flush();
    } else {
      current.append(folded);
    }
  }
  flush();
  return out;
}

}  // namespace topicsum
