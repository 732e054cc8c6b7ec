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

#include "wikihow_synth.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>
#include <vector>

#include "topicsum/cleaning.hpp"
#include "topicsum/io.hpp"
#include "topicsum/rng.hpp"

namespace topicsum::synth {
namespace {

using Words = std::vector<std::string>;

constexpr std::string_view kOnsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p",
                                        "r", "t", "v", "z", "br", "tr", "pl", "gr", "st"};
constexpr std::string_view kVowels[] = {"a", "e", "i", "o", "u"};

// Pseudo-words ending in a vowel, so suffix stripping leaves them alone.
Words make_vocabulary(Rng& rng, std::size_t count, std::set<std::string>& taken) {
  const WordSet& stop = default_stopwords();
  const Lemmatizer& lem = default_lemmatizer();
  Words out;
  while (out.size() < count) {
    std::string w;
    const std::size_t syllables = 2 + uniform_index(rng, 2);
    for (std::size_t s = 0; s < syllables; ++s) {
      w += kOnsets[uniform_index(rng, std::size(kOnsets))];
      w += kVowels[uniform_index(rng, std::size(kVowels))];
    }
    if (stop.contains(w) || lem.lemma(w) != w || !taken.insert(w).second) continue;
    out.push_back(std::move(w));
  }
  return out;
}

const Words& generic_words() {
  static const Words w = {"process", "result", "patience", "practice", "minute", "moment",
                          "friend",  "habit",  "routine",  "effort",   "mistake", "detail",
                          "step",    "method", "attention", "idea",    "beginner", "expert"};
  return w;
}

constexpr std::string_view kHeadings[] = {
    "Use the {0} to {1} your {2}.",
    "{0} the {1} before you add the {2}.",
    "Keep your {0} close to the {1} and the {2}.",
    "Choose a {0} that suits the {1} and {2}.",
    "Place the {0} on the {1} with a {2}.",
};

constexpr std::string_view kDetails[] = {
    "If the {0} feels loose, press the {1} gently against the {3}.",
    "Make sure the {0} stays near the {1} while you handle the {3}.",
    "Most people find that a {1} makes the {0} easier to manage.",
    "You can also rest the {1} beside the {0} for a {3}.",
    "Check the {0} again and move the {3} if the {1} slips.",
    "A small {3} helps the {1} hold the {0} in place.",
};

constexpr std::string_view kFillers[] = {
    "Take your time with this part of the {0}.",
    "Every {0} gets easier with {1}.",
    "Do not worry if the first {0} is not perfect.",
    "Ask a {0} for help if you need another pair of hands.",
    "This is a common {0} for a {1}.",
};

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string fill(std::string_view tmpl, const std::array<std::string, 4>& args) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '{' && i + 2 < tmpl.size() && tmpl[i + 2] == '}') {
      out += args[static_cast<std::size_t>(tmpl[i + 1] - '0')];
      i += 2;
    } else {
      out += tmpl[i];
    }
  }
  return capitalize(out);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform_index(rng, v.size())];
}

std::string csv_field(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string sample_article() {
  return "Before brushing long hair, you should check for major knots. If you use your brush "
         "through large knots, you can cause damage to the hair. Run your fingers downwards "
         "through your hair starting a few inches from the tips of the hair, and gradually work "
         "your way up the hair a few inches at a time. Work through the more manageable knots. "
         "If you encounter a knot you can't run your fingers through, don't force your fingers "
         "through the hair. If you've encountered a large knot that you can't get out using your "
         "fingers, use a product that will help ease out the knot. Apply the product to the knot "
         "according to the instructions on the label. For fine hair, use a spray. For medium "
         "thickness hair, try a lotion. For thick and coarse hair, or kinky hair, use a cream. "
         "After you have put the detangling product on the knot, use a wide toothed comb to comb "
         "at the knot. Be gentle, using small strokes to work at the knot. You should be able to "
         "get most of it out. If you don't have a wide toothed comb, you can also use a paddle "
         "brush. By this time, most of the knot should be untangled. Run your fingers through "
         "the spot where the knot was to check if there is any more of it left. Your fingers are "
         "great tools because you can feel your hair in a way that you can't when you are using "
         "a comb.";
}

std::string sample_summary() {
  return "Use your fingers to run through long hair.\nApply a detangling product.\nUse a wide "
         "toothed-comb on the knot.\nUse your fingers to finish untangling the knot.";
}

std::string wikihow_csv(const WikiHowOptions& options) {
  Rng rng(derive_seed(options.seed, "wikihow-synth"));
  std::set<std::string> taken;
  std::vector<Words> themes;
  for (std::size_t t = 0; t < options.themes; ++t) {
    themes.push_back(make_vocabulary(rng, options.words_per_theme, taken));
  }
  const Words titles = make_vocabulary(rng, options.articles + 1, taken);

  std::string csv = "headline,title,text\n";
  if (options.include_sample_article) {
    csv += csv_field(sample_summary()) + "," + csv_field("How to Comb Long Hair") + "," +
           csv_field(sample_article()) + "\n";
  }
  for (std::size_t a = 0; a < options.articles; ++a) {
    const std::size_t steps = 3 + uniform_index(rng, 3);
    std::vector<std::size_t> order(themes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = 0; i < steps && i < order.size(); ++i) {
      std::swap(order[i], order[i + uniform_index(rng, order.size() - i)]);
    }

    std::vector<std::string> headings;
    std::string text;
    const auto add = [&text](const std::string& sentence) {
      if (!text.empty()) text += ' ';
      text += sentence;
    };
    for (std::size_t s = 0; s < std::min(steps, order.size()); ++s) {
      const Words& theme = themes[order[s]];
      std::array<std::string, 4> key;
      for (auto& k : key) k = pick(rng, theme);
      const std::string heading = fill(kHeadings[uniform_index(rng, std::size(kHeadings))], key);
      headings.push_back(heading);
      add(heading);
      const std::size_t details = 2 + uniform_index(rng, 3);
      for (std::size_t d = 0; d < details; ++d) {
        std::array<std::string, 4> args = key;
        std::swap(args[0], args[uniform_index(rng, 3)]);
        args[3] = pick(rng, theme);
        add(fill(kDetails[uniform_index(rng, std::size(kDetails))], args));
      }
      if (uniform_index(rng, 2) == 0) {
        const std::array<std::string, 4> args = {pick(rng, generic_words()),
                                                 pick(rng, generic_words()), "", ""};
        add(fill(kFillers[uniform_index(rng, std::size(kFillers))], args));
      }
    }
    std::string headline;
    for (const auto& h : headings) headline += (headline.empty() ? "" : "\n") + h;
    const std::string title = "How to " + capitalize(titles[a]) + " " + capitalize(titles[a + 1]);
    csv += csv_field(headline) + "," + csv_field(title) + "," + csv_field(text) + "\n";
  }
  return csv;
}

void write_wikihow_csv(const std::filesystem::path& path, const WikiHowOptions& options) {
  write_file(path, wikihow_csv(options));
}

}  // namespace topicsum::synth
