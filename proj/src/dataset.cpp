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

#include "topicsum/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "csv.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/utf8.hpp"

namespace topicsum {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxSlugLength = 80;

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string one_line(std::string_view s) {
  std::string out(s);
  std::replace_if(out.begin(), out.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                  ' ');
  return out;
}

}  // namespace

std::string CorpusManifest::to_json() const {
  nlohmann::ordered_json j;
  j["record_count"] = record_count;
  j["skipped_count"] = skipped_count;
  j["repaired_count"] = repaired_count;
  j["source_path"] = source_path;
  return j.dump(2) + "\n";
}

CorpusManifest CorpusManifest::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CorpusManifest m;
    m.record_count = j.at("record_count").get<std::size_t>();
    m.skipped_count = j.at("skipped_count").get<std::size_t>();
    m.repaired_count = j.value("repaired_count", std::size_t{0});
    m.source_path = j.at("source_path").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad manifest: ") + e.what());
  }
}

std::string slugify_title(std::string_view title) {
  std::string slug;
  bool pending_sep = false;
  for (unsigned char c : title) {
    if (std::isalnum(c) && c < 0x80) {
      if (pending_sep && !slug.empty()) slug.push_back('_');
      pending_sep = false;
      slug.push_back(static_cast<char>(std::tolower(c)));
    } else {
      pending_sep = true;
    }
  }
  constexpr std::string_view kHowTo = "how_to_";
  if (slug.size() > kHowTo.size() && slug.starts_with(kHowTo)) slug.erase(0, kHowTo.size());
  if (slug.size() > kMaxSlugLength) {
    slug.resize(kMaxSlugLength);
    while (!slug.empty() && slug.back() == '_') slug.pop_back();
  }
  if (slug.empty()) slug = "article";
  return slug;
}

WikiHowCsvReader::WikiHowCsvReader(const fs::path& path, std::optional<std::size_t> limit)
    : in_(path, std::ios::binary), limit_(limit) {
  if (!in_) throw IoError("cannot open corpus " + path.string());
  if (limit_ && *limit_ == 0) throw ConfigError("limit must be positive");
  manifest_.source_path = path.string();
  csv_ = std::make_unique<CsvReader>(in_);

  auto header = csv_->next();
  if (!header) throw EmptyCorpusError("corpus has no header row: " + path.string());
  std::optional<std::size_t> headline, title, text;
  for (std::size_t i = 0; i < header->fields.size(); ++i) {
    const std::string name = lower_ascii(trim(header->fields[i]));
    if (name == "headline") headline = i;
    if (name == "title") title = i;
    if (name == "text") text = i;
  }
  if (!headline || !title || !text) {
    throw DataError("corpus header must name headline, title and text columns: " + path.string());
  }
  headline_col_ = *headline;
  title_col_ = *title;
  text_col_ = *text;
}

WikiHowCsvReader::~WikiHowCsvReader() = default;

std::optional<ArticlePair> WikiHowCsvReader::next() {
  while (!limit_ || manifest_.record_count < *limit_) {
    auto row = csv_->next();
    if (!row) return std::nullopt;
    const std::size_t index = row_index_++;
    const std::size_t needed = std::max({headline_col_, title_col_, text_col_}) + 1;
    if (row->malformed || row->fields.size() < needed) {
      ++manifest_.skipped_count;
      continue;
    }

    bool repaired_a = false, repaired_s = false, repaired_t = false;
    ArticlePair pair;
    pair.article = utf8::sanitize(trim(row->fields[text_col_]), &repaired_a);
    pair.reference_summary = utf8::sanitize(trim(row->fields[headline_col_]), &repaired_s);
    pair.title = utf8::sanitize(trim(row->fields[title_col_]), &repaired_t);
    if (pair.article.empty() || pair.reference_summary.empty()) {
      ++manifest_.skipped_count;
      continue;
    }
    pair.encoding_repaired = repaired_a || repaired_s || repaired_t;
    if (pair.encoding_repaired) ++manifest_.repaired_count;

    std::string id = slugify_title(pair.title);
    if (used_ids_.contains(id)) {
      const std::string base = id + "_" + std::to_string(index);
      id = base;
      for (int k = 2; used_ids_.contains(id); ++k) id = base + "_" + std::to_string(k);
    }
    used_ids_.insert(id);
    pair.id = std::move(id);
    ++manifest_.record_count;
    return pair;
  }
  return std::nullopt;
}

IngestResult ingest_csv(const fs::path& path, std::optional<std::size_t> limit) {
  WikiHowCsvReader reader(path, limit);
  IngestResult result;
  while (auto pair = reader.next()) result.pairs.push_back(std::move(*pair));
  result.manifest = reader.manifest();
  if (result.pairs.empty()) {
    throw EmptyCorpusError("no valid rows in " + path.string() + " (" +
                           std::to_string(result.manifest.skipped_count) + " skipped)");
  }
  return result;
}

CorpusManifest write_split(const std::vector<ArticlePair>& pairs, const fs::path& out_dir) {
  const fs::path articles = out_dir / "articles";
  const fs::path summaries = out_dir / "summaries";
  ensure_directory(articles);
  ensure_directory(summaries);

  std::string index;
  for (const auto& p : pairs) {
    if (p.id.empty() || p.id.find_first_of("/\\") != std::string::npos || p.id == "." ||
        p.id == "..") {
      throw DataError("unsafe article id '" + p.id + "'");
    }
    write_file(articles / (p.id + ".txt"), p.article);
    write_file(summaries / (p.id + ".txt"), p.reference_summary);
    index += p.id + "\t" + one_line(p.title) + "\n";
  }
  write_file(out_dir / "index.tsv", index);

  CorpusManifest m;
  m.record_count = pairs.size();
  m.source_path = out_dir.string();
  return m;
}

std::vector<ArticlePair> read_split(const fs::path& dir) {
  const std::string index = read_file(dir / "index.tsv");
  std::vector<ArticlePair> pairs;
  std::size_t pos = 0;
  while (pos < index.size()) {
    auto eol = index.find('\n', pos);
    if (eol == std::string::npos) eol = index.size();
    const std::string_view line(index.data() + pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    ArticlePair p;
    p.id = std::string(line.substr(0, tab));
    if (tab != std::string_view::npos) p.title = std::string(line.substr(tab + 1));
    p.article = read_file(dir / "articles" / (p.id + ".txt"));
    p.reference_summary = read_file(dir / "summaries" / (p.id + ".txt"));
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace topicsum
