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
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace topicsum {

class CsvReader;

// One source document and its reference summary.
struct ArticlePair {
  std::string id;
  std::string title;
  std::string article;
  std::string reference_summary;
  bool encoding_repaired = false;  // invalid UTF-8 was replaced with U+FFFD

  friend bool operator==(const ArticlePair&, const ArticlePair&) = default;
};

struct CorpusManifest {
  std::size_t record_count = 0;
  std::size_t skipped_count = 0;
  std::size_t repaired_count = 0;
  std::string source_path;

  std::string to_json() const;
  static CorpusManifest from_json(std::string_view text);

  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

// "How to Comb Long Hair" -> "comb_long_hair".
std::string slugify_title(std::string_view title);

// Streams ArticlePairs from a WikiHow-style CSV with a header row naming the
// columns headline, title and text (any order, extra columns ignored). The
// headline column becomes the reference summary verbatim.
class WikiHowCsvReader {
 public:
  explicit WikiHowCsvReader(const std::filesystem::path& path,
                            std::optional<std::size_t> limit = std::nullopt);
  ~WikiHowCsvReader();
  WikiHowCsvReader(const WikiHowCsvReader&) = delete;
  WikiHowCsvReader& operator=(const WikiHowCsvReader&) = delete;

  // Next valid pair in file order; skipped rows are counted, not returned.
  std::optional<ArticlePair> next();

  const CorpusManifest& manifest() const { return manifest_; }

 private:
  std::ifstream in_;
  std::unique_ptr<CsvReader> csv_;
  std::optional<std::size_t> limit_;
  CorpusManifest manifest_;
  std::size_t headline_col_ = 0;
  std::size_t title_col_ = 0;
  std::size_t text_col_ = 0;
  std::size_t row_index_ = 0;
  std::set<std::string, std::less<>> used_ids_;
};

struct IngestResult {
  std::vector<ArticlePair> pairs;
  CorpusManifest manifest;
};

// Throws IoError when the file is missing and EmptyCorpusError when no row
// is valid.
IngestResult ingest_csv(const std::filesystem::path& path,
                        std::optional<std::size_t> limit = std::nullopt);

// Writes articles/<id>.txt, summaries/<id>.txt and index.tsv (id, title in
// corpus order) under out_dir.
CorpusManifest write_split(const std::vector<ArticlePair>& pairs,
                           const std::filesystem::path& out_dir);

// Reads a tree produced by write_split, in the order recorded in index.tsv.
std::vector<ArticlePair> read_split(const std::filesystem::path& dir);

}  // namespace topicsum
