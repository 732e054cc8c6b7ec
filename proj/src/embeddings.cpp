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

#include <charconv>

#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/textrank.hpp"

namespace topicsum {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

EmbeddingTable EmbeddingTable::parse(std::string_view text) {
  EmbeddingTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto f = fields(line);
    if (f.empty()) continue;
    if (f.size() < 2) throw DataError("embedding line " + std::to_string(line_no) + " has no vector");
    if (table.dim_ == 0) table.dim_ = f.size() - 1;
    if (f.size() - 1 != table.dim_) {
      throw DataError("embedding line " + std::to_string(line_no) + " has dimension " +
                      std::to_string(f.size() - 1) + ", expected " + std::to_string(table.dim_));
    }
    if (table.index_.contains(f[0])) continue;  // first entry wins
    table.index_.emplace(std::string(f[0]), table.values_.size() / table.dim_);
    for (std::size_t k = 1; k < f.size(); ++k) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f[k].data(), f[k].data() + f[k].size(), v);
      if (ec != std::errc{} || ptr != f[k].data() + f[k].size()) {
        throw DataError("bad number on embedding line " + std::to_string(line_no));
      }
      table.values_.push_back(v);
    }
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::span<const double> EmbeddingTable::find(std::string_view token) const {
  const auto it = index_.find(token);
  if (it == index_.end()) return {};
  return {values_.data() + it->second * dim_, dim_};
}

}  // namespace topicsum
