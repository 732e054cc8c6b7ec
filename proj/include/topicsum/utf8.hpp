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
#include <string>
#include <string_view>

namespace topicsum::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point at `pos` and advances it. Invalid or truncated
// sequences yield kReplacement and consume a single byte.
char32_t next(std::string_view s, std::size_t& pos);

void append(std::string& out, char32_t cp);

// Copy of `s` with every invalid sequence replaced by U+FFFD.
// `repaired` is set when anything was replaced.
std::string sanitize(std::string_view s, bool* repaired = nullptr);

bool is_valid(std::string_view s);

}  // namespace topicsum::utf8
