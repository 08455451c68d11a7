// Copyright 2026 The Hypershare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypershare/error.hpp"

namespace hypershare::detail {

// Tokenized non-comment line with its 1-based source line number.
struct TextLine {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

inline std::vector<TextLine> SplitLines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    TextLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tl.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tl.tokens.empty() || tl.tokens.front().front() == '#') continue;
    out.push_back(std::move(tl));
  }
  return out;
}

[[noreturn]] inline void FormatFail(std::size_t line, const std::string& what) {
  Fail(ErrorCode::kFormat, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t ParseU64(const TextLine& line, std::size_t index) {
  if (index >= line.tokens.size()) FormatFail(line.number, "missing field");
  auto tok = line.tokens[index];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    FormatFail(line.number, "expected a non-negative integer, got '" +
                                std::string(tok) + "'");
  }
  return value;
}

inline void ExpectKeyword(const TextLine& line, std::string_view keyword) {
  if (line.tokens.front() != keyword) {
    FormatFail(line.number, "expected '" + std::string(keyword) + "', got '" +
                                std::string(line.tokens.front()) + "'");
  }
}

inline void ExpectTokenCount(const TextLine& line, std::size_t count) {
  if (line.tokens.size() != count) {
    FormatFail(line.number, "expected " + std::to_string(count) +
                                " fields, got " +
                                std::to_string(line.tokens.size()));
  }
}

}  // namespace hypershare::detail
