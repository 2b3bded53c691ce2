// Copyright 2026 The inflgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text normalization and word counting.
//
// Tokens are maximal runs of letters (plus combining marks). Whitespace,
// symbols, control characters and, by default, every Unicode punctuation
// (P*) and number (N*) code point act as separators, so "a.C." gives two
// tokens rather than the nonword "ac". Input is NFC-normalized and
// lowercased per code point before splitting.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace inflgraph {

enum class OrthographyFolding {
  none,
  u_v_and_i_j,  ///< v -> u and j -> i after lowercasing
};

struct NormalizationConfig {
  bool strip_digits = true;
  bool strip_punctuation = true;
  OrthographyFolding folding = OrthographyFolding::none;
};

struct TokenStream {
  std::vector<std::string> tokens;
  std::string source_name;
  /// Token count before any truncation.
  std::size_t original_token_count = 0;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

struct FrequencyTable {
  std::map<std::string, std::uint64_t> entries;
  std::uint64_t total = 0;
};

/// Splits UTF-8 text into normalized tokens. Throws InputError with the
/// byte offset of the first ill-formed sequence.
TokenStream normalize_text(std::string_view raw, const NormalizationConfig& cfg = {},
                           std::string source_name = {});

/// Reads a UTF-8 file and normalizes it; source_name is the file name.
TokenStream normalize_file(const std::filesystem::path& path,
                           const NormalizationConfig& cfg = {});

/// First min(n, size) tokens, order preserved.
TokenStream truncate(const TokenStream& ts, std::size_t n);

FrequencyTable word_frequencies(const TokenStream& ts);

/// Length of De bello Gallico; the reference length all sample texts are cut to.
inline constexpr std::size_t kReferenceTextLength = 51300;

/// Per-code-point uppercase (for headword labels in exports).
std::string to_upper(std::string_view word);

}  // namespace inflgraph
