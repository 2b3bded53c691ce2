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

#include "inflgraph/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

void validate_utf8(std::string_view raw) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int32_t>(raw.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw InputError("invalid UTF-8 sequence at byte offset " + std::to_string(start),
                       static_cast<std::size_t>(start));
    }
  }
}

icu::UnicodeString nfc(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString out = norm->normalize(s, status);
  if (U_FAILURE(status)) throw Error("ICU normalization failed");
  return out;
}

UChar32 fold(UChar32 c, OrthographyFolding folding) {
  if (folding == OrthographyFolding::u_v_and_i_j) {
    if (c == U'v') return U'u';
    if (c == U'j') return U'i';
  }
  return c;
}

bool is_word_char(UChar32 c, const NormalizationConfig& cfg) {
  const auto mask = U_GET_GC_MASK(c);
  if (mask & (U_GC_L_MASK | U_GC_M_MASK)) return true;
  if (!cfg.strip_digits && (mask & U_GC_N_MASK)) return true;
  if (!cfg.strip_punctuation && (mask & U_GC_P_MASK)) return true;
  return false;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

TokenStream normalize_text(std::string_view raw, const NormalizationConfig& cfg,
                           std::string source_name) {
  validate_utf8(raw);

  const icu::UnicodeString composed = nfc(icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size()))));

  icu::UnicodeString lowered;
  for (int32_t i = 0; i < composed.length();) {
    const UChar32 c = composed.char32At(i);
    lowered.append(fold(u_tolower(c), cfg.folding));
    i += U16_LENGTH(c);
  }
  const icu::UnicodeString text = nfc(lowered);

  TokenStream ts;
  ts.source_name = std::move(source_name);
  std::string current;
  for (int32_t i = 0; i < text.length();) {
    const UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (is_word_char(c, cfg)) {
      append_utf8(current, c);
    } else if (!current.empty()) {
      ts.tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) ts.tokens.push_back(std::move(current));
  ts.original_token_count = ts.tokens.size();
  return ts;
}

TokenStream normalize_file(const std::filesystem::path& path, const NormalizationConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open text file: " + path.string());
  std::string raw{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error reading text file: " + path.string());
  return normalize_text(raw, cfg, path.filename().string());
}

TokenStream truncate(const TokenStream& ts, std::size_t n) {
  TokenStream out;
  out.source_name = ts.source_name;
  out.original_token_count = ts.original_token_count;
  const auto keep = std::min(n, ts.tokens.size());
  out.tokens.assign(ts.tokens.begin(), ts.tokens.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

FrequencyTable word_frequencies(const TokenStream& ts) {
  FrequencyTable table;
  for (const auto& token : ts.tokens) ++table.entries[token];
  table.total = ts.tokens.size();
  return table;
}

std::string to_upper(std::string_view word) {
  validate_utf8(word);
  const icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(word.data(), static_cast<int32_t>(word.size())));
  std::string out;
  out.reserve(word.size());
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    append_utf8(out, u_toupper(c));
    i += U16_LENGTH(c);
  }
  return out;
}

}  // namespace inflgraph
