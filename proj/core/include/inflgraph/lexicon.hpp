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

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "inflgraph/corpus.hpp"

namespace inflgraph {

using HeadwordSet = std::set<std::string>;

/// What to do with a token the lexicon does not know.
enum class UnknownPolicy {
  self_headword,  ///< the form becomes its own headword (and its own group)
  drop,           ///< the form is left out of the graph
};

/// Form -> headwords relation. Every stored form has at least one headword.
class Lexicon {
 public:
  Lexicon() = default;

  /// Adds one (form, headword) pair; repeated pairs are no-ops. Both strings
  /// must already be normalized.
  void add(std::string form, std::string headword);

  /// Headwords of a known form, or nullptr.
  const HeadwordSet* find(std::string_view form) const;
  bool contains(std::string_view form) const { return find(form) != nullptr; }

  const std::map<std::string, HeadwordSet, std::less<>>& analyses() const noexcept {
    return analyses_;
  }

  std::size_t form_count() const noexcept { return analyses_.size(); }
  std::size_t headword_count() const noexcept { return headwords_.size(); }
  std::size_t pair_count() const noexcept { return pairs_; }
  bool empty() const noexcept { return analyses_.empty(); }

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.analyses_ == b.analyses_; }

 private:
  std::map<std::string, HeadwordSet, std::less<>> analyses_;
  std::map<std::string, std::size_t, std::less<>> headwords_;  // headword -> number of forms
  std::size_t pairs_ = 0;
};

struct LexiconStats {
  std::size_t headword_count = 0;
  std::size_t form_count = 0;
  friend bool operator==(const LexiconStats&, const LexiconStats&) = default;
};

LexiconStats lexicon_stats(const Lexicon& lex);

/// Parses `form<TAB>headword[,headword...]` records. Lines starting with
/// `#` and blank lines are skipped. Forms and headwords go through
/// normalize_text and must come out as exactly one token each.
/// Throws LoadError carrying the 1-based line number.
Lexicon load_lexicon(std::istream& in, const NormalizationConfig& cfg = {});
Lexicon load_lexicon(const std::filesystem::path& path, const NormalizationConfig& cfg = {});

/// Writes the lexicon in the same record format, sorted by form, headwords
/// sorted and comma-joined.
void write_lexicon(const Lexicon& lex, std::ostream& out);

/// Known form -> its headwords. Unknown form -> {form} under
/// self_headword, {} under drop.
HeadwordSet analyze(const Lexicon& lex, std::string_view form,
                    UnknownPolicy policy = UnknownPolicy::self_headword);

// ---------------------------------------------------------------------------
// Paradigm generation: every stem + ending concatenation is a form of the
// stem's headword. No stem alternation, no attestation check.

struct ParadigmTable {
  std::string name;
  std::vector<std::string> endings;  ///< may contain "" (the empty ending)
};

struct StemEntry {
  std::string headword;
  std::string stem;
  std::string paradigm;
};

using ParadigmSet = std::map<std::string, ParadigmTable, std::less<>>;

/// `[name]` section headers, then one ending per line; `-` is the empty
/// ending. Duplicate endings, duplicate sections and empty sections are
/// load errors.
ParadigmSet load_paradigms(std::istream& in);
ParadigmSet load_paradigms(const std::filesystem::path& path);

/// `headword<TAB>stem<TAB>paradigm-name` records.
std::vector<StemEntry> load_stems(std::istream& in);
std::vector<StemEntry> load_stems(const std::filesystem::path& path);

/// Throws ConfigError if a stem names an unknown paradigm or a generated
/// form does not normalize to a single token.
Lexicon generate_forms(const std::vector<StemEntry>& stems, const ParadigmSet& paradigms,
                       const NormalizationConfig& cfg = {});

UnknownPolicy parse_unknown_policy(std::string_view name);

}  // namespace inflgraph
