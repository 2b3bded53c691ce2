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

#include "inflgraph/lexicon.hpp"

#include <fstream>

#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// A lexicon field must survive normalization as a single token.
std::string single_token(std::string_view field, const NormalizationConfig& cfg,
                         std::size_t line_no, const char* what) {
  TokenStream ts;
  try {
    ts = normalize_text(field, cfg);
  } catch (const InputError& e) {
    throw LoadError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
  }
  if (ts.tokens.size() != 1) {
    throw LoadError("line " + std::to_string(line_no) + ": " + what + " '" + std::string(field) +
                        "' does not normalize to a single word",
                    line_no);
  }
  return std::move(ts.tokens.front());
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

void Lexicon::add(std::string form, std::string headword) {
  auto& heads = analyses_[std::move(form)];
  const auto [it, inserted] = heads.insert(headword);
  if (!inserted) return;
  ++pairs_;
  ++headwords_[std::move(headword)];
}

const HeadwordSet* Lexicon::find(std::string_view form) const {
  const auto it = analyses_.find(form);
  return it == analyses_.end() ? nullptr : &it->second;
}

LexiconStats lexicon_stats(const Lexicon& lex) {
  return {lex.headword_count(), lex.form_count()};
}

Lexicon load_lexicon(std::istream& in, const NormalizationConfig& cfg) {
  Lexicon lex;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = chomp(std::move(raw));
    if (skippable(line)) continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw LoadError("line " + std::to_string(line_no) + ": expected form<TAB>headword[,headword...]",
                      line_no);
    }
    const std::string_view view(line);
    const auto form_field = trim(view.substr(0, tab));
    const auto heads_field = trim(view.substr(tab + 1));
    if (form_field.empty()) {
      throw LoadError("line " + std::to_string(line_no) + ": empty form field", line_no);
    }
    if (heads_field.empty()) {
      throw LoadError("line " + std::to_string(line_no) + ": empty headword field", line_no);
    }

    const std::string form = single_token(form_field, cfg, line_no, "form");
    for (const auto part : split(heads_field, ',')) {
      const auto head = trim(part);
      if (head.empty()) {
        throw LoadError("line " + std::to_string(line_no) + ": empty headword in list", line_no);
      }
      lex.add(form, single_token(head, cfg, line_no, "headword"));
    }
  }
  if (in.bad()) throw IoError("error reading lexicon stream");
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path, const NormalizationConfig& cfg) {
  auto in = open_or_throw(path);
  return load_lexicon(in, cfg);
}

void write_lexicon(const Lexicon& lex, std::ostream& out) {
  for (const auto& [form, heads] : lex.analyses()) {
    out << form << '\t';
    bool first = true;
    for (const auto& h : heads) {
      if (!first) out << ',';
      out << h;
      first = false;
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing lexicon");
}

HeadwordSet analyze(const Lexicon& lex, std::string_view form, UnknownPolicy policy) {
  if (const auto* heads = lex.find(form)) return *heads;
  if (policy == UnknownPolicy::self_headword) return {std::string(form)};
  return {};
}

ParadigmSet load_paradigms(std::istream& in) {
  ParadigmSet paradigms;
  ParadigmTable* current = nullptr;
  std::size_t current_line = 0;
  std::string raw;
  std::size_t line_no = 0;

  auto close_section = [&] {
    if (current != nullptr && current->endings.empty()) {
      throw LoadError("line " + std::to_string(current_line) + ": paradigm '" + current->name +
                          "' has no endings",
                      current_line);
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = chomp(std::move(raw));
    if (skippable(line)) continue;
    const auto t = trim(line);

    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3) {
        throw LoadError("line " + std::to_string(line_no) + ": malformed section header", line_no);
      }
      close_section();
      std::string name(trim(t.substr(1, t.size() - 2)));
      if (name.empty()) {
        throw LoadError("line " + std::to_string(line_no) + ": empty paradigm name", line_no);
      }
      const auto [it, inserted] = paradigms.try_emplace(name, ParadigmTable{name, {}});
      if (!inserted) {
        throw LoadError("line " + std::to_string(line_no) + ": duplicate paradigm '" + name + "'",
                        line_no);
      }
      current = &it->second;
      current_line = line_no;
      continue;
    }

    if (current == nullptr) {
      throw LoadError("line " + std::to_string(line_no) + ": ending outside of a [paradigm] section",
                      line_no);
    }
    std::string ending = t == "-" ? std::string() : std::string(t);
    for (const auto& e : current->endings) {
      if (e == ending) {
        throw LoadError("line " + std::to_string(line_no) + ": duplicate ending '" +
                            (ending.empty() ? std::string("-") : ending) + "' in paradigm '" +
                            current->name + "'",
                        line_no);
      }
    }
    current->endings.push_back(std::move(ending));
  }
  close_section();
  if (in.bad()) throw IoError("error reading paradigm stream");
  return paradigms;
}

ParadigmSet load_paradigms(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_paradigms(in);
}

std::vector<StemEntry> load_stems(std::istream& in) {
  std::vector<StemEntry> stems;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = chomp(std::move(raw));
    if (skippable(line)) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw LoadError("line " + std::to_string(line_no) + ": expected headword<TAB>stem<TAB>paradigm",
                      line_no);
    }
    StemEntry entry{std::string(trim(fields[0])), std::string(trim(fields[1])),
                    std::string(trim(fields[2]))};
    if (entry.headword.empty() || entry.stem.empty() || entry.paradigm.empty()) {
      throw LoadError("line " + std::to_string(line_no) + ": empty field in stem record", line_no);
    }
    stems.push_back(std::move(entry));
  }
  if (in.bad()) throw IoError("error reading stem stream");
  return stems;
}

std::vector<StemEntry> load_stems(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_stems(in);
}

Lexicon generate_forms(const std::vector<StemEntry>& stems, const ParadigmSet& paradigms,
                       const NormalizationConfig& cfg) {
  auto normalized = [&](const std::string& word, const StemEntry& entry) {
    TokenStream ts;
    try {
      ts = normalize_text(word, cfg);
    } catch (const InputError& e) {
      throw ConfigError("stem entry for '" + entry.headword + "': " + e.what());
    }
    if (ts.tokens.size() != 1) {
      throw ConfigError("stem entry for '" + entry.headword + "': '" + word +
                        "' does not normalize to a single word");
    }
    return std::move(ts.tokens.front());
  };

  Lexicon lex;
  for (const auto& entry : stems) {
    const auto it = paradigms.find(entry.paradigm);
    if (it == paradigms.end()) {
      throw ConfigError("stem entry for '" + entry.headword + "' references unknown paradigm '" +
                        entry.paradigm + "'");
    }
    const std::string headword = normalized(entry.headword, entry);
    for (const auto& ending : it->second.endings) {
      lex.add(normalized(entry.stem + ending, entry), headword);
    }
  }
  return lex;
}

UnknownPolicy parse_unknown_policy(std::string_view name) {
  if (name == "self" || name == "self_headword") return UnknownPolicy::self_headword;
  if (name == "drop") return UnknownPolicy::drop;
  throw ConfigError("unknown policy '" + std::string(name) + "' (expected self or drop)");
}

}  // namespace inflgraph
