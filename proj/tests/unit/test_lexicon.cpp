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

#include <doctest.h>

#include <random>
#include <sstream>

#include "inflgraph/error.hpp"
#include "inflgraph/lexicon.hpp"
#include "oracles.hpp"

using namespace inflgraph;

namespace {

Lexicon load(const std::string& text, const NormalizationConfig& cfg = {}) {
  std::istringstream in(text);
  return load_lexicon(in, cfg);
}

std::size_t load_error_line(const std::string& text) {
  try {
    load(text);
  } catch (const LoadError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("load_lexicon parses multi-headword records") {
  const auto lex = load("sublatus\ttollo,suffero\n");
  REQUIRE(lex.find("sublatus") != nullptr);
  CHECK(*lex.find("sublatus") == HeadwordSet{"tollo", "suffero"});
  CHECK(lex.form_count() == 1);
  CHECK(lex.headword_count() == 2);
}

TEST_CASE("repeated pairs are idempotent") {
  const auto lex = load("aqua\taqua\naqua\taqua\n");
  CHECK(lex.pair_count() == 1);
  CHECK(*lex.find("aqua") == HeadwordSet{"aqua"});
}

TEST_CASE("malformed lexicon lines cite their line number") {
  CHECK(load_error_line("aqua\taqua\ndicunt\t\n") == 2);
  CHECK(load_error_line("# c\n\naqua aqua\n") == 3);
  CHECK(load_error_line("\tdico\n") == 1);
  CHECK(load_error_line("sublatus\ttollo,,suffero\n") == 1);
  CHECK(load_error_line("two words\tdico\n") == 1);
  CHECK(load_error_line("x\t123\n") == 1);
}

TEST_CASE("lexicon keys use the corpus normalization") {
  const auto lex = load("Dicunt\tDICO\r\n  \n# comment\n");
  CHECK(lex.contains("dicunt"));
  CHECK(*lex.find("dicunt") == HeadwordSet{"dico"});

  NormalizationConfig fold;
  fold.folding = OrthographyFolding::u_v_and_i_j;
  const auto folded = load("vivit\tvivo\n", fold);
  CHECK(*folded.find("uiuit") == HeadwordSet{"uiuo"});
}

TEST_CASE("analyze follows the unknown policy") {
  std::istringstream in(testing::kMiniLexicon);
  const auto lex = load_lexicon(in);
  CHECK(analyze(lex, "dicunt") == HeadwordSet{"dico"});
  CHECK(analyze(lex, "sublatus") == HeadwordSet{"tollo", "suffero"});
  CHECK(analyze(lex, "xyzzy", UnknownPolicy::self_headword) == HeadwordSet{"xyzzy"});
  CHECK(analyze(lex, "xyzzy", UnknownPolicy::drop).empty());
  CHECK(parse_unknown_policy("self") == UnknownPolicy::self_headword);
  CHECK(parse_unknown_policy("drop") == UnknownPolicy::drop);
  CHECK_THROWS_AS(parse_unknown_policy("keep"), ConfigError);
}

TEST_CASE("lexicon_stats on the mini lexicon") {
  std::istringstream in(testing::kMiniLexicon);
  CHECK(lexicon_stats(load_lexicon(in)) == LexiconStats{4, 9});
  CHECK(lexicon_stats(Lexicon{}) == LexiconStats{0, 0});
}

TEST_CASE("write then load round-trips random lexicons") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n_forms(0, 40), n_heads(1, 3), id(0, 25);
  for (int trial = 0; trial < 50; ++trial) {
    Lexicon lex;
    for (int f = n_forms(rng); f > 0; --f) {
      const std::string form = "form" + std::string(1, static_cast<char>('a' + id(rng)));
      for (int h = n_heads(rng); h > 0; --h) lex.add(form, "head" + std::string(1, static_cast<char>('a' + id(rng))));
    }
    std::ostringstream out;
    write_lexicon(lex, out);
    CHECK(load(out.str()) == lex);
    CHECK(lexicon_stats(load(out.str())) == lexicon_stats(lex));
  }
}

TEST_CASE("paradigm and stem files") {
  std::istringstream paradigms(
      "# first declension, a few cases\n"
      "[a-decl]\n"
      "a\n"
      "am\n"
      "ae\n"
      "\n"
      "[bare]\n"
      "-\n");
  const auto set = load_paradigms(paradigms);
  REQUIRE(set.size() == 2);
  CHECK(set.at("a-decl").endings == std::vector<std::string>{"a", "am", "ae"});
  CHECK(set.at("bare").endings == std::vector<std::string>{""});

  std::istringstream stems("aqua\taqu\ta-decl\nnon\tnon\tbare\n");
  const auto entries = load_stems(stems);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].headword == "aqua");
  CHECK(entries[0].stem == "aqu");
  CHECK(entries[0].paradigm == "a-decl");

  const auto lex = generate_forms(entries, set);
  CHECK(lex.form_count() == 4);
  for (const char* form : {"aqua", "aquam", "aquae"}) {
    REQUIRE(lex.find(form) != nullptr);
    CHECK(*lex.find(form) == HeadwordSet{"aqua"});
  }
  CHECK(*lex.find("non") == HeadwordSet{"non"});
}

TEST_CASE("paradigm file errors") {
  auto error_line = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load_paradigms(in);
    } catch (const LoadError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("[p]\na\na\n") == 3);
  CHECK(error_line("a\n") == 1);
  CHECK(error_line("[p]\n[q]\na\n") == 1);
  CHECK(error_line("[p]\na\n[p]\nb\n") == 3);
  CHECK(error_line("[p\na\n") == 1);
  CHECK(error_line("[p]\n-\n-\n") == 3);

  std::istringstream short_stem("aqua\taqu\n");
  CHECK_THROWS_AS(load_stems(short_stem), LoadError);
}

TEST_CASE("generated forms collide across headwords") {
  ParadigmSet set;
  set["x"] = ParadigmTable{"x", {"i", "us"}};
  set["y"] = ParadigmTable{"y", {"", "us"}};
  const std::vector<StemEntry> stems = {{"fero", "tul", "x"}, {"tollo", "tuli", "y"}};
  const auto lex = generate_forms(stems, set);
  CHECK(*lex.find("tuli") == HeadwordSet{"fero", "tollo"});
  CHECK(*lex.find("tulus") == HeadwordSet{"fero"});
  CHECK(*lex.find("tulius") == HeadwordSet{"tollo"});

  CHECK_THROWS_AS(generate_forms({{"aqua", "aqu", "missing"}}, set), ConfigError);
}

TEST_CASE("every generated form analyzes back to its headword") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(0, 4), len(1, 3), n_end(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    ParadigmSet set;
    for (const char* name : {"p0", "p1", "p2"}) {
      ParadigmTable table{name, {}};
      std::set<std::string> seen;
      for (int e = n_end(rng); e > 0; --e) {
        std::string ending;
        for (int i = len(rng) - 1; i > 0; --i) ending += static_cast<char>('a' + letter(rng));
        if (seen.insert(ending).second) table.endings.push_back(ending);
      }
      set[name] = table;
    }
    std::vector<StemEntry> stems;
    for (int s = 0; s < 20; ++s) {
      std::string stem;
      for (int i = len(rng); i > 0; --i) stem += static_cast<char>('a' + letter(rng));
      stems.push_back({"head" + std::string(1, static_cast<char>('a' + s)), stem, "p" + std::to_string(s % 3)});
    }
    const auto lex = generate_forms(stems, set);
    for (const auto& entry : stems) {
      for (const auto& ending : set.at(entry.paradigm).endings) {
        CHECK(analyze(lex, entry.stem + ending).count(entry.headword) == 1);
      }
    }
  }
}
