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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// The two data-dependent checks need files that cannot ship with the
// project. They run when these environment variables are set and are
// reported as SKIP otherwise:
//   INFLGRAPH_WORDS_LEXICON  form<TAB>headwords list for the text check
//   INFLGRAPH_DBG_TEXT       plain text of De bello Gallico
//   INFLGRAPH_DICT_LEXICON   full generated form<TAB>headword list

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "inflgraph/inflgraph.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace inflgraph;

namespace {

enum class Outcome { pass, fail, skip };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

Verdict pass(std::string d) { return {Outcome::pass, std::move(d)}; }
Verdict fail(std::string d) { return {Outcome::fail, std::move(d)}; }
Verdict verdict(bool ok, std::string d) { return {ok ? Outcome::pass : Outcome::fail, std::move(d)}; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream o;
  o.precision(precision);
  o << v;
  return o.str();
}

bool within(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

// --- criteria --------------------------------------------------------------

Verdict component_oracle() {
  Stopwatch clock;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> nh(1, 100), nf(1, 200);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const double density = 0.005 + (0.10 - 0.005) * i / 199.0;
    const auto raw = testing::random_bipartite(rng, nh(rng), nf(rng), density);
    Lexicon lex;
    for (const auto& [h, f] : raw.edges) lex.add(f, h);
    const auto g = build_graph(lex);
    const auto comps = connected_components(g);
    std::set<testing::RawComponent> got;
    for (const auto& group : comps.groups) {
      testing::RawComponent c;
      for (const auto h : group.headword_members) c.first.insert(g.headwords()[h]);
      for (const auto f : group.form_members) c.second.insert(g.forms()[f]);
      got.insert(std::move(c));
    }
    if (got != testing::bfs_components(raw)) ++mismatches;
  }
  const double t = clock.seconds();
  return verdict(mismatches == 0 && t < 5.0,
                 "200 graphs, " + std::to_string(mismatches) + " mismatches, " + fmt(t, 3) + " s (limit 5 s)");
}

Verdict mini_corpus() {
  std::istringstream lex_in(testing::kMiniLexicon);
  const Lexicon lex = load_lexicon(lex_in);
  const auto a = cli::analyze_tokens(normalize_text(testing::kMiniText), lex, UnknownPolicy::self_headword);
  const auto cw = coverage(a.word_ranks);
  const auto cg = coverage(a.group_ranks);
  const bool ok = a.tokens.size() == 8 && a.graph.headword_count() == 4 && a.graph.form_count() == 6 &&
                  a.graph.edge_count() == 7 && a.components.size() == 3 &&
                  a.group_ranks.counts == std::vector<std::uint64_t>{3, 3, 2} && cw(2) == 0.5 &&
                  cg(2) == 0.75;
  std::ostringstream d;
  d << "|A|=" << a.graph.headword_count() << " |B|=" << a.graph.form_count() << " |E|=" << a.graph.edge_count()
    << " groups=" << a.components.size() << " n_g=(";
  for (std::size_t i = 0; i < a.group_ranks.size(); ++i) d << (i ? "," : "") << a.group_ranks.counts[i];
  d << ") C_w(2)=" << fmt(cw(2)) << " C_g(2)=" << fmt(cg(2));
  return verdict(ok, d.str());
}

Verdict coverage_dominance() {
  std::mt19937_64 rng(77);
  std::size_t violations = 0, comparisons = 0;
  for (int corpus = 0; corpus < 100; ++corpus) {
    const auto raw = testing::random_bipartite(rng, 1 + rng() % 60, 1 + rng() % 150, 0.01 + 0.04 * (corpus % 10) / 9.0);
    Lexicon lex;
    for (const auto& [h, f] : raw.edges) lex.add(f, h);
    std::vector<std::string> vocab(raw.forms.begin(), raw.forms.end());
    for (int u = 0; u < 5; ++u) vocab.push_back("ignotum" + std::string(1, static_cast<char>('a' + u)));
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    TokenStream ts;
    for (int i = 0; i < 1000; ++i) ts.tokens.push_back(vocab[std::min(pick(rng), pick(rng))]);

    const auto a = cli::analyze_tokens(ts, lex, UnknownPolicy::self_headword);
    const CoverageCurve cw(a.word_ranks), cg(a.group_ranks);
    if (cw.total() != cg.total()) ++violations;
    for (std::size_t k = 0; k <= std::min(cw.length(), cg.length()); ++k) {
      ++comparisons;
      // Same denominator, so C_g(k) >= C_w(k) is an integer comparison.
      if (cg.cumulative(k) < cw.cumulative(k)) ++violations;
    }
  }
  return verdict(violations == 0, "100 corpora, " + std::to_string(comparisons) + " exact comparisons, " +
                                      std::to_string(violations) + " violations");
}

Verdict zipf_closed_form() {
  Stopwatch clock;
  double worst = 0.0;
  std::size_t evaluated = 0;
  for (const long long n : {1LL, 10LL, 100LL, 10000LL}) {
    const auto h = testing::partial_harmonic_sums(static_cast<std::size_t>(n));
    for (long long k = 0; k <= n; ++k) {
      const double want = static_cast<double>(h[k] / h[n]);
      const double got = zipf_coverage(n, static_cast<double>(k) / static_cast<double>(n));
      ++evaluated;
      const double err = want == 0.0 ? std::abs(got) : std::abs(got - want) / want;
      worst = std::max(worst, err);
    }
  }
  const double t = clock.seconds();
  return verdict(worst <= 1e-9 && t < 2.0, std::to_string(evaluated) + " points, max rel err " + fmt(worst, 3) +
                                               " (limit 1e-9), " + fmt(t, 3) + " s (limit 2 s)");
}

Verdict digamma_recurrence() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0.5, 1e6);
  double worst = 0.0, worst_vs_step = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double z = u(rng);
    const double hi = digamma(z + 1.0), lo = digamma(z);
    const double residual = std::abs((hi - lo) - 1.0 / z);
    // Relative to the magnitude of the terms of the identity.
    worst = std::max(worst, residual / std::max({std::abs(hi), std::abs(lo), 1.0 / z}));
    worst_vs_step = std::max(worst_vs_step, residual * z);
  }
  return verdict(worst <= 1e-12, "10^4 z in [0.5, 1e6], max rel residual " + fmt(worst, 3) +
                                     " (limit 1e-12); residual relative to 1/z alone: " + fmt(worst_vs_step, 3));
}

Verdict fit_recovery() {
  struct Row {
    const char* name;
    FitParams p;
  };
  const Row rows[] = {
      {"De bello Gallico", {0.3688, 1.3583, 0.3445, 0.5877}},
      {"Philipicae", {0.3491, 1.3707, 0.3249, 0.5537}},
      {"Vulgate", {0.3045, 1.3188, 0.2781, 0.4206}},
      {"Gesta Romanorum", {0.3433, 1.3134, 0.3196, 0.5199}},
      {"Encyclicals", {0.3615, 1.2899, 0.3407, 0.5047}},
  };
  Stopwatch clock;
  double worst_clean = 0.0, worst_noisy = 0.0;
  std::mt19937_64 noise_rng(31337);
  std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
  for (const auto& row : rows) {
    std::vector<CurvePoint> clean, noisy;
    for (int i = 0; i < 500; ++i) {
      const double x = i / 499.0;
      const double c = eval_coverage_model(row.p, x);
      clean.emplace_back(x, c);
      noisy.emplace_back(x, std::clamp(c + noise(noise_rng), 0.0, 1.0));
    }
    auto deviation = [&](const FitResult& f) {
      return std::max({std::abs(f.params.alpha - row.p.alpha), std::abs(f.params.beta - row.p.beta),
                       std::abs(f.params.gamma - row.p.gamma), std::abs(f.params.delta - row.p.delta),
                       std::abs(f.eta - compute_eta(row.p))});
    };
    worst_clean = std::max(worst_clean, deviation(fit_coverage_model(clean)));
    worst_noisy = std::max(worst_noisy, deviation(fit_coverage_model(noisy)));
  }
  const double t = clock.seconds();
  return verdict(worst_clean <= 1e-3 && worst_noisy <= 5e-2 && t < 30.0,
                 "5 parameter rows; noiseless max dev " + fmt(worst_clean, 3) + " (limit 1e-3), noisy max dev " +
                     fmt(worst_noisy, 3) + " (limit 5e-2), " + fmt(t, 3) + " s (limit 30 s)");
}

Verdict power_law_recovery() {
  SizeHistogram synthetic;
  for (std::size_t m = 1; m <= 30; ++m) {
    const auto count = std::llround(1e5 * std::pow(static_cast<double>(m), -3.32));
    if (count > 0) synthetic.counts[m] = static_cast<std::size_t>(count);
  }
  const double tau = fit_power_law(synthetic, 0).tau;
  SizeHistogram two;
  two.counts = {{1, 8}, {2, 1}};
  const double exact = fit_power_law(two, 0).tau;
  return verdict(std::abs(tau - 3.32) <= 0.05 && std::abs(exact - 3.0) <= 1e-10,
                 "synthetic tau=" + fmt(tau, 8) + " (3.32 +/- 0.05), two-point tau=" + fmt(exact, 16) +
                     " (3 +/- 1e-10)");
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), dir).string()] = s.str();
  }
  return files;
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "inflgraph_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  std::ofstream(root / "lex.tsv") << testing::kMiniLexicon;
  {
    std::ofstream text(root / "text.txt");
    std::mt19937_64 rng(9);
    const char* words[] = {"dicunt", "dixit", "aqua", "aquam", "sublatus", "tollit", "et", "in", "est"};
    for (int i = 0; i < 4000; ++i) text << words[std::min(rng() % 9, rng() % 9)] << (i % 12 == 11 ? ".\n" : " ");
  }
  auto run = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  const std::string text = (root / "text.txt").string(), lex = (root / "lex.tsv").string();
  int codes = 0;
  for (const char* tag : {"a", "b"}) {
    const fs::path out = root / tag;
    codes += run({"analyze", "--text", text, "--lexicon", lex, "--out", (out / "analyze").string()});
    codes += run({"fit", "--text", text, "--lexicon", lex, "--seed", "42", "--out", (out / "fit").string()});
    codes += run({"fit", "--coverage", (out / "analyze" / "word_coverage.csv").string(), "--seed", "7", "--out",
                  (out / "fit_words").string()});
  }
  const auto a = read_tree(root / "a"), b = read_tree(root / "b");
  const bool same = codes == 0 && !a.empty() && a == b;
  fs::remove_all(root);
  return verdict(same, std::to_string(a.size()) + " output files per run, exit codes sum " +
                           std::to_string(codes) + (same ? ", byte-identical" : ", outputs differ"));
}

std::optional<fs::path> env_path(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return fs::path(v);
}

Verdict text_reference_counts() {
  const auto lex_path = env_path("INFLGRAPH_WORDS_LEXICON");
  const auto text_path = env_path("INFLGRAPH_DBG_TEXT");
  if (!lex_path || !text_path) {
    return {Outcome::skip, "set INFLGRAPH_WORDS_LEXICON and INFLGRAPH_DBG_TEXT to run"};
  }
  const Lexicon lex = load_lexicon(*lex_path);
  auto ts = truncate(normalize_file(*text_path), kReferenceTextLength);
  const auto a = cli::analyze_tokens(std::move(ts), lex, UnknownPolicy::self_headword);
  const auto cw = coverage(a.word_ranks);
  const auto cg = coverage(a.group_ranks);
  const double got[] = {static_cast<double>(a.graph.headword_count()), static_cast<double>(a.graph.form_count()),
                        static_cast<double>(a.graph.edge_count()), static_cast<double>(a.components.size()),
                        static_cast<double>(coverage_threshold(cw, 0.95)),
                        static_cast<double>(coverage_threshold(cg, 0.95)),
                        static_cast<double>(coverage_threshold(cw, 0.98)),
                        static_cast<double>(coverage_threshold(cg, 0.98))};
  const double want[] = {5377, 10977, 15349, 3740, 8415, 1669, 9954, 2714};
  const char* names[] = {"A", "B", "E", "components", "w95", "g95", "w98", "g98"};
  bool ok = true;
  std::ostringstream d;
  for (std::size_t i = 0; i < 8; ++i) {
    ok = ok && within(got[i], want[i], 0.05);
    d << names[i] << '=' << got[i] << "/" << want[i] << ' ';
  }
  d << "(+/- 5%)";
  return verdict(ok, d.str());
}

Verdict dictionary_reference() {
  const auto lex_path = env_path("INFLGRAPH_DICT_LEXICON");
  if (!lex_path) return {Outcome::skip, "set INFLGRAPH_DICT_LEXICON to run"};
  const Lexicon lex = load_lexicon(*lex_path);
  const auto g = build_graph(lex);
  const auto comps = connected_components(g);
  const auto fit = fit_power_law(component_size_histogram(comps));
  const bool ok = within(static_cast<double>(comps.size()), 50847, 0.05) && std::abs(fit.tau - 3.32) <= 0.15;
  return verdict(ok, "components=" + std::to_string(comps.size()) + " (50847 +/- 5%), tau=" + fmt(fit.tau, 4) +
                         " (3.32 +/- 0.15)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"component oracle equivalence", component_oracle},
      {"mini-corpus end-to-end", mini_corpus},
      {"coverage dominance", coverage_dominance},
      {"zipf closed form", zipf_closed_form},
      {"digamma recurrence", digamma_recurrence},
      {"fit recovery", fit_recovery},
      {"power-law recovery", power_law_recovery},
      {"determinism", determinism},
      {"text reference counts (data)", text_reference_counts},
      {"dictionary reference (data)", dictionary_reference},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIP";
    if (v.outcome == Outcome::fail) ++failures;
    std::cout << '[' << tag << "] " << name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
