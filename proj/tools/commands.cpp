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

#include "commands.hpp"

#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace inflgraph::cli {
namespace fs = std::filesystem;

namespace {

template <class Writer>
std::string render(Writer&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

Lexicon load_configured_lexicon(const RunConfig& config) {
  if (config.lexicon) return load_lexicon(*config.lexicon, config.normalization);
  if (config.paradigms && config.stems) {
    return generate_forms(load_stems(*config.stems), load_paradigms(*config.paradigms),
                          config.normalization);
  }
  throw ConfigError("need --lexicon, or both --paradigms and --stems");
}

TokenStream load_text(const fs::path& path, const RunConfig& config) {
  auto ts = normalize_file(path, config.normalization);
  if (config.truncate) ts = truncate(ts, *config.truncate);
  return ts;
}

const fs::path& require_out(const RunConfig& config) {
  if (!config.out_dir) throw ConfigError("--out DIR is required");
  return *config.out_dir;
}

std::string kind_name(RankKind kind) { return kind == RankKind::words ? "words" : "groups"; }
std::string file_prefix(RankKind kind) { return kind == RankKind::words ? "word" : "group"; }

OutputBundle analyze_one(const fs::path& text, const Lexicon& lex, const RunConfig& config,
                         const fs::path& dir, std::ostream& report) {
  const TextAnalysis a = analyze_tokens(load_text(text, config), lex, config.unknown);
  const auto& g = a.graph;
  const std::uint64_t n_tokens = a.tokens.size();
  const double unknown_rate =
      n_tokens == 0 ? 0.0 : static_cast<double>(a.unknown_tokens) / static_cast<double>(n_tokens);

  std::ostringstream summary;
  summary << "source=" << a.tokens.source_name << '\n'
          << "tokens=" << n_tokens << " original_tokens=" << a.tokens.original_token_count
          << " distinct_words=" << a.word_freq.entries.size() << '\n'
          << "A=" << g.headword_count() << " B=" << g.form_count() << " E=" << g.edge_count()
          << " components=" << a.components.size() << '\n'
          << "unknown_tokens=" << a.unknown_tokens << " unknown_rate=" << csv::format_real(unknown_rate)
          << " skipped_tokens=" << a.group_freq.skipped_tokens << '\n';

  OutputBundle bundle(dir);
  bundle.add("graph_stats.csv", render([&](std::ostream& o) {
               o << "tokens,distinct_words,headwords,forms,edges,components,unknown_tokens,"
                    "unknown_rate,skipped_tokens\n"
                 << n_tokens << ',' << a.word_freq.entries.size() << ',' << g.headword_count() << ','
                 << g.form_count() << ',' << g.edge_count() << ',' << a.components.size() << ','
                 << a.unknown_tokens << ',' << csv::format_real(unknown_rate) << ','
                 << a.group_freq.skipped_tokens << '\n';
             }));
  bundle.add("headword_degrees.csv", render([&](std::ostream& o) {
               csv::write_histogram(o, headword_degree_distribution(g), "degree");
             }));
  bundle.add("component_sizes.csv", render([&](std::ostream& o) {
               csv::write_histogram(o, component_size_histogram(a.components).counts, "m");
             }));
  bundle.add("word_rank_frequency.csv",
             render([&](std::ostream& o) { csv::write_rank_frequency(o, a.word_ranks); }));
  bundle.add("group_rank_frequency.csv",
             render([&](std::ostream& o) { csv::write_rank_frequency(o, a.group_ranks); }));

  std::ostringstream thresholds;
  thresholds << "p,kind,k\n";
  for (const RankFrequency* rf : {&a.word_ranks, &a.group_ranks}) {
    const std::string prefix = file_prefix(rf->kind);
    if (rf->size() == 0) {
      bundle.add(prefix + "_coverage.csv", "k,coverage\n");
      bundle.add(prefix + "_normalized.csv", "x,c\n");
      continue;
    }
    const CoverageCurve cov = coverage(*rf);
    bundle.add(prefix + "_coverage.csv",
               render([&](std::ostream& o) { csv::write_coverage(o, cov); }));
    bundle.add(prefix + "_normalized.csv", render([&](std::ostream& o) {
                 csv::write_points(o, sample_normalized(cov, config.curve_samples));
               }));
  }
  for (const double p : config.thresholds) {
    for (const RankFrequency* rf : {&a.word_ranks, &a.group_ranks}) {
      if (rf->size() == 0) continue;
      const auto k = coverage_threshold(coverage(*rf), p);
      thresholds << csv::format_real(p) << ',' << kind_name(rf->kind) << ',' << k << '\n';
      summary << "threshold p=" << csv::format_real(p) << ' ' << kind_name(rf->kind) << " k=" << k
              << '\n';
    }
  }
  bundle.add("thresholds.csv", thresholds.str());
  bundle.add("summary.txt", summary.str());
  report << summary.str();
  return bundle;
}

std::vector<CurvePoint> fit_points(const RunConfig& config) {
  std::vector<double> k_curve;
  if (config.coverage) {
    std::ifstream in(*config.coverage, std::ios::binary);
    if (!in) throw IoError("cannot open coverage file: " + config.coverage->string());
    auto points = csv::read_curve(in, &k_curve);
    if (k_curve.empty()) return points;
  } else {
    if (config.texts.size() != 1) throw ConfigError("fit needs --coverage FILE or exactly one --text");
    const Lexicon lex = load_configured_lexicon(config);
    const TextAnalysis a = analyze_tokens(load_text(config.texts.front(), config), lex, config.unknown);
    const RankFrequency& rf = config.fit_kind == RankKind::words ? a.word_ranks : a.group_ranks;
    if (rf.size() == 0) throw DomainError("degenerate coverage: the text has no ranked entries");
    k_curve = coverage(rf).values();
  }
  if (k_curve.size() < 3) {
    throw DomainError("degenerate coverage: a single ranked entry cannot be fitted");
  }
  return csv::resample_curve(k_curve, config.fit_samples);
}

std::string fit_summary(const char* label, const FitResult& fit) {
  std::ostringstream o;
  o << label << ": alpha=" << csv::format_real(fit.params.alpha)
    << " beta=" << csv::format_real(fit.params.beta) << " gamma=" << csv::format_real(fit.params.gamma)
    << " delta=" << csv::format_real(fit.params.delta) << " eta=" << csv::format_real(fit.eta)
    << " sse=" << csv::format_real(fit.sse) << " converged=" << (fit.converged ? "true" : "false")
    << '\n';
  return o.str();
}

InflectionGraph configured_graph(const RunConfig& config) {
  const Lexicon lex = load_configured_lexicon(config);
  if (config.texts.empty()) return build_graph(lex);
  if (config.texts.size() != 1) throw ConfigError("export takes at most one --text");
  const TokenStream ts = load_text(config.texts.front(), config);
  const FrequencyTable freq = word_frequencies(ts);
  std::vector<std::string> words;
  for (const auto& entry : freq.entries) words.push_back(entry.first);
  return build_graph(words, lex, config.unknown);
}

}  // namespace

void OutputBundle::add(std::string name, std::string content) {
  files_.emplace_back(dir_ / name, std::move(content));
}

void OutputBundle::merge(OutputBundle other) {
  for (auto& f : other.files_) files_.push_back(std::move(f));
}

void OutputBundle::commit() const {
  std::vector<fs::path> written;
  auto rollback = [&] {
    std::error_code ignored;
    for (const auto& p : written) fs::remove(p, ignored);
  };
  try {
    for (const auto& [path, content] : files_) {
      if (path.has_parent_path()) fs::create_directories(path.parent_path());
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write " + path.string());
      written.push_back(path);
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.close();
      if (!out) throw IoError("failed writing " + path.string());
    }
  } catch (const IoError&) {
    rollback();
    throw;
  } catch (const fs::filesystem_error& e) {
    rollback();
    throw IoError(e.what());
  }
}

TextAnalysis analyze_tokens(TokenStream tokens, const Lexicon& lex, UnknownPolicy policy) {
  TextAnalysis a;
  a.tokens = std::move(tokens);
  a.word_freq = word_frequencies(a.tokens);

  std::vector<std::string> words;
  words.reserve(a.word_freq.entries.size());
  for (const auto& [word, count] : a.word_freq.entries) {
    words.push_back(word);
    if (!lex.contains(word)) a.unknown_tokens += count;
  }

  a.graph = build_graph(words, lex, policy);
  a.components = connected_components(a.graph);
  a.group_freq = group_occurrences(a.tokens, a.graph, a.components);
  a.word_ranks = rank_frequency(a.word_freq);
  a.group_ranks = rank_frequency(a.group_freq, a.graph, a.components);
  return a;
}

OutputBundle cmd_analyze(const RunConfig& config, std::ostream& report) {
  if (config.texts.empty()) throw ConfigError("analyze needs --text");
  if (!config.lexicon) throw ConfigError("analyze needs --lexicon");
  for (const double p : config.thresholds) {
    if (!(p > 0.0 && p <= 1.0)) throw ConfigError("thresholds must lie in (0, 1]");
  }
  const fs::path& out = require_out(config);
  const Lexicon lex = load_configured_lexicon(config);

  if (config.texts.size() == 1) return analyze_one(config.texts.front(), lex, config, out, report);

  std::set<std::string> stems;
  for (const auto& t : config.texts) {
    if (!stems.insert(t.stem().string()).second) {
      throw ConfigError("two input texts share the name '" + t.stem().string() + "'");
    }
  }
  // One pipeline per text; reports are collected and printed in input order.
  std::vector<std::future<std::pair<OutputBundle, std::string>>> jobs;
  for (const auto& t : config.texts) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::ostringstream text_report;
      auto bundle = analyze_one(t, lex, config, out / t.stem(), text_report);
      return std::make_pair(std::move(bundle), text_report.str());
    }));
  }
  OutputBundle all(out);
  for (auto& job : jobs) {
    auto [bundle, text_report] = job.get();
    report << text_report;
    all.merge(std::move(bundle));
  }
  return all;
}

OutputBundle cmd_fit(const RunConfig& config, std::ostream& report) {
  const fs::path& out = require_out(config);
  const auto points = fit_points(config);

  FitOptions options;
  options.seed = config.seed;
  options.starts = config.starts;
  const FitResult four = fit_coverage_model(points, options);
  options.model = CoverageModel::two_parameter;
  const FitResult two = fit_coverage_model(points, options);

  OutputBundle bundle(out);
  bundle.add("fit.csv", render([&](std::ostream& o) { csv::write_fit(o, four); }));
  bundle.add("fit_two_parameter.csv", render([&](std::ostream& o) { csv::write_fit(o, two); }));
  report << fit_summary("four-parameter", four) << fit_summary("two-parameter", two);
  return bundle;
}

OutputBundle cmd_dictgraph(const RunConfig& config, std::ostream& report) {
  const fs::path& out = require_out(config);
  const Lexicon lex = load_configured_lexicon(config);
  const InflectionGraph g = build_graph(lex);
  const Components comps = connected_components(g);
  const SizeHistogram hist = component_size_histogram(comps);

  std::ostringstream summary;
  summary << "A=" << g.headword_count() << " B=" << g.form_count() << " E=" << g.edge_count()
          << " components=" << comps.size() << '\n';

  OutputBundle bundle(out);
  bundle.add("dict_stats.csv", render([&](std::ostream& o) {
               o << "headwords,forms,edges,components\n"
                 << g.headword_count() << ',' << g.form_count() << ',' << g.edge_count() << ','
                 << comps.size() << '\n';
             }));
  bundle.add("size_histogram.csv",
             render([&](std::ostream& o) { csv::write_histogram(o, hist.counts, "m"); }));
  bundle.add("headword_degrees.csv", render([&](std::ostream& o) {
               csv::write_histogram(o, headword_degree_distribution(g), "degree");
             }));

  try {
    const PowerLawFit fit = fit_power_law(hist, config.exclude_largest);
    bundle.add("power_law.csv", render([&](std::ostream& o) { csv::write_power_law(o, fit); }));
    summary << "tau=" << csv::format_real(fit.tau) << " points_used=" << fit.points_used
            << " excluded_sizes=" << fit.excluded_sizes << '\n';
  } catch (const DomainError& e) {
    bundle.add("power_law.csv", "tau,intercept,points_used\n");
    summary << "tau=n/a (" << e.what() << ")\n";
  }

  if (!comps.groups.empty()) {
    const WordGroup* largest = &comps.groups.front();
    for (const auto& group : comps.groups) {
      if (group.headword_members.size() > largest->headword_members.size()) largest = &group;
    }
    const InflectionGraph sub = induced_subgraph(g, *largest);
    bundle.add("largest_component.tsv",
               render([&](std::ostream& o) { export_graph(sub, ExportFormat::edge_list, o); }));
    summary << "largest_component headwords=" << largest->headword_members.size()
            << " forms=" << largest->form_members.size() << '\n';
  } else {
    bundle.add("largest_component.tsv", "");
  }
  bundle.add("summary.txt", summary.str());
  report << summary.str();
  return bundle;
}

OutputBundle cmd_export(const RunConfig& config, std::ostream& report) {
  const InflectionGraph g = configured_graph(config);
  const std::string content = render([&](std::ostream& o) { export_graph(g, config.format, o); });
  if (!config.out_dir) {
    report << content;
    if (!report) throw IoError("failed writing graph to standard output");
    return OutputBundle(fs::path{});
  }
  OutputBundle bundle(*config.out_dir);
  bundle.add(config.format == ExportFormat::dot ? "graph.dot" : "graph.tsv", content);
  return bundle;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inflection-graph corpus analysis: word groups, coverage curves and fits"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> texts;
  std::string lexicon, paradigms, stems, coverage_file, out_dir, unknown = "self", format = "edge_list";
  std::string kind = "groups";
  std::size_t truncate_n = 0;
  bool fold = false;

  auto add_inputs = [&](CLI::App* cmd, bool text_required) {
    auto* t = cmd->add_option("--text", texts, "UTF-8 text file")->check(CLI::ExistingFile);
    if (text_required) t->required();
    cmd->add_option("--lexicon", lexicon, "form<TAB>headword[,headword...] file")->check(CLI::ExistingFile);
    cmd->add_option("--truncate", truncate_n, "keep only the first N tokens");
    cmd->add_flag("--fold-uv-ij", fold, "fold v->u and j->i after lowercasing");
    cmd->add_option("--unknown", unknown, "unknown-token policy: self|drop")
        ->check(CLI::IsMember({"self", "drop"}))
        ->capture_default_str();
  };
  auto add_generation = [&](CLI::App* cmd) {
    cmd->add_option("--paradigms", paradigms, "paradigm file ([name] sections of endings)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--stems", stems, "headword<TAB>stem<TAB>paradigm file")->check(CLI::ExistingFile);
  };

  auto* analyze = app.add_subcommand("analyze", "graph, word groups, rank-frequency and coverage of texts");
  add_inputs(analyze, true);
  analyze->add_option("--thresholds", config.thresholds, "coverage levels p for the threshold table")
      ->delimiter(',')
      ->capture_default_str();
  analyze->add_option("--samples", config.curve_samples, "points of the normalized curves")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  analyze->add_option("--out", out_dir, "output directory")->required();

  auto* fit = app.add_subcommand("fit", "fit x^g + x^a (1 - x^d)^b to normalized coverage");
  add_inputs(fit, false);
  add_generation(fit);
  fit->add_option("--coverage", coverage_file, "k,coverage or x,c CSV written by analyze")
      ->check(CLI::ExistingFile);
  fit->add_option("--kind", kind, "curve fitted when computing from --text: words|groups")
      ->check(CLI::IsMember({"words", "groups"}))
      ->capture_default_str();
  fit->add_option("--samples", config.fit_samples, "evenly spaced x samples of the curve")
      ->check(CLI::Range(8, 10000000))
      ->capture_default_str();
  fit->add_option("--seed", config.seed, "seed for the multi-start perturbations")->capture_default_str();
  fit->add_option("--starts", config.starts, "number of simplex starts")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  fit->add_option("--out", out_dir, "output directory")->required();

  auto* dict = app.add_subcommand("dictgraph", "inflection graph of a whole dictionary");
  dict->add_option("--lexicon", lexicon, "full form<TAB>headword list")->check(CLI::ExistingFile);
  add_generation(dict);
  dict->add_flag("--fold-uv-ij", fold, "fold v->u and j->i after lowercasing");
  dict->add_option("--exclude-largest", config.exclude_largest,
                   "largest component sizes left out of the power-law fit")
      ->capture_default_str();
  dict->add_option("--out", out_dir, "output directory")->required();

  auto* exp = app.add_subcommand("export", "write the inflection graph as an edge list or DOT");
  add_inputs(exp, false);
  add_generation(exp);
  exp->add_option("--format", format, "edge_list|dot")
      ->check(CLI::IsMember({"edge_list", "dot"}))
      ->capture_default_str();
  exp->add_option("--out", out_dir, "output directory (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  for (const auto& t : texts) config.texts.emplace_back(t);
  if (!lexicon.empty()) config.lexicon = lexicon;
  if (!paradigms.empty()) config.paradigms = paradigms;
  if (!stems.empty()) config.stems = stems;
  if (!coverage_file.empty()) config.coverage = coverage_file;
  if (!out_dir.empty()) config.out_dir = out_dir;
  for (auto* cmd : {analyze, fit, exp}) {
    if (cmd->parsed() && cmd->count("--truncate") > 0) config.truncate = truncate_n;
  }
  if (fold) config.normalization.folding = OrthographyFolding::u_v_and_i_j;
  config.fit_kind = kind == "words" ? RankKind::words : RankKind::groups;

  try {
    config.unknown = parse_unknown_policy(unknown);
    config.format = parse_export_format(format);
    OutputBundle bundle(fs::path{});
    if (analyze->parsed()) {
      bundle = cmd_analyze(config, out);
    } else if (fit->parsed()) {
      bundle = cmd_fit(config, out);
    } else if (dict->parsed()) {
      bundle = cmd_dictgraph(config, out);
    } else {
      bundle = cmd_export(config, out);
    }
    bundle.commit();
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("inflgraph");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace inflgraph::cli
