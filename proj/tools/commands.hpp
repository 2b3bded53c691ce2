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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "inflgraph/inflgraph.hpp"

namespace inflgraph::cli {

struct RunConfig {
  std::vector<std::filesystem::path> texts;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> paradigms;
  std::optional<std::filesystem::path> stems;
  std::optional<std::filesystem::path> coverage;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::size_t> truncate;
  NormalizationConfig normalization;
  UnknownPolicy unknown = UnknownPolicy::self_headword;
  std::vector<double> thresholds{0.95, 0.98};
  std::size_t exclude_largest = kDefaultExcludeLargest;
  std::uint64_t seed = 42;
  std::size_t starts = 16;
  std::size_t fit_samples = 500;
  std::size_t curve_samples = 1000;
  RankKind fit_kind = RankKind::groups;
  ExportFormat format = ExportFormat::edge_list;
};

/// A set of output files written all-or-nothing: if any write fails the
/// files already written are removed.
class OutputBundle {
 public:
  explicit OutputBundle(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void add(std::string name, std::string content);
  void merge(OutputBundle other);
  /// Throws IoError after removing whatever it had written.
  void commit() const;

  const std::filesystem::path& dir() const noexcept { return dir_; }
  const std::vector<std::pair<std::filesystem::path, std::string>>& files() const noexcept {
    return files_;
  }

 private:
  std::filesystem::path dir_;
  std::vector<std::pair<std::filesystem::path, std::string>> files_;
};

/// Everything the analyze pipeline computes for one text.
struct TextAnalysis {
  TokenStream tokens;
  FrequencyTable word_freq;
  InflectionGraph graph;
  Components components;
  GroupFrequencies group_freq;
  RankFrequency word_ranks;
  RankFrequency group_ranks;
  std::uint64_t unknown_tokens = 0;
};

/// The five stages: normalize -> word list -> headword lookup ->
/// graph + components -> group frequencies.
TextAnalysis analyze_tokens(TokenStream tokens, const Lexicon& lex, UnknownPolicy policy);

OutputBundle cmd_analyze(const RunConfig& config, std::ostream& report);
OutputBundle cmd_fit(const RunConfig& config, std::ostream& report);
OutputBundle cmd_dictgraph(const RunConfig& config, std::ostream& report);
/// Writes to `report` when no output directory is configured.
OutputBundle cmd_export(const RunConfig& config, std::ostream& report);

/// Parses arguments and runs a subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inflgraph::cli
