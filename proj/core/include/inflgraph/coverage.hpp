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

// Rank-frequency lists and coverage curves for words and word groups.
//
// Coverage after the k top-ranked entries is an exact integer prefix sum
// divided once by the total, so curves are bit-reproducible.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inflgraph/corpus.hpp"
#include "inflgraph/graph.hpp"

namespace inflgraph {

/// Token-level occurrence counts per word group (indexed by group_id).
struct GroupFrequencies {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  /// Tokens with no form vertex in the graph (only under the drop policy).
  std::uint64_t skipped_tokens = 0;
};

/// Maps every token to its form vertex and then to that vertex's group.
GroupFrequencies group_occurrences(const TokenStream& ts, const InflectionGraph& g,
                                   const Components& components);

enum class RankKind { words, groups };

struct RankFrequency {
  RankKind kind = RankKind::words;
  std::vector<std::uint64_t> counts;  ///< n(r), r = 1..L, nonincreasing, all > 0
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return counts.size(); }
};

/// Ties broken by label.
RankFrequency rank_frequency(const FrequencyTable& freq);

/// Group labels are the group's smallest headword. Groups with zero
/// occurrences are left out.
RankFrequency rank_frequency(const GroupFrequencies& freq, const InflectionGraph& g,
                             const Components& components);

class CoverageCurve {
 public:
  /// Throws DomainError if rf is empty.
  explicit CoverageCurve(const RankFrequency& rf);

  /// L, the number of ranked entries.
  std::size_t length() const noexcept { return cumulative_.size() - 1; }
  std::uint64_t total() const noexcept { return total_; }

  /// Sum of the k top counts, k = 0..L.
  std::uint64_t cumulative(std::size_t k) const { return cumulative_.at(k); }
  /// C(k), k = 0..L.
  double operator()(std::size_t k) const { return values_.at(k); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<std::uint64_t> cumulative_;
  std::vector<double> values_;
  std::uint64_t total_ = 0;
};

CoverageCurve coverage(const RankFrequency& rf);

/// Linear interpolation of the points (k/L, values[k]), k = 0..L, at x in [0, 1].
double interpolate_on_grid(std::span<const double> values, double x);

/// `samples` evenly spaced x values from 0 to 1 inclusive (the last is exactly 1).
std::vector<double> even_grid(std::size_t samples);

/// c(x): linear interpolation of the points (k/L, C(k)). x in [0, 1].
double normalized_coverage(const CoverageCurve& cov, double x);

/// `samples` evenly spaced (x, c(x)) pairs from x = 0 to x = 1 inclusive.
std::vector<std::pair<double, double>> sample_normalized(const CoverageCurve& cov,
                                                         std::size_t samples);

/// Smallest k with C(k) >= p, p in (0, 1].
std::size_t coverage_threshold(const CoverageCurve& cov, double p);

}  // namespace inflgraph
