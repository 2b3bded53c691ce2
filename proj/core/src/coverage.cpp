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

#include "inflgraph/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

RankFrequency sorted_ranking(RankKind kind,
                             std::vector<std::pair<std::uint64_t, std::string>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  RankFrequency rf;
  rf.kind = kind;
  rf.counts.reserve(entries.size());
  rf.labels.reserve(entries.size());
  for (auto& [count, label] : entries) {
    rf.counts.push_back(count);
    rf.labels.push_back(std::move(label));
  }
  return rf;
}

}  // namespace

GroupFrequencies group_occurrences(const TokenStream& ts, const InflectionGraph& g,
                                   const Components& components) {
  GroupFrequencies out;
  out.counts.assign(components.size(), 0);
  for (const auto& token : ts.tokens) {
    const auto form = g.find_form(token);
    if (!form) {
      ++out.skipped_tokens;
      continue;
    }
    ++out.counts[components.group_of_form[*form]];
    ++out.total;
  }
  return out;
}

RankFrequency rank_frequency(const FrequencyTable& freq) {
  std::vector<std::pair<std::uint64_t, std::string>> entries;
  entries.reserve(freq.entries.size());
  for (const auto& [word, count] : freq.entries) {
    if (count > 0) entries.emplace_back(count, word);
  }
  return sorted_ranking(RankKind::words, std::move(entries));
}

RankFrequency rank_frequency(const GroupFrequencies& freq, const InflectionGraph& g,
                             const Components& components) {
  std::vector<std::pair<std::uint64_t, std::string>> entries;
  for (std::size_t i = 0; i < freq.counts.size() && i < components.size(); ++i) {
    if (freq.counts[i] == 0) continue;
    entries.emplace_back(freq.counts[i],
                         g.headwords()[components.groups[i].headword_members.front()]);
  }
  return sorted_ranking(RankKind::groups, std::move(entries));
}

CoverageCurve::CoverageCurve(const RankFrequency& rf) {
  if (rf.counts.empty()) throw DomainError("coverage of an empty rank-frequency list");
  cumulative_.resize(rf.counts.size() + 1, 0);
  std::partial_sum(rf.counts.begin(), rf.counts.end(), cumulative_.begin() + 1);
  total_ = cumulative_.back();
  values_.reserve(cumulative_.size());
  const auto denom = static_cast<double>(total_);
  for (const auto c : cumulative_) values_.push_back(static_cast<double>(c) / denom);
}

CoverageCurve coverage(const RankFrequency& rf) { return CoverageCurve(rf); }

double interpolate_on_grid(std::span<const double> values, double x) {
  if (values.empty()) throw DomainError("interpolation over an empty grid");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("normalized coverage requires x in [0, 1]");
  const auto length = values.size() - 1;
  const double position = x * static_cast<double>(length);
  // Snap to the grid so k/L lands exactly on C(k).
  const double nearest = std::round(position);
  if (std::abs(position - nearest) <= 1e-12 * static_cast<double>(length)) {
    return values[static_cast<std::size_t>(nearest)];
  }
  const auto k = static_cast<std::size_t>(std::floor(position));
  if (k >= length) return values[length];
  const double frac = position - static_cast<double>(k);
  return values[k] + frac * (values[k + 1] - values[k]);
}

std::vector<double> even_grid(std::size_t samples) {
  if (samples < 2) throw DomainError("need at least 2 samples of the normalized curve");
  std::vector<double> xs;
  xs.reserve(samples);
  const double denom = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i + 1 < samples; ++i) xs.push_back(static_cast<double>(i) / denom);
  xs.push_back(1.0);
  return xs;
}

double normalized_coverage(const CoverageCurve& cov, double x) {
  return interpolate_on_grid(cov.values(), x);
}

std::vector<std::pair<double, double>> sample_normalized(const CoverageCurve& cov,
                                                         std::size_t samples) {
  std::vector<std::pair<double, double>> points;
  points.reserve(samples);
  for (const double x : even_grid(samples)) points.emplace_back(x, normalized_coverage(cov, x));
  return points;
}

std::size_t coverage_threshold(const CoverageCurve& cov, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("coverage threshold requires p in (0, 1]");
  const auto& values = cov.values();
  const auto it = std::lower_bound(values.begin(), values.end(), p);
  if (it == values.end()) return cov.length();
  return static_cast<std::size_t>(it - values.begin());
}

}  // namespace inflgraph
