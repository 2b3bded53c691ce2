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

#include "inflgraph/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

class Search {
 public:
  Search(const Objective& f, const SimplexOptions& options) : f_(f), options_(options) {}

  double eval(const std::vector<double>& x) {
    ++evaluations_;
    const double v = f_(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }

  bool budget_left() const { return evaluations_ < options_.max_evaluations; }
  std::size_t evaluations() const { return evaluations_; }

  // One Nelder-Mead run from a fresh axis-aligned simplex at `best`.
  // Returns true if it reached the diameter tolerance.
  bool run(Vertex& best) {
    const std::size_t n = best.x.size();
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(best);
    for (std::size_t i = 0; i < n; ++i) {
      Vertex v{best.x, 0.0};
      v.x[i] += options_.initial_step;
      v.f = eval(v.x);
      simplex.push_back(std::move(v));
    }

    std::vector<double> centroid(n), trial(n);
    auto along = [&](double t) {
      // centroid + t * (centroid - worst)
      for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + t * (centroid[j] - simplex[n].x[j]);
      return trial;
    };

    while (true) {
      std::stable_sort(simplex.begin(), simplex.end(),
                       [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (diameter(simplex) < options_.tolerance) {
        best = simplex.front();
        return true;
      }
      if (!budget_left()) {
        best = simplex.front();
        return false;
      }

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
      }
      for (auto& c : centroid) c /= static_cast<double>(n);

      auto reflected = along(kReflect);
      const double fr = eval(reflected);
      if (fr < simplex[0].f) {
        auto expanded = along(kExpand);
        const double fe = eval(expanded);
        if (fe < fr) {
          simplex[n] = {std::move(expanded), fe};
        } else {
          simplex[n] = {std::move(reflected), fr};
        }
        continue;
      }
      if (fr < simplex[n - 1].f) {
        simplex[n] = {std::move(reflected), fr};
        continue;
      }
      if (fr < simplex[n].f) {
        auto outside = along(kReflect * kContract);
        const double fo = eval(outside);
        if (fo <= fr) {
          simplex[n] = {std::move(outside), fo};
          continue;
        }
      } else {
        auto inside = along(-kContract);
        const double fi = eval(inside);
        if (fi < simplex[n].f) {
          simplex[n] = {std::move(inside), fi};
          continue;
        }
      }
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          simplex[i].x[j] = simplex[0].x[j] + kShrink * (simplex[i].x[j] - simplex[0].x[j]);
        }
        simplex[i].f = eval(simplex[i].x);
      }
    }
  }

 private:
  static double diameter(const std::vector<Vertex>& simplex) {
    double d = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      for (std::size_t j = 0; j < simplex[i].x.size(); ++j) {
        d = std::max(d, std::abs(simplex[i].x[j] - simplex[0].x[j]));
      }
    }
    return d;
  }

  const Objective& f_;
  const SimplexOptions& options_;
  std::size_t evaluations_ = 0;
};

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& options) {
  if (start.empty()) throw DomainError("nelder_mead needs at least one parameter");
  if (!(options.initial_step > 0.0) || !(options.tolerance > 0.0)) {
    throw DomainError("nelder_mead step and tolerance must be positive");
  }

  Search search(f, options);
  Vertex best{std::move(start), 0.0};
  best.f = search.eval(best.x);

  SimplexResult result;
  result.start_value = best.f;
  bool converged = search.run(best);
  for (std::size_t r = 0; r < options.max_restarts && converged && search.budget_left(); ++r) {
    const double before = best.f;
    converged = search.run(best);
    if (!(best.f < before)) break;
  }

  result.point = std::move(best.x);
  result.value = best.f;
  result.evaluations = search.evaluations();
  result.converged = converged;
  return result;
}

}  // namespace inflgraph
