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

// Parametric fits: the four-parameter normalized-coverage model
//
//   f(x) = x^gamma + x^alpha (1 - x^delta)^beta,
//
// its difficulty parameter eta = min(alpha, gamma), and the power-law
// exponent of the component-size histogram.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "inflgraph/graph.hpp"

namespace inflgraph {

struct FitParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Table II averages: the first multi-start point.
inline constexpr FitParams kCentroidParams{0.35, 1.33, 0.32, 0.52};

/// x^gamma + x^alpha (1 - x^delta)^beta for x in [0, 1], params > 0.
/// f(0) = 0 and f(1) = 1 exactly.
double eval_coverage_model(const FitParams& p, double x);

/// min(alpha, gamma): small eta means a steep start of the coverage curve.
double compute_eta(const FitParams& p);

enum class CoverageModel {
  four_parameter,
  /// gamma = delta = 1 held fixed: f(x) = x + x^alpha (1 - x)^beta.
  two_parameter,
};

struct FitOptions {
  CoverageModel model = CoverageModel::four_parameter;
  std::size_t starts = 16;
  std::uint64_t seed = 42;
  /// Random starts are the centroid scaled by exp(u), u ~ U(-spread, spread)
  /// per parameter.
  double perturbation = 0.5;
  double tolerance = 1e-9;
  std::size_t max_evaluations = 20000;
  /// Run starts on worker threads. The result does not depend on this.
  bool parallel = true;
};

struct FitResult {
  FitParams params;
  double sse = 0.0;
  double eta = 0.0;
  std::size_t n_points = 0;
  bool converged = false;
  std::size_t best_start = 0;
  /// Sum of squared residuals at each start point, before any search.
  std::vector<double> start_sse;
};

using CurvePoint = std::pair<double, double>;

/// Least-squares fit over positive parameters by Nelder-Mead on
/// log-parameters with multiple starts. Needs >= 8 points with distinct
/// x in [0, 1] and c in [0, 1]; throws DomainError otherwise.
FitResult fit_coverage_model(std::span<const CurvePoint> points, const FitOptions& options = {});

/// Sum of squared residuals of `p` over `points`.
double coverage_sse(const FitParams& p, std::span<const CurvePoint> points);

struct PowerLawFit {
  double tau = 0.0;
  /// Natural-log intercept: ln H(m) ~ intercept - tau ln m.
  double intercept = 0.0;
  std::size_t points_used = 0;
  std::size_t excluded_sizes = 0;
};

inline constexpr std::size_t kDefaultExcludeLargest = 5;

/// Ordinary least squares of ln H(m) on ln m after dropping the
/// `exclude_largest` largest sizes. Throws DomainError when fewer than two
/// sizes remain.
PowerLawFit fit_power_law(const SizeHistogram& h, std::size_t exclude_largest = kDefaultExcludeLargest);

}  // namespace inflgraph
