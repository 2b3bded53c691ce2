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

#include "inflgraph/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <thread>

#include "inflgraph/error.hpp"
#include "inflgraph/simplex.hpp"

namespace inflgraph {
namespace {

constexpr std::size_t kMinFitPoints = 8;

// Interior points with ln x precomputed; x = 0 and x = 1 fit exactly for
// every parameter set and contribute only their fixed residual.
struct PreparedCurve {
  std::vector<double> log_x;
  std::vector<double> c;
  double boundary_sse = 0.0;
};

PreparedCurve prepare(std::span<const CurvePoint> points) {
  PreparedCurve out;
  for (const auto& [x, c] : points) {
    if (x == 0.0) {
      out.boundary_sse += c * c;
    } else if (x == 1.0) {
      out.boundary_sse += (c - 1.0) * (c - 1.0);
    } else {
      out.log_x.push_back(std::log(x));
      out.c.push_back(c);
    }
  }
  return out;
}

double model_at(const FitParams& p, double log_x) {
  const double tail = std::exp(p.beta * std::log1p(-std::exp(p.delta * log_x)));
  return std::exp(p.gamma * log_x) + std::exp(p.alpha * log_x) * tail;
}

double sse(const PreparedCurve& curve, const FitParams& p) {
  double total = curve.boundary_sse;
  for (std::size_t i = 0; i < curve.log_x.size(); ++i) {
    const double r = curve.c[i] - model_at(p, curve.log_x[i]);
    total += r * r;
  }
  return total;
}

FitParams from_log(std::span<const double> v, CoverageModel model) {
  if (model == CoverageModel::two_parameter) return {std::exp(v[0]), std::exp(v[1]), 1.0, 1.0};
  return {std::exp(v[0]), std::exp(v[1]), std::exp(v[2]), std::exp(v[3])};
}

std::vector<double> to_log(const FitParams& p, CoverageModel model) {
  if (model == CoverageModel::two_parameter) return {std::log(p.alpha), std::log(p.beta)};
  return {std::log(p.alpha), std::log(p.beta), std::log(p.gamma), std::log(p.delta)};
}

void validate(std::span<const CurvePoint> points) {
  if (points.size() < kMinFitPoints) {
    throw DomainError("coverage fit needs at least " + std::to_string(kMinFitPoints) + " points, got " +
                      std::to_string(points.size()));
  }
  std::vector<double> xs;
  xs.reserve(points.size());
  for (const auto& [x, c] : points) {
    if (!std::isfinite(x) || !std::isfinite(c)) throw DomainError("non-finite coverage point");
    if (x < 0.0 || x > 1.0) throw DomainError("coverage point x outside [0, 1]");
    if (c < 0.0 || c > 1.0) throw DomainError("coverage point c outside [0, 1]");
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw DomainError("coverage points must have distinct x values");
  }
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double eval_coverage_model(const FitParams& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("coverage model requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return std::pow(x, p.gamma) + std::pow(x, p.alpha) * std::pow(1.0 - std::pow(x, p.delta), p.beta);
}

double compute_eta(const FitParams& p) { return std::min(p.alpha, p.gamma); }

double coverage_sse(const FitParams& p, std::span<const CurvePoint> points) {
  return sse(prepare(points), p);
}

FitResult fit_coverage_model(std::span<const CurvePoint> points, const FitOptions& options) {
  validate(points);
  if (options.starts == 0) throw DomainError("coverage fit needs at least one start");

  const PreparedCurve curve = prepare(points);
  const CoverageModel model = options.model;

  std::vector<std::vector<double>> starts;
  starts.push_back(to_log(kCentroidParams, model));
  std::mt19937_64 rng(options.seed);
  while (starts.size() < options.starts) {
    auto s = starts.front();
    for (auto& v : s) v += options.perturbation * (2.0 * unit_uniform(rng) - 1.0);
    starts.push_back(std::move(s));
  }

  SimplexOptions simplex;
  simplex.tolerance = options.tolerance;
  simplex.max_evaluations = options.max_evaluations;
  const Objective objective = [&](std::span<const double> v) { return sse(curve, from_log(v, model)); };

  std::vector<SimplexResult> runs(starts.size());
  const bool threaded = options.parallel && std::thread::hardware_concurrency() > 1;
  if (threaded) {
    std::vector<std::future<SimplexResult>> pending;
    pending.reserve(starts.size());
    for (const auto& s : starts) {
      pending.push_back(std::async(std::launch::async, [&, s] { return nelder_mead(objective, s, simplex); }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) runs[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < starts.size(); ++i) runs[i] = nelder_mead(objective, starts[i], simplex);
  }

  // Lowest sse wins; ties go to the lowest start index.
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value < runs[best].value) best = i;
  }

  FitResult result;
  result.params = from_log(runs[best].point, model);
  result.sse = runs[best].value;
  result.eta = compute_eta(result.params);
  result.n_points = points.size();
  result.converged = runs[best].converged;
  result.best_start = best;
  result.start_sse.reserve(runs.size());
  for (const auto& r : runs) result.start_sse.push_back(r.start_value);
  return result;
}

PowerLawFit fit_power_law(const SizeHistogram& h, std::size_t exclude_largest) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [m, count] : h.counts) {
    if (m > 0 && count > 0) pts.emplace_back(std::log(static_cast<double>(m)), std::log(static_cast<double>(count)));
  }
  const std::size_t excluded = std::min(exclude_largest, pts.size());
  pts.resize(pts.size() - excluded);
  if (pts.size() < 2) {
    throw DomainError("power-law fit needs at least 2 component sizes after excluding the " +
                      std::to_string(exclude_largest) + " largest");
  }

  const double n = static_cast<double>(pts.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : pts) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  const double slope = sxy / sxx;

  PowerLawFit fit;
  fit.tau = -slope;
  fit.intercept = mean_y - slope * mean_x;
  fit.points_used = pts.size();
  fit.excluded_sizes = excluded;
  return fit;
}

}  // namespace inflgraph
