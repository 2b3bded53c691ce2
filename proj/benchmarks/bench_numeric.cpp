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

#include <benchmark/benchmark.h>

#include <vector>

#include "inflgraph/fitting.hpp"
#include "inflgraph/special.hpp"

namespace {

void BM_Digamma(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inflgraph::digamma(z));
    z = z > 1e6 ? 0.5 : z * 1.37;
  }
}
BENCHMARK(BM_Digamma);

void BM_ZipfCoverage(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    double sum = 0.0;
    for (long long k = 0; k <= n; ++k) sum += inflgraph::zipf_coverage(n, static_cast<double>(k) / n);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ZipfCoverage)->Arg(10000);

void BM_FitCoverageModel(benchmark::State& state) {
  const inflgraph::FitParams truth{0.3688, 1.3583, 0.3445, 0.5877};
  std::vector<inflgraph::CurvePoint> points;
  for (int i = 0; i < 500; ++i) {
    const double x = i / 499.0;
    points.emplace_back(x, inflgraph::eval_coverage_model(truth, x));
  }
  inflgraph::FitOptions options;
  options.starts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto fit = inflgraph::fit_coverage_model(points, options);
    benchmark::DoNotOptimize(fit.sse);
  }
}
BENCHMARK(BM_FitCoverageModel)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
