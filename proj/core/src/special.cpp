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

#include "inflgraph/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

constexpr double kShiftThreshold = 10.0;

// Psi(z) ~ ln z - 1/(2z) - sum_k B_{2k} / (2k z^{2k}); coefficients B_{2k}/(2k).
constexpr std::array<double, 8> kAsymptotic = {
    1.0 / 12.0,          // B2/2
    -1.0 / 120.0,        // B4/4
    1.0 / 252.0,         // B6/6
    -1.0 / 240.0,        // B8/8
    1.0 / 132.0,         // B10/10
    -691.0 / 32760.0,    // B12/12
    1.0 / 12.0,          // B14/14
    -3617.0 / 8160.0,    // B16/16
};

double asymptotic(double z) {
  const double inv2 = 1.0 / (z * z);
  double series = 0.0;
  for (auto it = kAsymptotic.rbegin(); it != kAsymptotic.rend(); ++it) series = (series + *it) * inv2;
  return std::log(z) - 0.5 / z - series;
}

}  // namespace

double digamma(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("digamma requires a finite z > 0, got " + std::to_string(z));
  }
  double shift = 0.0;
  while (z < kShiftThreshold) {
    shift += 1.0 / z;
    z += 1.0;
  }
  return asymptotic(z) - shift;
}

double harmonic_number(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("harmonic_number requires a finite t >= 0, got " + std::to_string(t));
  }
  if (t == 0.0) return 0.0;
  // H_t = sum_{i>=1} t / (i (t + i)). Summing the first terms directly
  // avoids the cancellation in Psi(t+1) + gamma for small t; the rest is
  // Psi(t+n+1) + gamma - H_n.
  double head = 0.0;
  double harmonic_n = 0.0;
  int n = 0;
  while (t + n + 1 < kShiftThreshold) {
    ++n;
    head += t / (n * (t + n));
    harmonic_n += 1.0 / n;
  }
  return head + ((asymptotic(t + n + 1) + kEulerGamma) - harmonic_n);
}

double zipf_coverage(long long n_words, double x) {
  if (n_words < 1) throw DomainError("zipf_coverage requires N >= 1");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("zipf_coverage requires x in [0, 1]");
  const double n = static_cast<double>(n_words);
  if (x == 1.0) return 1.0;
  return harmonic_number(n * x) / harmonic_number(n);
}

}  // namespace inflgraph
