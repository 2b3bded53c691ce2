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

namespace inflgraph {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Digamma function, z > 0. Shifts the argument above 10 with the
/// recurrence and finishes with the asymptotic series; relative error
/// stays below 1e-13 for z >= 1 away from the root at 1.4616...
/// Throws DomainError for z <= 0 or NaN.
double digamma(double z);

/// Psi(t + 1) + gamma, i.e. the harmonic number H_t continued to real t >= 0.
/// Exactly 0 at t = 0.
double harmonic_number(double t);

/// Normalized coverage of a text whose N distinct words obey n(r) = A / r:
/// (Psi(N x + 1) + gamma) / (Psi(N + 1) + gamma).
double zipf_coverage(long long n_words, double x);

}  // namespace inflgraph
