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

// Derivative-free Nelder-Mead minimization with restarts.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace inflgraph {

struct SimplexOptions {
  /// Edge length of the initial simplex along each coordinate axis.
  double initial_step = 0.25;
  /// Converged once every vertex is within this (max-norm) distance of the best.
  double tolerance = 1e-9;
  std::size_t max_evaluations = 20000;
  /// A converged search is restarted from its best point until a restart
  /// stops improving the value.
  std::size_t max_restarts = 4;
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  double start_value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// The returned value never exceeds the value at `start`. Non-finite
/// objective values are treated as +infinity.
SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& options = {});

}  // namespace inflgraph
