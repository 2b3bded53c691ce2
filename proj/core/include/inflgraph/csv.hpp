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

// CSV writers and readers for the plot-ready outputs. Every file has a
// header row, uses '.' as decimal separator and '\n' line endings. Reals
// are written in shortest round-trip form.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "inflgraph/coverage.hpp"
#include "inflgraph/fitting.hpp"

namespace inflgraph::csv {

std::string format_real(double v);

/// `rank,count,label`
void write_rank_frequency(std::ostream& out, const RankFrequency& rf);
/// `k,coverage`
void write_coverage(std::ostream& out, const CoverageCurve& cov);
/// `x,c`
void write_points(std::ostream& out, const std::vector<CurvePoint>& points);
/// `<key_name>,count`
void write_histogram(std::ostream& out, const std::map<std::size_t, std::size_t>& hist,
                     const std::string& key_name);
/// `alpha,beta,gamma,delta,eta,sse,converged`
void write_fit(std::ostream& out, const FitResult& fit);
/// `tau,intercept,points_used`
void write_power_law(std::ostream& out, const PowerLawFit& fit);

/// Reads either an `x,c` file (points returned as-is) or a `k,coverage`
/// file. For the latter, `k_curve` receives C(0..L) and the return value
/// is empty. Throws LoadError on malformed content.
std::vector<CurvePoint> read_curve(std::istream& in, std::vector<double>* k_curve);

/// Normalized coverage sampled at `samples` evenly spaced x from a
/// `k,coverage` curve C(0..L) (linear interpolation, as for CoverageCurve).
std::vector<CurvePoint> resample_curve(const std::vector<double>& k_curve, std::size_t samples);

}  // namespace inflgraph::csv
