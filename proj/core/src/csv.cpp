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

#include "inflgraph/csv.hpp"

#include <charconv>
#include <system_error>

#include "inflgraph/error.hpp"

namespace inflgraph::csv {
namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

double parse_real(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw LoadError("line " + std::to_string(line_no) + ": not a number: '" + field + "'", line_no);
  }
  return v;
}

void check(std::ostream& out) {
  if (!out) throw IoError("failed writing CSV output");
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("cannot format real value");
  return std::string(buf, ptr);
}

void write_rank_frequency(std::ostream& out, const RankFrequency& rf) {
  out << "rank,count,label\n";
  for (std::size_t r = 0; r < rf.size(); ++r) {
    out << r + 1 << ',' << rf.counts[r] << ',' << quote(rf.labels[r]) << '\n';
  }
  check(out);
}

void write_coverage(std::ostream& out, const CoverageCurve& cov) {
  out << "k,coverage\n";
  for (std::size_t k = 0; k <= cov.length(); ++k) out << k << ',' << format_real(cov(k)) << '\n';
  check(out);
}

void write_points(std::ostream& out, const std::vector<CurvePoint>& points) {
  out << "x,c\n";
  for (const auto& [x, c] : points) out << format_real(x) << ',' << format_real(c) << '\n';
  check(out);
}

void write_histogram(std::ostream& out, const std::map<std::size_t, std::size_t>& hist,
                     const std::string& key_name) {
  out << key_name << ",count\n";
  for (const auto& [k, n] : hist) out << k << ',' << n << '\n';
  check(out);
}

void write_fit(std::ostream& out, const FitResult& fit) {
  out << "alpha,beta,gamma,delta,eta,sse,converged\n"
      << format_real(fit.params.alpha) << ',' << format_real(fit.params.beta) << ','
      << format_real(fit.params.gamma) << ',' << format_real(fit.params.delta) << ','
      << format_real(fit.eta) << ',' << format_real(fit.sse) << ','
      << (fit.converged ? "true" : "false") << '\n';
  check(out);
}

void write_power_law(std::ostream& out, const PowerLawFit& fit) {
  out << "tau,intercept,points_used\n"
      << format_real(fit.tau) << ',' << format_real(fit.intercept) << ',' << fit.points_used << '\n';
  check(out);
}

std::vector<CurvePoint> read_curve(std::istream& in, std::vector<double>* k_curve) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool k_format = false;
  std::vector<CurvePoint> points;
  std::vector<double> curve;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line == "x,c") {
        k_format = false;
      } else if (line == "k,coverage") {
        k_format = true;
      } else {
        throw LoadError("line 1: expected header 'x,c' or 'k,coverage'", line_no);
      }
      have_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw LoadError("line " + std::to_string(line_no) + ": expected two fields", line_no);
    }
    const double a = parse_real(line.substr(0, comma), line_no);
    const double b = parse_real(line.substr(comma + 1), line_no);
    if (k_format) {
      if (a != static_cast<double>(curve.size())) {
        throw LoadError("line " + std::to_string(line_no) + ": k values must run 0, 1, 2, ...", line_no);
      }
      curve.push_back(b);
    } else {
      points.emplace_back(a, b);
    }
  }
  if (!have_header) throw LoadError("empty coverage file", 0);
  if (k_format) {
    if (k_curve == nullptr) throw LoadError("k,coverage file given where x,c points were expected", 0);
    *k_curve = std::move(curve);
    return {};
  }
  return points;
}

std::vector<CurvePoint> resample_curve(const std::vector<double>& k_curve, std::size_t samples) {
  if (k_curve.size() < 2) throw DomainError("coverage curve needs at least one ranked entry");
  std::vector<CurvePoint> points;
  points.reserve(samples);
  for (const double x : even_grid(samples)) points.emplace_back(x, interpolate_on_grid(k_curve, x));
  return points;
}

}  // namespace inflgraph::csv
