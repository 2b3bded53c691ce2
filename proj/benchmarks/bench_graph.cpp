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

#include <random>
#include <string>

#include "inflgraph/graph.hpp"
#include "inflgraph/lexicon.hpp"

namespace {

// Synthetic dictionary: `stems` headwords over a few paradigms with a
// small stem alphabet so that generated forms collide.
inflgraph::Lexicon synthetic_dictionary(std::size_t stems) {
  using namespace inflgraph;
  ParadigmSet paradigms;
  paradigms["a"] = {"a", {"a", "ae", "am", "arum", "is", "as"}};
  paradigms["o"] = {"o", {"us", "i", "o", "um", "orum", "is", "os", "e"}};
  paradigms["v"] = {"v", {"o", "as", "at", "amus", "atis", "ant", "avi", "atum", "are"}};
  const char* names[] = {"a", "o", "v"};

  std::mt19937_64 rng(1);
  std::vector<StemEntry> entries;
  entries.reserve(stems);
  for (std::size_t i = 0; i < stems; ++i) {
    std::string stem;
    for (int k = 0; k < 4; ++k) stem += static_cast<char>('a' + rng() % 12);
    std::string head = stem + "x";
    for (std::size_t v = i; v > 0; v /= 26) head += static_cast<char>('a' + v % 26);
    entries.push_back({head, stem, names[rng() % 3]});
  }
  return generate_forms(entries, paradigms);
}

void BM_BuildGraph(benchmark::State& state) {
  const auto lex = synthetic_dictionary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto g = inflgraph::build_graph(lex);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.counters["forms"] = static_cast<double>(lex.form_count());
}
BENCHMARK(BM_BuildGraph)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ConnectedComponents(benchmark::State& state) {
  const auto g = inflgraph::build_graph(synthetic_dictionary(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto comps = inflgraph::connected_components(g);
    benchmark::DoNotOptimize(comps.size());
  }
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_ConnectedComponents)->Arg(1000)->Arg(10000)->Arg(35670)->Unit(benchmark::kMillisecond);

}  // namespace
