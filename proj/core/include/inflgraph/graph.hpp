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

// Bipartite inflection graph: headword vertices on one side, inflected-form
// vertices on the other, an edge wherever a form can realize a headword.
// A form spelled like its headword ("aqua") is still two vertices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inflgraph/lexicon.hpp"

namespace inflgraph {

using VertexIndex = std::uint32_t;

struct Edge {
  VertexIndex headword;
  VertexIndex form;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class InflectionGraph {
 public:
  InflectionGraph() = default;

  /// Both vertex lists must be sorted and unique, edges sorted and unique,
  /// and every vertex must have at least one edge.
  InflectionGraph(std::vector<std::string> headwords, std::vector<std::string> forms,
                  std::vector<Edge> edges);

  std::span<const std::string> headwords() const noexcept { return headwords_; }
  std::span<const std::string> forms() const noexcept { return forms_; }
  /// Sorted by (headword, form).
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t headword_count() const noexcept { return headwords_.size(); }
  std::size_t form_count() const noexcept { return forms_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::optional<VertexIndex> find_form(std::string_view form) const;
  std::optional<VertexIndex> find_headword(std::string_view headword) const;

  /// Forms adjacent to headword h (sorted).
  std::span<const Edge> edges_of(VertexIndex h) const;
  std::size_t headword_degree(VertexIndex h) const { return edges_of(h).size(); }

 private:
  std::vector<std::string> headwords_;
  std::vector<std::string> forms_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR row starts into edges_, size |A|+1
};

/// B = distinct words (minus dropped unknowns), A = union of their analyses.
InflectionGraph build_graph(std::span<const std::string> words, const Lexicon& lex,
                            UnknownPolicy policy = UnknownPolicy::self_headword);

/// Dictionary mode: every form the lexicon knows.
InflectionGraph build_graph(const Lexicon& lex);

/// One connected component. Members are indices into the graph's vertex
/// lists, sorted ascending (so headword_members.front() is the
/// lexicographically smallest headword).
struct WordGroup {
  std::size_t group_id = 0;
  std::vector<VertexIndex> headword_members;
  std::vector<VertexIndex> form_members;

  std::size_t vertex_count() const noexcept {
    return headword_members.size() + form_members.size();
  }
};

struct Components {
  /// Sorted by vertex count descending, then smallest headword; group_id is
  /// the position in this list.
  std::vector<WordGroup> groups;
  std::vector<std::size_t> group_of_headword;
  std::vector<std::size_t> group_of_form;

  std::size_t size() const noexcept { return groups.size(); }
};

/// Union-find with path compression and union by size.
Components connected_components(const InflectionGraph& g);

/// degree -> number of headword vertices with that degree.
std::map<std::size_t, std::size_t> headword_degree_distribution(const InflectionGraph& g);

/// m -> H(m), the number of components with exactly m headwords.
struct SizeHistogram {
  std::map<std::size_t, std::size_t> counts;
};

SizeHistogram component_size_histogram(const Components& components);

/// Subgraph induced by one component.
InflectionGraph induced_subgraph(const InflectionGraph& g, const WordGroup& group);

enum class ExportFormat { edge_list, dot };

ExportFormat parse_export_format(std::string_view name);

/// edge_list: `HEADWORD<TAB>form` per edge. dot: undirected graph,
/// headwords as uppercase boxes, forms lowercase. Throws IoError when the
/// stream fails.
void export_graph(const InflectionGraph& g, ExportFormat format, std::ostream& out);

}  // namespace inflgraph
