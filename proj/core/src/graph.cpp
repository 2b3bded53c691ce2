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

#include "inflgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "inflgraph/corpus.hpp"
#include "inflgraph/error.hpp"

namespace inflgraph {
namespace {

template <class Range>
std::optional<VertexIndex> sorted_find(const Range& sorted, std::string_view key) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), key,
                                   [](const std::string& a, std::string_view b) { return a < b; });
  if (it == sorted.end() || *it != key) return std::nullopt;
  return static_cast<VertexIndex>(it - sorted.begin());
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

InflectionGraph::InflectionGraph(std::vector<std::string> headwords, std::vector<std::string> forms,
                                 std::vector<Edge> edges)
    : headwords_(std::move(headwords)), forms_(std::move(forms)), edges_(std::move(edges)) {
  if (!std::is_sorted(edges_.begin(), edges_.end()) ||
      std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ConfigError("inflection graph edges must be sorted and unique");
  }
  std::vector<std::size_t> form_degree(forms_.size(), 0);
  offsets_.assign(headwords_.size() + 1, 0);
  for (const auto& e : edges_) {
    if (e.headword >= headwords_.size() || e.form >= forms_.size()) {
      throw ConfigError("inflection graph edge references a missing vertex");
    }
    ++offsets_[e.headword + 1];
    ++form_degree[e.form];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  for (std::size_t h = 0; h < headwords_.size(); ++h) {
    if (offsets_[h] == offsets_[h + 1]) throw ConfigError("isolated headword vertex: " + headwords_[h]);
  }
  for (std::size_t f = 0; f < forms_.size(); ++f) {
    if (form_degree[f] == 0) throw ConfigError("isolated form vertex: " + forms_[f]);
  }
}

std::optional<VertexIndex> InflectionGraph::find_form(std::string_view form) const {
  return sorted_find(forms_, form);
}

std::optional<VertexIndex> InflectionGraph::find_headword(std::string_view headword) const {
  return sorted_find(headwords_, headword);
}

std::span<const Edge> InflectionGraph::edges_of(VertexIndex h) const {
  return std::span<const Edge>(edges_).subspan(offsets_[h], offsets_[h + 1] - offsets_[h]);
}

InflectionGraph build_graph(std::span<const std::string> words, const Lexicon& lex,
                            UnknownPolicy policy) {
  std::vector<std::string> candidates(words.begin(), words.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::string> forms;
  forms.reserve(candidates.size());
  for (auto& w : candidates) {
    if (policy == UnknownPolicy::drop && !lex.contains(w)) continue;
    forms.push_back(std::move(w));
  }

  // (headword, form index) pairs; views point into lex or into forms.
  std::vector<std::pair<std::string_view, VertexIndex>> pairs;
  pairs.reserve(forms.size());
  for (std::size_t f = 0; f < forms.size(); ++f) {
    const auto fi = static_cast<VertexIndex>(f);
    if (const auto* heads = lex.find(forms[f])) {
      for (const auto& h : *heads) pairs.emplace_back(h, fi);
    } else {
      pairs.emplace_back(forms[f], fi);
    }
  }

  std::vector<std::string_view> head_views;
  head_views.reserve(pairs.size());
  for (const auto& p : pairs) head_views.push_back(p.first);
  std::sort(head_views.begin(), head_views.end());
  head_views.erase(std::unique(head_views.begin(), head_views.end()), head_views.end());

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [head, f] : pairs) {
    const auto it = std::lower_bound(head_views.begin(), head_views.end(), head);
    edges.push_back({static_cast<VertexIndex>(it - head_views.begin()), f});
  }
  std::sort(edges.begin(), edges.end());

  std::vector<std::string> headwords(head_views.begin(), head_views.end());
  return InflectionGraph(std::move(headwords), std::move(forms), std::move(edges));
}

InflectionGraph build_graph(const Lexicon& lex) {
  std::vector<std::string> forms;
  forms.reserve(lex.form_count());
  for (const auto& entry : lex.analyses()) forms.push_back(entry.first);
  return build_graph(forms, lex, UnknownPolicy::drop);
}

Components connected_components(const InflectionGraph& g) {
  const std::size_t na = g.headword_count();
  const std::size_t nb = g.form_count();
  DisjointSets sets(na + nb);
  for (const auto& e : g.edges()) sets.unite(e.headword, na + e.form);

  std::vector<std::size_t> slot_of_root(na + nb, SIZE_MAX);
  std::vector<WordGroup> groups;
  auto slot = [&](std::size_t v) -> WordGroup& {
    const auto root = sets.find(v);
    if (slot_of_root[root] == SIZE_MAX) {
      slot_of_root[root] = groups.size();
      groups.emplace_back();
    }
    return groups[slot_of_root[root]];
  };
  // Ascending vertex order keeps member lists sorted.
  for (std::size_t h = 0; h < na; ++h) slot(h).headword_members.push_back(static_cast<VertexIndex>(h));
  for (std::size_t f = 0; f < nb; ++f) slot(na + f).form_members.push_back(static_cast<VertexIndex>(f));

  std::sort(groups.begin(), groups.end(), [](const WordGroup& a, const WordGroup& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() > b.vertex_count();
    return a.headword_members.front() < b.headword_members.front();
  });

  Components out;
  out.group_of_headword.assign(na, 0);
  out.group_of_form.assign(nb, 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    groups[i].group_id = i;
    for (const auto h : groups[i].headword_members) out.group_of_headword[h] = i;
    for (const auto f : groups[i].form_members) out.group_of_form[f] = i;
  }
  out.groups = std::move(groups);
  return out;
}

std::map<std::size_t, std::size_t> headword_degree_distribution(const InflectionGraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t h = 0; h < g.headword_count(); ++h) {
    ++hist[g.headword_degree(static_cast<VertexIndex>(h))];
  }
  return hist;
}

SizeHistogram component_size_histogram(const Components& components) {
  SizeHistogram hist;
  for (const auto& group : components.groups) ++hist.counts[group.headword_members.size()];
  return hist;
}

InflectionGraph induced_subgraph(const InflectionGraph& g, const WordGroup& group) {
  std::vector<std::string> headwords;
  std::vector<std::string> forms;
  std::vector<VertexIndex> new_form(g.form_count(), 0);
  for (const auto h : group.headword_members) headwords.push_back(g.headwords()[h]);
  for (std::size_t i = 0; i < group.form_members.size(); ++i) {
    forms.push_back(g.forms()[group.form_members[i]]);
    new_form[group.form_members[i]] = static_cast<VertexIndex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < group.headword_members.size(); ++i) {
    for (const auto& e : g.edges_of(group.headword_members[i])) {
      edges.push_back({static_cast<VertexIndex>(i), new_form[e.form]});
    }
  }
  std::sort(edges.begin(), edges.end());
  return InflectionGraph(std::move(headwords), std::move(forms), std::move(edges));
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge_list") return ExportFormat::edge_list;
  if (name == "dot") return ExportFormat::dot;
  throw ConfigError("unknown export format '" + std::string(name) + "' (expected edge_list or dot)");
}

void export_graph(const InflectionGraph& g, ExportFormat format, std::ostream& out) {
  std::vector<std::string> labels;
  labels.reserve(g.headword_count());
  for (const auto& h : g.headwords()) labels.push_back(to_upper(h));

  if (format == ExportFormat::edge_list) {
    for (const auto& e : g.edges()) out << labels[e.headword] << '\t' << g.forms()[e.form] << '\n';
  } else {
    out << "graph inflection {\n";
    for (std::size_t h = 0; h < labels.size(); ++h) {
      out << "  h" << h << " [label=\"" << dot_escape(labels[h]) << "\", shape=box];\n";
    }
    for (std::size_t f = 0; f < g.form_count(); ++f) {
      out << "  f" << f << " [label=\"" << dot_escape(g.forms()[f]) << "\", shape=ellipse];\n";
    }
    for (const auto& e : g.edges()) out << "  h" << e.headword << " -- f" << e.form << ";\n";
    out << "}\n";
  }
  out.flush();
  if (!out) throw IoError("failed writing graph export");
}

}  // namespace inflgraph
