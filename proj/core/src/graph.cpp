// Copyright 2026 The Cocolat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cocolat/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocolat {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::int64_t degree_sum = 0;
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    row.shrink_to_fit();
    degree_sum += static_cast<std::int64_t>(row.size());
  }
  m_ = degree_sum / 2;

  if (n <= kMatrixLimit) {
    words_per_row_ = (n + 63) / 64;
    matrix_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
    for (Vertex u = 0; u < n; ++u) {
      std::uint64_t* row = matrix_.data() + static_cast<std::size_t>(u) * words_per_row_;
      for (Vertex v : adjacency_[u]) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!matrix_.empty()) {
    const std::uint64_t* row = matrix_.data() + static_cast<std::size_t>(u) * words_per_row_;
    return (row[v >> 6] >> (v & 63)) & 1U;
  }
  if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (static_cast<std::size_t>(v) < labels_.size()) return labels_[v];
  return std::to_string(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Vertex Graph::find_label(const std::string& name) const {
  for (Vertex v = 0; v < n(); ++v) {
    if (label(v) == name) return v;
  }
  return -1;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<char> mark(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!mark[v]) edges.push_back({u, v});
    }
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  Graph out(g.n(), edges);
  out.set_labels(g.labels());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> remap(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.n()) throw std::invalid_argument("vertex out of range");
    remap[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && remap[v] >= 0) edges.push_back({remap[u], remap[v]});
    }
  }
  InducedSubgraph out{Graph(static_cast<int>(keep.size()), edges), keep};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex u : keep) labels.push_back(g.label(u));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  Graph out(g.n(), edges);
  out.set_labels(g.labels());
  return out;
}

}  // namespace cocolat
