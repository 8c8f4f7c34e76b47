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

#ifndef COCOLAT_GRAPH_HPP_
#define COCOLAT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cocolat {

/// Dense vertex id in 0..n-1.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an edge so that u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph with sorted adjacency lists.
///
/// Immutable after construction. Graphs with at most kMatrixLimit vertices
/// also carry a bit matrix so has_edge() is O(1); larger graphs fall back to
/// binary search in the sorted adjacency list.
class Graph {
 public:
  static constexpr int kMatrixLimit = 4096;

  Graph() = default;

  /// Builds a graph on n vertices. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Optional display names; label(v) falls back to the decimal id.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Returns the vertex carrying `name`, or -1.
  Vertex find_label(const std::string& name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::int64_t m_ = 0;
  // Row-major n x n bits, only populated when n <= kMatrixLimit.
  std::vector<std::uint64_t> matrix_;
  int words_per_row_ = 0;
  std::vector<std::string> labels_;
};

/// uv is an edge of the result iff u != v and uv is not an edge of g.
Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the parent graph mapped to i.
  std::vector<Vertex> original_vertex;
};

/// Subgraph induced by `vertices` (any order, duplicates ignored). New ids
/// follow increasing original id; labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Adds `extra` edges to g (duplicates ignored). Labels are kept.
Graph with_edges(const Graph& g, std::span<const Edge> extra);

}  // namespace cocolat

#endif  // COCOLAT_GRAPH_HPP_
