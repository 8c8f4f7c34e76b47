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

#ifndef COCOLAT_GRAPH_IO_HPP_
#define COCOLAT_GRAPH_IO_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat {

// Text formats
// ------------
// Edge list:  "n m" on the first data line, then m lines "u v" with 0-based
//             ids. Lines starting with '#' are comments, except
//             "# labels: name0 name1 ..." which names the vertices.
// DIMACS:     "p edge n m" header and "e u v" lines with 1-based ids; 'c'
//             lines are comments. Vertices are labeled with their 1-based id.
// Ordering:   whitespace-separated vertex names. Names resolve through the
//             graph's labels when it has any, otherwise as 0-based ids.

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

struct LoadOptions {
  GraphFormat format = GraphFormat::kAuto;
  /// Reject duplicate edges instead of merging them. Loops are always rejected.
  bool strict = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Graph load_graph(std::istream& in, const LoadOptions& options = {});
Graph load_graph_file(const std::string& path, const LoadOptions& options = {});

/// Writes the edge-list format (with a labels line when the graph has labels).
void save_graph(std::ostream& out, const Graph& g);

/// Undirected DOT, one edge per pair.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

VertexOrdering load_ordering(std::istream& in, const Graph& g);
VertexOrdering load_ordering_file(const std::string& path, const Graph& g);
void save_ordering(std::ostream& out, const VertexOrdering& order, const Graph& g);

}  // namespace cocolat

#endif  // COCOLAT_GRAPH_IO_HPP_
