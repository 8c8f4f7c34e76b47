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

#include "cocolat/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace cocolat {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

struct EdgeCollector {
  int n = 0;
  bool strict = false;
  std::vector<Edge> edges;

  void add(long long u, long long v, int line) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    lines.push_back(line);
  }

  Graph finish() {
    if (strict) {
      std::vector<std::size_t> idx(edges.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::stable_sort(idx.begin(), idx.end(),
                       [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
      for (std::size_t i = 1; i < idx.size(); ++i) {
        if (edges[idx[i]] == edges[idx[i - 1]]) {
          throw ParseError(lines[idx[i]], "duplicate edge " + std::to_string(edges[idx[i]].u) +
                                              " " + std::to_string(edges[idx[i]].v));
        }
      }
    }
    return Graph(n, edges);
  }

  std::vector<int> lines;
};

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long expected = 0;
  long long seen = 0;
  std::vector<std::string> labels;
  int labels_line = 0;
  EdgeCollector collector;
  collector.strict = options.strict;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto toks = split(line);
    if (toks[0][0] == '#') {
      if (toks[0] == "#" && toks.size() >= 2 && toks[1] == "labels:") {
        labels.assign(toks.begin() + 2, toks.end());
        labels_line = line_no;
      }
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    if (!have_header) {
      const long long n = parse_int(toks[0], line_no);
      expected = parse_int(toks[1], line_no);
      if (n < 0 || expected < 0) throw ParseError(line_no, "negative count in header");
      collector.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (seen == expected) throw ParseError(line_no, "more edge lines than the header's m");
    collector.add(parse_int(toks[0], line_no), parse_int(toks[1], line_no), line_no);
    ++seen;
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (seen != expected) {
    throw ParseError(line_no, "header announces " + std::to_string(expected) +
                                  " edges but found " + std::to_string(seen));
  }
  Graph g = collector.finish();
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != g.n()) {
      throw ParseError(labels_line, "labels line names " + std::to_string(labels.size()) +
                                        " vertices, expected " + std::to_string(g.n()));
    }
    g.set_labels(std::move(labels));
  }
  return g;
}

Graph load_dimacs(std::istream& in, const LoadOptions& options) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  EdgeCollector collector;
  collector.strict = options.strict;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto toks = split(line);
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "second 'p' header");
      if (toks.size() != 4) throw ParseError(line_no, "expected 'p edge n m'");
      const long long n = parse_int(toks[2], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      collector.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' header");
      if (toks.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      collector.add(parse_int(toks[1], line_no) - 1, parse_int(toks[2], line_no) - 1, line_no);
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge n m' header");
  Graph g = collector.finish();
  std::vector<std::string> labels(g.n());
  for (int i = 0; i < g.n(); ++i) labels[i] = std::to_string(i + 1);
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace

Graph load_graph(std::istream& in, const LoadOptions& options) {
  GraphFormat format = options.format;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kEdgeList;
    std::istringstream probe(text);
    std::string line;
    while (std::getline(probe, line)) {
      auto toks = split(line);
      if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
      if (toks[0] == "p" || toks[0] == "e") format = GraphFormat::kDimacs;
      break;
    }
  }
  std::istringstream body(text);
  return format == GraphFormat::kDimacs ? load_dimacs(body, options)
                                        : load_edge_list(body, options);
}

Graph load_graph_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in, options);
}

void save_graph(std::ostream& out, const Graph& g) {
  if (!g.labels().empty()) {
    out << "# labels:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
  }
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

VertexOrdering load_ordering(std::istream& in, const Graph& g) {
  std::unordered_map<std::string, Vertex> by_label;
  for (Vertex v = 0; v < static_cast<Vertex>(g.labels().size()); ++v) by_label[g.labels()[v]] = v;
  std::vector<Vertex> order;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split(line);
    if (!toks.empty() && toks[0][0] == '#') continue;
    for (const auto& tok : toks) {
      if (!by_label.empty()) {
        auto it = by_label.find(tok);
        if (it == by_label.end()) throw ParseError(line_no, "unknown vertex '" + tok + "'");
        order.push_back(it->second);
      } else {
        order.push_back(static_cast<Vertex>(parse_int(tok, line_no)));
      }
    }
  }
  try {
    VertexOrdering out(std::move(order));
    require_same_size(g, out);
    return out;
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

VertexOrdering load_ordering_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_ordering(in, g);
}

void save_ordering(std::ostream& out, const VertexOrdering& order, const Graph& g) {
  bool first = true;
  for (Vertex v : order) {
    if (!first) out << ' ';
    out << (g.labels().empty() ? std::to_string(v) : g.label(v));
    first = false;
  }
  out << '\n';
}

}  // namespace cocolat
