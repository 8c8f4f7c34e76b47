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

#include "cocolat/chainclique.hpp"

#include <algorithm>
#include <stdexcept>

#include "cocolat/searches.hpp"

namespace cocolat {
namespace {

void require_cocomp(const Graph& g, const VertexOrdering& tau) {
  const OrderingCheck check = is_cocomp_ordering(g, tau);
  if (!check) throw NotCocompError(g, *check.witness);
}

// first[v], last[v] (1-based); 0 where v lies in no clique.
void clique_ranges(const CliqueChain& chain, int n, std::vector<int>& first,
                   std::vector<int>& last) {
  first.assign(n, 0);
  last.assign(n, 0);
  for (int i = 0; i < chain.size(); ++i) {
    for (Vertex v : chain.cliques[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("clique vertex out of range");
      if (first[v] == 0) first[v] = i + 1;
      last[v] = i + 1;
    }
  }
}

}  // namespace

std::vector<Antichain> CliqueChain::as_antichains() const {
  std::vector<Antichain> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.emplace_back(c);
  return out;
}

CliqueChain chainclique(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  const int n = g.n();
  CliqueChain chain{{}, sigma, 0};
  // member[x] == j iff x lies in the clique under construction, number j.
  std::vector<int> member(n, -1);
  std::vector<int> adjacent(n, -1);
  std::vector<Vertex> current;
  std::vector<Vertex> next;
  int i = 0;
  for (int j = 0; i < n; ++j) {
    const Vertex v = sigma.at(i++);
    for (Vertex w : g.neighbors(v)) adjacent[w] = j;
    next.clear();
    for (Vertex x : current) {
      if (adjacent[x] == j) next.push_back(x);
    }
    next.push_back(v);
    std::swap(current, next);
    for (Vertex x : current) member[x] = j;
    chain.edge_count += static_cast<std::int64_t>(current.size()) - 1;

    // Extend while the next vertex sees the whole clique.
    while (i < n) {
      const Vertex u = sigma.at(i);
      std::size_t seen = 0;
      for (Vertex w : g.neighbors(u)) {
        if (member[w] == j) ++seen;
      }
      if (seen != current.size()) break;
      chain.edge_count += static_cast<std::int64_t>(current.size());
      current.push_back(u);
      member[u] = j;
      ++i;
    }
    std::vector<Vertex> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    chain.cliques.push_back(std::move(sorted));
  }
  return chain;
}

Graph chain_subgraph(const Graph& g, const CliqueChain& chain) {
  const int n = g.n();
  std::vector<int> in_prev(n, -1);
  std::vector<Edge> edges;
  for (int j = 0; j < chain.size(); ++j) {
    const auto& c = chain.cliques[j];
    // Pairs with at least one endpoint new to this clique.
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (in_prev[c[a]] == j - 1 && in_prev[c[b]] == j - 1 && j > 0) continue;
        edges.push_back(make_edge(c[a], c[b]));
      }
    }
    for (Vertex v : c) in_prev[v] = j;
  }
  Graph out(n, edges);
  if (!g.labels().empty()) out.set_labels(g.labels());
  return out;
}

std::vector<Edge> discarded_edges(const Graph& g, const CliqueChain& chain) {
  std::vector<int> first, last;
  clique_ranges(chain, g.n(), first, last);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const bool overlap = first[e.u] != 0 && first[e.v] != 0 && first[e.u] <= last[e.v] &&
                         first[e.v] <= last[e.u];
    if (!overlap) out.push_back(e);
  }
  return out;
}

CliqueChain maximal_interval_subgraph(const Graph& g, const VertexOrdering& tau, Verify verify) {
  require_same_size(g, tau);
  if (verify == Verify::kCheck) require_cocomp(g, tau);
  return chainclique(g, local_mns_plus(g, tau));
}

CliqueChain maximal_chordal_subgraph(const Graph& g, const VertexOrdering& tau, Verify verify) {
  return maximal_interval_subgraph(g, tau, verify);
}

ChainIndex chain_index(const CliqueChain& chain, const Graph& g) {
  const int n = g.n();
  ChainIndex idx;
  clique_ranges(chain, n, idx.first, idx.last);
  for (Vertex v = 0; v < n; ++v) {
    if (idx.first[v] == 0) throw std::invalid_argument("chain does not span the graph");
  }
  idx.forward = idx.last;
  idx.backward = idx.first;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (idx.first[u] > idx.last[v]) idx.forward[v] = std::max(idx.forward[v], idx.first[u]);
      if (idx.last[u] < idx.first[v]) idx.backward[v] = std::min(idx.backward[v], idx.last[u]);
    }
  }
  return idx;
}

std::vector<Vertex> simplicial_vertices(const Graph& g, const VertexOrdering& sigma,
                                        Verify verify) {
  require_same_size(g, sigma);
  if (verify == Verify::kCheck) {
    const OrderingCheck check = is_cocomp_ordering(g, sigma);
    if (!check) throw NotCocompError(g, *check.witness);
    if (!mns_audit(g, sigma)) throw std::invalid_argument("ordering is not an MNS ordering");
  }
  const ChainIndex idx = chain_index(chainclique(g, sigma), g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (idx.forward[v] == idx.backward[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> simplicial_vertices_from_cocomp(const Graph& g, const VertexOrdering& tau,
                                                    Verify verify) {
  require_same_size(g, tau);
  if (verify == Verify::kCheck) require_cocomp(g, tau);
  return simplicial_vertices(g, lbfs_plus(g, tau), verify);
}

std::vector<int> fully_comparable_cliques(const MALattice& lattice) {
  std::vector<int> out;
  for (int i = 0; i < lattice.size(); ++i) {
    bool all = true;
    for (int j = 0; j < lattice.size() && all; ++j) all = lattice.comparable(i, j);
    if (all) out.push_back(i);
  }
  return out;
}

void write_chain_text(std::ostream& out, const CliqueChain& chain, const Graph& g) {
  out << chain.size() << '\n';
  for (int i = 0; i < chain.size(); ++i) {
    out << i + 1 << ':';
    for (Vertex v : chain.cliques[i]) out << ' ' << g.label(v);
    out << '\n';
  }
}

void write_chain_index_tsv(std::ostream& out, const ChainIndex& index, const Graph& g) {
  out << "vertex\tfirst\tlast\tforward\tbackward\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    out << g.label(v) << '\t' << index.first[v] << '\t' << index.last[v] << '\t'
        << index.forward[v] << '\t' << index.backward[v] << '\n';
  }
}

void write_chain_dot(std::ostream& out, const CliqueChain& chain, const Graph& g) {
  const Graph kept = chain_subgraph(g, chain);
  out << "graph chain {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  \"" << g.label(v) << "\";\n";
  for (const Edge& e : kept.edges()) {
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\";\n";
  }
  for (const Edge& e : discarded_edges(g, chain)) {
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [style=dashed];\n";
  }
  out << "}\n";
}

}  // namespace cocolat
