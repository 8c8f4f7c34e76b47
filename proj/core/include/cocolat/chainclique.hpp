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

#ifndef COCOLAT_CHAINCLIQUE_HPP_
#define COCOLAT_CHAINCLIQUE_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "cocolat/graph.hpp"
#include "cocolat/lattice.hpp"
#include "cocolat/ordering.hpp"
#include "cocolat/poset.hpp"

namespace cocolat {

/// Cliques C_1..C_k in chain order, each sorted by vertex id.
///
/// Invariants: consecutive (C_e & C_g within C_f for e <= f <= g), spanning,
/// and the source ordering is an interval ordering of the subgraph G_C.
struct CliqueChain {
  std::vector<std::vector<Vertex>> cliques;
  VertexOrdering source_ordering;
  /// |E(G_C)|.
  std::int64_t edge_count = 0;

  int size() const { return static_cast<int>(cliques.size()); }
  std::vector<Antichain> as_antichains() const;
};

/// Greedy chain of cliques along sigma. Works on any graph. O(n + m) plus
/// sorting each finished clique.
CliqueChain chainclique(const Graph& g, const VertexOrdering& sigma);

/// The spanning subgraph G_C with the clique-chain edges only.
Graph chain_subgraph(const Graph& g, const CliqueChain& chain);
/// E(g) - E(G_C), sorted.
std::vector<Edge> discarded_edges(const Graph& g, const CliqueChain& chain);

/// chainclique(g, local_mns_plus(g, tau)): a maximal chain of MA(P) whose
/// union is a maximal interval (and chordal) subgraph. Throws NotCocompError
/// on an umbrella in tau unless `verify` is kTrust.
CliqueChain maximal_interval_subgraph(const Graph& g, const VertexOrdering& tau,
                                      Verify verify = Verify::kCheck);
CliqueChain maximal_chordal_subgraph(const Graph& g, const VertexOrdering& tau,
                                     Verify verify = Verify::kCheck);

/// Per-vertex 1-based clique indices.
/// forward[v] = max({first[u] : u in N(v), first[u] > last[v]} + {last[v]}),
/// backward[v] = min({last[u] : u in N(v), last[u] < first[v]} + {first[v]}).
struct ChainIndex {
  std::vector<int> first;
  std::vector<int> last;
  std::vector<int> forward;
  std::vector<int> backward;
};

/// Throws std::invalid_argument if the chain does not span g.
ChainIndex chain_index(const CliqueChain& chain, const Graph& g);

/// Simplicial vertices from an MNS cocomp ordering: v is simplicial iff
/// forward[v] == backward[v]. O(n + m) given sigma. With kCheck, sigma must
/// pass is_cocomp_ordering and mns_audit (std::invalid_argument otherwise).
std::vector<Vertex> simplicial_vertices(const Graph& g, const VertexOrdering& sigma,
                                        Verify verify = Verify::kCheck);
/// From any cocomp tau: re-derives sigma = lbfs_plus(g, tau) first.
std::vector<Vertex> simplicial_vertices_from_cocomp(const Graph& g, const VertexOrdering& tau,
                                                    Verify verify = Verify::kCheck);

/// Indices of elements comparable to every other element.
std::vector<int> fully_comparable_cliques(const MALattice& lattice);

/// "k", then "i: v v v" per clique (1-based, labels).
void write_chain_text(std::ostream& out, const CliqueChain& chain, const Graph& g);
/// "vertex first last forward backward" rows.
void write_chain_index_tsv(std::ostream& out, const ChainIndex& index, const Graph& g);
/// G_C solid, discarded edges of g dashed.
void write_chain_dot(std::ostream& out, const CliqueChain& chain, const Graph& g);

}  // namespace cocolat

#endif  // COCOLAT_CHAINCLIQUE_HPP_
