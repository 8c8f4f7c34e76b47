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

// Test-only generators and naive oracles. Nothing here calls into the
// library's algorithms; only Graph and VertexOrdering are shared.

#ifndef COCOLAT_TESTS_SUPPORT_HPP_
#define COCOLAT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat::testing {

/// Absolute path of a file under data/fixtures.
std::string fixture(const std::string& name);

struct Fixture {
  Graph graph;
  VertexOrdering order;
};

/// Loads `graph` and, when given, an ordering file next to it.
Fixture load_fixture(const std::string& graph, const std::string& order = "");

/// Vertex ids for labels, in the given order.
std::vector<Vertex> ids(const Graph& g, const std::vector<std::string>& labels);
VertexOrdering ordering_of(const Graph& g, const std::vector<std::string>& labels);

/// Sorted label lists, for readable assertions.
std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs);
std::vector<std::vector<std::string>> labels_of(const Graph& g,
                                                const std::vector<std::vector<Vertex>>& sets);

using Rng = std::mt19937_64;

/// A random partial order on a random permutation, closed transitively; the
/// graph is the complement of its comparability graph and `order` is a linear
/// extension, hence a cocomp ordering.
Fixture gen_cocomp(Rng& rng, int n, double arc_probability);

/// Uniform n in [lo, hi] and arc probability in [0.05, 0.6].
Fixture gen_cocomp_any(Rng& rng, int lo, int hi);

Graph gen_graph(Rng& rng, int n, double p);
VertexOrdering gen_ordering(Rng& rng, int n);

// ---- Naive oracles, written straight from the definitions. ----

/// No x < y < z in sigma with xz an edge and xy, yz both non-edges. O(n^3).
bool naive_umbrella_free(const Graph& g, const VertexOrdering& sigma);

/// No x < y < z with xz an edge and xy a non-edge. O(n^3).
bool naive_interval_ordering(const Graph& g, const VertexOrdering& sigma);

/// x <_P y for P = P_sigma.
bool naive_less(const Graph& g, const VertexOrdering& sigma, Vertex x, Vertex y);

/// Every maximal antichain of P_sigma by subset enumeration, each sorted,
/// the list sorted lexicographically. n <= 20.
std::vector<std::vector<Vertex>> naive_maximal_antichains(const Graph& g,
                                                          const VertexOrdering& sigma);

/// Every maximal clique by subset enumeration. n <= 20.
std::vector<std::vector<Vertex>> naive_maximal_cliques(const Graph& g);

/// A <= B: every a in A lies below-or-equal some b in B.
bool naive_ma_leq(const Graph& g, const VertexOrdering& sigma, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b);

/// Greatest lower bound of i and j in a finite order given by `leq`, or -1
/// when it does not exist.
int naive_glb(const std::vector<std::vector<bool>>& leq, int i, int j);
int naive_lub(const std::vector<std::vector<bool>>& leq, int i, int j);

/// Chordal iff repeatedly deleting a simplicial vertex empties the graph.
bool naive_chordal(const Graph& g);

/// Interval iff some ordering is an interval ordering; backtracking. n <= 12.
bool naive_interval_graph(const Graph& g);

/// Cocomparability iff some ordering is umbrella-free; backtracking. n <= 12.
bool naive_cocomp_graph(const Graph& g);

/// v is simplicial iff N(v) is a clique.
std::vector<Vertex> naive_simplicial(const Graph& g);

/// Edge set as sorted pairs.
std::vector<Edge> edge_list(const Graph& g);

}  // namespace cocolat::testing

#endif  // COCOLAT_TESTS_SUPPORT_HPP_
