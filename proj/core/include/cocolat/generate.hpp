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

#ifndef COCOLAT_GENERATE_HPP_
#define COCOLAT_GENERATE_HPP_

#include <cstdint>
#include <vector>

#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat {

/// A cocomparability graph together with a known cocomp ordering.
struct GeneratedInstance {
  Graph graph;
  VertexOrdering witness;
  /// Arcs (u before v in the poset) the instance was generated from. For
  /// random_cocomp_instance these are the sampled DAG arcs before closure.
  std::vector<Edge> poset_seed;
};

/// Samples a DAG over a random permutation (each forward arc kept with
/// probability `density`), closes it transitively and returns the
/// complement of its comparability graph. The permutation is the witness.
/// Closure is O(n^3 / 64), so this is meant for n up to a few thousand.
GeneratedInstance random_cocomp_instance(int n, double density, std::uint64_t seed);

/// Permutation graph of a near-sorted permutation: vertex i is placed at
/// key i + U(0, window) and ij is an edge iff the keys invert the ids. The
/// window is chosen so the expected average degree is about `avg_degree`.
/// Identity is a cocomp ordering. Linear size, suitable for benchmarks.
GeneratedInstance random_permutation_instance(int n, double avg_degree, std::uint64_t seed);

/// Intersection graph of n random intervals; the witness sorts by left
/// endpoint and is an interval ordering.
GeneratedInstance random_interval_instance(int n, double mean_length, std::uint64_t seed);

/// Complement of k disjoint 2-chains a_i < b_i: K_{2k} minus a perfect
/// matching. Vertices a1..ak are 0..k-1 and b1..bk are k..2k-1.
GeneratedInstance disjoint_two_chains(int k);

/// Erdos-Renyi G(n, p); no structure guaranteed.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Uniformly random permutation of 0..n-1.
VertexOrdering random_ordering(int n, std::uint64_t seed);

}  // namespace cocolat

#endif  // COCOLAT_GENERATE_HPP_
