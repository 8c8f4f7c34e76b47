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

// Reference checks favoring clarity over speed. Each carries an explicit size
// guard and throws CapExceededError rather than running for hours.

#ifndef COCOLAT_ORACLES_HPP_
#define COCOLAT_ORACLES_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cocolat/chainclique.hpp"
#include "cocolat/errors.hpp"
#include "cocolat/graph.hpp"
#include "cocolat/lattice.hpp"
#include "cocolat/ordering.hpp"
#include "cocolat/poset.hpp"

namespace cocolat {

enum class Criterion {
  kChordal,
  kAtFree,
  kIntervalGraph,
  kMaximalChain,
  kMaximalInterval,
  kMaximalChordal,
  kCocomparability,
};

std::string_view to_string(Criterion c);

/// Verdict of one oracle. `witness_vertices` / `witness_edges` are filled
/// exactly when `verdict` is false.
struct VerificationReport {
  bool verdict = true;
  Criterion checked = Criterion::kChordal;
  std::vector<Vertex> witness_vertices;
  std::vector<Edge> witness_edges;
  /// Free-form reason when no vertex or edge witness applies.
  std::string note;
  /// On success, an optional certificate (e.g. a cocomp ordering).
  std::vector<Vertex> certificate;

  explicit operator bool() const { return verdict; }
  /// "ok <criterion>" or "not ok <criterion> <witness>", with labels from g.
  std::string tap_line(const Graph& g) const;
};

/// Maximal cliques by Bron-Kerbosch with pivoting, each sorted, the list
/// sorted lexicographically. Throws CapExceededError past `cap` cliques.
std::vector<std::vector<Vertex>> bron_kerbosch(const Graph& g, std::size_t cap = 1'000'000);

/// Verdict false carries a chordless cycle of length >= 4 in cycle order.
VerificationReport is_chordal(const Graph& g);

/// Three pairwise non-adjacent vertices, each two joined by a path avoiding
/// the closed neighborhood of the third. O(n^3 + n (n + m)).
std::optional<std::array<Vertex, 3>> find_asteroidal_triple(const Graph& g);
/// Criterion kAtFree: verdict false iff an asteroidal triple exists.
VerificationReport has_asteroidal_triple(const Graph& g);

/// Chordal and AT-free. When g has at most `cross_check_cliques` maximal
/// cliques, also tries every clique permutation for the consecutive-cliques
/// characterization and throws std::logic_error if the two disagree.
VerificationReport is_interval_graph(const Graph& g, int cross_check_cliques = 8);
/// Consecutive arrangement of maximal cliques by brute-force permutation.
/// Throws CapExceededError beyond `max_cliques` cliques.
bool has_consecutive_clique_arrangement(const Graph& g, int max_cliques = 8);

/// C_1 = sources, C_k = sinks, and each C_{i+1} covers C_i in MA(P). Every
/// clique must be a maximal antichain of p (std::invalid_argument).
VerificationReport verify_maximal_chain(const ImplicitPoset& p, std::span<const Antichain> chain);
VerificationReport verify_maximal_chain(const ImplicitPoset& p, const CliqueChain& chain);

enum class SubgraphKind { kInterval, kChordal };

/// For every nonempty S within E(g) - E(G_C), G_C + S is not of `kind`.
/// Throws CapExceededError when more than `max_missing` edges are missing.
VerificationReport verify_maximal_subgraph_exhaustive(const Graph& g, const CliqueChain& chain,
                                                      SubgraphKind kind, int max_missing = 20);

/// Vertices whose closed neighborhood is a clique, sorted.
std::vector<Vertex> brute_force_simplicial(const Graph& g);

/// Searches for an umbrella-free ordering; certificate holds it on success.
/// Throws CapExceededError for n > `max_n`.
VerificationReport is_cocomparability_bruteforce(const Graph& g, int max_n = 10);

struct MeetJoinTables {
  int size = 0;
  std::vector<int> meet;
  std::vector<int> join;

  int meet_of(int i, int j) const { return meet[static_cast<std::size_t>(i) * size + j]; }
  int join_of(int i, int j) const { return join[static_cast<std::size_t>(i) * size + j]; }
};

/// glb / lub of every pair read off a leq relation over 0..k-1. Throws
/// NotALatticeError when some pair lacks a unique one. O(k^3).
MeetJoinTables glb_lub_table_oracle(int k, const std::function<bool(int, int)>& leq);
MeetJoinTables glb_lub_table_oracle(const MALattice& lattice);

}  // namespace cocolat

#endif  // COCOLAT_ORACLES_HPP_
