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

#ifndef COCOLAT_SEARCHES_HPP_
#define COCOLAT_SEARCHES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat {

/// How a search resolves ties among equally labeled candidates.
class TieBreaker {
 public:
  /// The tied candidate with the smallest vertex id wins.
  static TieBreaker first_index() { return TieBreaker(std::nullopt); }
  /// The tied candidate rightmost in `tau` wins.
  static TieBreaker plus(VertexOrdering tau) { return TieBreaker(std::move(tau)); }

  bool is_plus() const { return tau_.has_value(); }
  const VertexOrdering& reference() const { return *tau_; }

  /// Lower rank wins a tie. Dense in 0..n-1.
  int rank(Vertex v) const {
    return tau_ ? tau_->size() - 1 - tau_->position(v) : v;
  }
  /// The vertex with the given rank.
  Vertex at_rank(int r) const { return tau_ ? tau_->at(tau_->size() - 1 - r) : r; }

 private:
  explicit TieBreaker(std::optional<VertexOrdering> tau) : tau_(std::move(tau)) {}
  std::optional<VertexOrdering> tau_;
};

/// Lexicographic BFS by partition refinement. O(n + m).
VertexOrdering lbfs(const Graph& g, const TieBreaker& tb = TieBreaker::first_index());
VertexOrdering lbfs_plus(const Graph& g, const VertexOrdering& tau);

/// Lexicographic DFS: a visited vertex's neighbors move to the front of their
/// label class. O(n^2) worst case.
VertexOrdering ldfs(const Graph& g, const TieBreaker& tb = TieBreaker::first_index());
VertexOrdering ldfs_plus(const Graph& g, const VertexOrdering& tau);

/// Maximum cardinality search. O((n + m) log n).
VertexOrdering mcs(const Graph& g, const TieBreaker& tb = TieBreaker::first_index());

/// Called after each LocalMNS step with the step index and the current D.
using LocalCliqueObserver = std::function<void(int step, const std::vector<Vertex>& d)>;

/// LocalMNS realized as LocalMCS: pick v maximizing |N(v) & D|, then
/// D := {v} + (N(v) & D). Ordered score buckets keep it O(n + m log n).
VertexOrdering local_mns(const Graph& g, const TieBreaker& tb = TieBreaker::first_index(),
                         const LocalCliqueObserver& observer = {});
VertexOrdering local_mns_plus(const Graph& g, const VertexOrdering& tau,
                              const LocalCliqueObserver& observer = {});

/// LocalMCS with unspecified tie-breaking on linked score buckets. O(n + m).
VertexOrdering local_mcs_linear(const Graph& g);

/// Audits: does sigma obey the search's selection rule at every step?
bool lbfs_audit(const Graph& g, const VertexOrdering& sigma);
bool ldfs_audit(const Graph& g, const VertexOrdering& sigma);
/// Every chosen vertex has a set-maximal visited neighborhood.
bool mns_audit(const Graph& g, const VertexOrdering& sigma);
bool mcs_audit(const Graph& g, const VertexOrdering& sigma);
/// Every chosen vertex has a set-maximal N(v) & D among unvisited vertices.
bool local_mns_audit(const Graph& g, const VertexOrdering& sigma);

struct FlipCheck {
  bool ok = true;
  /// A non-adjacent pair in the same relative order in both orderings.
  std::optional<Edge> witness;

  explicit operator bool() const { return ok; }
};

/// Every non-adjacent pair lies in opposite relative order in sigma and tau.
/// O((n + m) log n) by inversion counting.
FlipCheck flipping_check(const Graph& g, const VertexOrdering& sigma, const VertexOrdering& tau);

struct MultisweepResult {
  VertexOrdering order;
  bool converged = false;
  int rounds = 0;
};

/// sigma_0 = lbfs(g), sigma_{i+1} = lbfs_plus(g, sigma_i), stopping at the
/// first umbrella-free ordering or after `max_rounds` (default n). A heuristic:
/// always check `converged`.
MultisweepResult cocomp_order_multisweep(const Graph& g, std::optional<int> max_rounds = {});

/// Names accepted by run_search: lbfs, lbfs+, ldfs, ldfs+, mcs, localmns, localmns+.
const std::vector<std::string>& search_names();
bool search_needs_reference(std::string_view name);
/// Throws std::invalid_argument on an unknown name, or on a plus search
/// without `tau`.
VertexOrdering run_search(std::string_view name, const Graph& g,
                          const std::optional<VertexOrdering>& tau = {});

}  // namespace cocolat

#endif  // COCOLAT_SEARCHES_HPP_
