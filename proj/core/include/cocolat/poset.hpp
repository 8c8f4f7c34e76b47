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

#ifndef COCOLAT_POSET_HPP_
#define COCOLAT_POSET_HPP_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat {

/// Result of an ordering test. On failure `witness` holds the offending
/// triple (x, y, z) with x before y before z.
struct OrderingCheck {
  bool ok = true;
  std::optional<std::array<Vertex, 3>> witness;

  explicit operator bool() const { return ok; }
};

/// True iff sigma has no umbrella: x < y < z with xz an edge and xy, yz
/// non-edges. Runs in O(n + sum of squared degrees), which is O(n m).
OrderingCheck is_cocomp_ordering(const Graph& g, const VertexOrdering& sigma);

/// True iff there is no x < y < z with xz an edge and xy a non-edge. O(n + m).
OrderingCheck is_interval_ordering(const Graph& g, const VertexOrdering& sigma);

class NotCocompError : public std::invalid_argument {
 public:
  NotCocompError(const Graph& g, std::array<Vertex, 3> umbrella);
  const std::array<Vertex, 3>& umbrella() const { return umbrella_; }

 private:
  std::array<Vertex, 3> umbrella_;
};

enum class Verify { kCheck, kTrust };

/// The partial order P_sigma: x < y iff x precedes y in sigma and xy is not
/// an edge. Transitive exactly when sigma is a cocomp ordering.
///
/// Never materialized: comparisons cost one position lookup and one edge
/// query. Holds a pointer to the graph, which must outlive the poset.
class ImplicitPoset {
 public:
  /// With Verify::kCheck the constructor throws NotCocompError on an umbrella.
  ImplicitPoset(const Graph& g, VertexOrdering order, Verify verify = Verify::kCheck);

  const Graph& graph() const { return *graph_; }
  const VertexOrdering& order() const { return order_; }
  int size() const { return order_.size(); }

  bool less(Vertex x, Vertex y) const {
    return x != y && order_.before(x, y) && !graph_->has_edge(x, y);
  }
  bool leq(Vertex x, Vertex y) const { return x == y || less(x, y); }
  bool comparable(Vertex x, Vertex y) const { return less(x, y) || less(y, x); }
  bool incomparable(Vertex x, Vertex y) const { return x != y && !comparable(x, y); }

  /// y covers x: x < y with nothing strictly between. O(n).
  bool covered_by(Vertex x, Vertex y) const;

  /// Minimal (sources) and maximal (sinks) elements, sorted by id.
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  /// P^-: the same graph under the reversed ordering.
  ImplicitPoset reversed() const;

 private:
  const Graph* graph_;
  VertexOrdering order_;
};

/// A set of pairwise incomparable elements, kept sorted by vertex id.
class Antichain {
 public:
  Antichain() = default;
  explicit Antichain(std::vector<Vertex> members);
  Antichain(std::initializer_list<Vertex> members)
      : Antichain(std::vector<Vertex>(members)) {}

  std::span<const Vertex> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain&, const Antichain&) = default;

 private:
  std::vector<Vertex> members_;
};

class NotMaximalAntichainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_antichain(const ImplicitPoset& p, std::span<const Vertex> s);
/// Maximal iff every vertex outside is comparable to some member. O(n |a|).
bool is_maximal_antichain(const ImplicitPoset& p, std::span<const Vertex> a);

/// Max(S), Min(S) within the induced subposet; Inc(S) = elements of V - S
/// incomparable to every member of S. Results are sorted by id.
std::vector<Vertex> max_of(const ImplicitPoset& p, std::span<const Vertex> s);
std::vector<Vertex> min_of(const ImplicitPoset& p, std::span<const Vertex> s);
std::vector<Vertex> inc_of(const ImplicitPoset& p, std::span<const Vertex> s);

/// S_min(a, b) = {x in a - b : x < y for some y in b - a}; S_max symmetric.
/// Both inputs must be maximal antichains (NotMaximalAntichainError).
std::vector<Vertex> s_min(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
std::vector<Vertex> s_max(const ImplicitPoset& p, const Antichain& a, const Antichain& b);

/// a <= b in MA(P): every x in a lies below-or-equal some y in b.
bool ma_leq(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
/// The same relation through the dual statement: every y in b lies
/// above-or-equal some x in a. Agrees with ma_leq on maximal antichains.
bool ma_leq_reversed(const ImplicitPoset& p, const Antichain& a, const Antichain& b);

/// Meet: (a & b) + S_min(a,b) + S_min(b,a), completed with Max(Inc(.)).
/// Join: (a & b) + S_max(a,b) + S_max(b,a), completed with Min(Inc(.)).
Antichain ma_meet(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
Antichain ma_join(const ImplicitPoset& p, const Antichain& a, const Antichain& b);

/// b covers a in MA(P): every x in a - b is covered in P by every y in b - a.
/// Throws std::invalid_argument when a == b.
bool ma_covers(const ImplicitPoset& p, const Antichain& a, const Antichain& b);

namespace detail {
// Unchecked variants; callers guarantee maximality.
bool ma_leq_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
Antichain ma_meet_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
Antichain ma_join_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
bool ma_covers_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b);
}  // namespace detail

}  // namespace cocolat

#endif  // COCOLAT_POSET_HPP_
