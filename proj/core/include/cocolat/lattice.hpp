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

#ifndef COCOLAT_LATTICE_HPP_
#define COCOLAT_LATTICE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cocolat/errors.hpp"
#include "cocolat/graph.hpp"
#include "cocolat/poset.hpp"

namespace cocolat {

struct LatticeOptions {
  /// Largest MA(P) build_lattice will tabulate; tables are quadratic.
  std::size_t element_cap = 2048;
  /// Axiom and consecutiveness self-checks run up to this many elements.
  std::size_t validate_limit = 512;
};

/// A finite lattice whose elements are vertex sets (maximal cliques of some
/// graph). Built either from MA(P) by build_lattice() or from an explicit
/// order relation by from_relation(). Indices are 0-based.
class MALattice {
 public:
  /// `leq[i][j]` says element i <= element j. Throws NotALatticeError unless
  /// the relation is a partial order in which every pair has a unique meet
  /// and join.
  static MALattice from_relation(std::vector<Antichain> elements,
                                 const std::vector<std::vector<bool>>& leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const Antichain& element(int i) const { return elements_[i]; }
  const std::vector<Antichain>& elements() const { return elements_; }
  /// Index of `a`, or -1.
  int index_of(const Antichain& a) const;

  bool leq(int i, int j) const { return leq_[index(i, j)] != 0; }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  int meet(int i, int j) const { return meet_[index(i, j)]; }
  int join(int i, int j) const { return join_[index(i, j)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool is_chain() const;

  /// Hasse arcs (i, j): j covers i.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

 private:
  friend MALattice build_lattice(const ImplicitPoset&, const LatticeOptions&);

  MALattice() = default;
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * elements_.size() + static_cast<std::size_t>(j);
  }
  void finish_structure();

  std::vector<Antichain> elements_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<std::pair<int, int>> covers_;
  int bottom_ = -1;
  int top_ = -1;
};

/// Every maximal antichain of P, i.e. every maximal clique of its graph,
/// sorted lexicographically. Throws CapExceededError past `cap` results.
std::vector<Antichain> maximal_antichains(const ImplicitPoset& p, std::size_t cap = 1'000'000);

/// MA(P) with leq from ma_leq, covers by transitive reduction and meet/join
/// from ma_meet/ma_join. When small enough, re-validates the lattice axioms
/// against a table-derived glb/lub and the consecutiveness property on every
/// comparable triple, throwing std::logic_error on any disagreement.
MALattice build_lattice(const ImplicitPoset& p, const LatticeOptions& options = {});

struct IntervalOrderReport {
  bool interval = true;
  /// (a, c, b, d) with a < c, b < d and no other comparability among them.
  std::optional<std::array<Vertex, 4>> two_plus_two;
  /// Whether MA(P) is a chain; empty when MA(P) exceeded the cap.
  std::optional<bool> lattice_is_chain;
};

/// Decides interval-order-ness by the 2+2-free criterion (O(n^4) worst case)
/// and, when MA(P) has at most `lattice_cap` elements, also by whether MA(P)
/// is a chain. Throws std::logic_error if the two disagree.
IntervalOrderReport is_interval_order(const ImplicitPoset& p, std::size_t lattice_cap = 512);

/// Interval representation read off a chain of cliques: vertex v occupies
/// cliques first[v]..last[v] (1-based). x precedes y iff last[x] < first[y].
struct IntervalExtension {
  std::vector<int> first;
  std::vector<int> last;

  bool before(Vertex x, Vertex y) const { return last[x] < first[y]; }
  /// Every comparability x < y of p also holds here.
  bool extends(const ImplicitPoset& p) const;
};

/// The minimal interval extension of P matching a maximal chain of MA(P).
/// Throws std::invalid_argument when `chain` is not a maximal chain.
IntervalExtension minimal_interval_extension(const ImplicitPoset& p,
                                             std::span<const Antichain> chain);

struct LatticeConditionsReport {
  /// (i) A <= B <= C implies A & C within B.
  bool consecutive = true;
  /// (ii) A | B within meet | join.
  bool union_covered = true;
  /// (iii) A & B within both meet and join.
  bool intersection_kept = true;
  std::optional<std::array<int, 3>> consecutive_witness;
  std::optional<std::pair<int, int>> union_witness;
  std::optional<std::pair<int, int>> intersection_witness;

  bool all() const { return consecutive && union_covered && intersection_kept; }
};

/// Evaluates the three clique-lattice conditions on `lattice`, whose
/// elements must be exactly maximal cliques of g (std::invalid_argument).
LatticeConditionsReport check_lattice_conditions(const Graph& g, const MALattice& lattice);

/// "i: {members}" per element, then "i < j" per cover arc.
void write_lattice_text(std::ostream& out, const MALattice& lattice, const Graph& g);
/// Hasse diagram drawn bottom-up.
void write_lattice_dot(std::ostream& out, const MALattice& lattice, const Graph& g);

}  // namespace cocolat

#endif  // COCOLAT_LATTICE_HPP_
