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

#ifndef COCOLAT_ORDERING_HPP_
#define COCOLAT_ORDERING_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "cocolat/graph.hpp"

namespace cocolat {

/// Where an ordering came from. Informational only; no algorithm trusts it.
enum class OrderingSource {
  kArbitrary,
  kCocomp,
  kLbfs,
  kLdfs,
  kMcs,
  kMns,
  kLocalMns,
  kLocalMnsPlus,
};

std::string_view to_string(OrderingSource source);

/// A permutation of 0..n-1 with O(1) position lookup.
class VertexOrdering {
 public:
  VertexOrdering() = default;

  /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
  explicit VertexOrdering(std::vector<Vertex> order,
                          OrderingSource source = OrderingSource::kArbitrary);

  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  Vertex at(int i) const { return order_[i]; }
  int position(Vertex v) const { return position_[v]; }
  bool before(Vertex u, Vertex v) const { return position_[u] < position_[v]; }

  std::span<const Vertex> order() const { return order_; }
  std::span<const int> positions() const { return position_; }

  OrderingSource source() const { return source_; }
  VertexOrdering with_source(OrderingSource source) const;

  VertexOrdering reversed() const;

  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
  OrderingSource source_ = OrderingSource::kArbitrary;
};

/// Throws std::invalid_argument when the ordering does not cover g's vertices.
void require_same_size(const Graph& g, const VertexOrdering& order);
void require_same_size(const VertexOrdering& a, const VertexOrdering& b);

}  // namespace cocolat

#endif  // COCOLAT_ORDERING_HPP_
