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

#include "cocolat/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cocolat {

std::string_view to_string(OrderingSource source) {
  switch (source) {
    case OrderingSource::kArbitrary: return "arbitrary";
    case OrderingSource::kCocomp: return "cocomp";
    case OrderingSource::kLbfs: return "lbfs";
    case OrderingSource::kLdfs: return "ldfs";
    case OrderingSource::kMcs: return "mcs";
    case OrderingSource::kMns: return "mns";
    case OrderingSource::kLocalMns: return "localmns";
    case OrderingSource::kLocalMnsPlus: return "localmns+";
  }
  return "unknown";
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order, OrderingSource source)
    : order_(std::move(order)), position_(order_.size(), -1), source_(source) {
  const int n = static_cast<int>(order_.size());
  for (int i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || v >= n) {
      throw std::invalid_argument("ordering entry out of range: " + std::to_string(v));
    }
    if (position_[v] != -1) {
      throw std::invalid_argument("ordering repeats vertex " + std::to_string(v));
    }
    position_[v] = i;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return VertexOrdering(std::move(order));
}

VertexOrdering VertexOrdering::with_source(OrderingSource source) const {
  VertexOrdering copy = *this;
  copy.source_ = source;
  return copy;
}

VertexOrdering VertexOrdering::reversed() const {
  std::vector<Vertex> order(order_.rbegin(), order_.rend());
  return VertexOrdering(std::move(order), OrderingSource::kArbitrary);
}

void require_same_size(const Graph& g, const VertexOrdering& order) {
  if (g.n() != order.size()) {
    throw std::invalid_argument("ordering has " + std::to_string(order.size()) +
                                " vertices but graph has " + std::to_string(g.n()));
  }
}

void require_same_size(const VertexOrdering& a, const VertexOrdering& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("orderings differ in size: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

}  // namespace cocolat
