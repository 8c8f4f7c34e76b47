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

#include "cocolat/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace cocolat {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

GeneratedInstance random_cocomp_instance(int n, double density, std::uint64_t seed) {
  check_probability(density);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  const std::vector<Vertex> perm = shuffled(n, rng);

  std::vector<Edge> arcs;
  const int words = (n + 63) / 64;
  // reach[i] holds the positions strictly above position i in the closure.
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (keep(rng)) {
        arcs.push_back({perm[i], perm[j]});
        succ[i].push_back(j);
      }
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t* row = reach.data() + static_cast<std::size_t>(i) * words;
    for (int j : succ[i]) {
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
      const std::uint64_t* other = reach.data() + static_cast<std::size_t>(j) * words;
      for (int w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* row = reach.data() + static_cast<std::size_t>(i) * words;
    for (int j = i + 1; j < n; ++j) {
      if (!((row[j >> 6] >> (j & 63)) & 1U)) edges.push_back(make_edge(perm[i], perm[j]));
    }
  }
  return {Graph(n, edges), VertexOrdering(perm, OrderingSource::kCocomp), std::move(arcs)};
}

GeneratedInstance random_permutation_instance(int n, double avg_degree, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  // Ids i < j = i + d invert with probability (w - d)^2 / (2 w^2) for d < w,
  // which sums to ~ w / 6 forward inversions per vertex, so degree ~ w / 3.
  const double window = std::max(1e-9, 3.0 * avg_degree);
  std::uniform_real_distribution<double> jitter(0.0, window);
  std::vector<double> key(n);
  for (int i = 0; i < n; ++i) key[i] = i + jitter(rng);
  std::vector<Edge> edges;
  const int reach = static_cast<int>(std::ceil(window)) + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= reach; ++j) {
      if (key[j] < key[i]) edges.push_back({i, j});
    }
  }
  return {Graph(n, edges), VertexOrdering::identity(n).with_source(OrderingSource::kCocomp), {}};
}

GeneratedInstance random_interval_instance(int n, double mean_length, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> left(0.0, static_cast<double>(std::max(n, 1)));
  std::exponential_distribution<double> length(1.0 / std::max(mean_length, 1e-9));
  std::vector<std::pair<double, double>> iv(n);
  for (auto& [l, r] : iv) {
    l = left(rng);
    r = l + length(rng);
  }
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(),
            [&](Vertex a, Vertex b) { return iv[a].first < iv[b].first; });
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vertex a = by_left[i];
      const Vertex b = by_left[j];
      if (iv[b].first > iv[a].second) break;
      edges.push_back(make_edge(a, b));
    }
  }
  return {Graph(n, edges), VertexOrdering(by_left, OrderingSource::kCocomp), {}};
}

GeneratedInstance disjoint_two_chains(int k) {
  if (k < 0) throw std::invalid_argument("negative chain count");
  const int n = 2 * k;
  std::vector<Edge> edges;
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (v != u + k) edges.push_back({u, v});
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < k; ++i) {
    labels[i] = "a" + std::to_string(i + 1);
    labels[i + k] = "b" + std::to_string(i + 1);
    arcs.push_back({i, i + k});
  }
  Graph g(n, edges);
  g.set_labels(std::move(labels));
  return {std::move(g), VertexOrdering::identity(n).with_source(OrderingSource::kCocomp),
          std::move(arcs)};
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

VertexOrdering random_ordering(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return VertexOrdering(shuffled(n, rng));
}

}  // namespace cocolat
