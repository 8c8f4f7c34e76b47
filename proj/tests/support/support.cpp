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

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cocolat/graph_io.hpp"

namespace cocolat::testing {

std::string fixture(const std::string& name) {
  return std::string(COCOLAT_FIXTURE_DIR) + "/" + name;
}

Fixture load_fixture(const std::string& graph, const std::string& order) {
  Fixture f;
  f.graph = load_graph_file(fixture(graph));
  f.order = order.empty() ? VertexOrdering::identity(f.graph.n())
                          : load_ordering_file(fixture(order), f.graph);
  return f;
}

std::vector<Vertex> ids(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) {
    const Vertex v = g.find_label(l);
    if (v < 0) throw std::invalid_argument("no vertex labelled " + l);
    out.push_back(v);
  }
  return out;
}

VertexOrdering ordering_of(const Graph& g, const std::vector<std::string>& labels) {
  return VertexOrdering(ids(g, labels));
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> labels_of(const Graph& g,
                                                const std::vector<std::vector<Vertex>>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(labels_of(g, s));
  return out;
}

Fixture gen_cocomp(Rng& rng, int n, double arc_probability) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  // rel[i][j]: perm[i] < perm[j] in the order, only for i < j.
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(arc_probability);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rel[i][j] = coin(rng);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < k; ++i) {
      if (!rel[i][k]) continue;
      for (int j = k + 1; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!rel[i][j]) edges.push_back(make_edge(perm[i], perm[j]));
    }
  }
  return Fixture{Graph(n, edges), VertexOrdering(perm)};
}

Fixture gen_cocomp_any(Rng& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
  return gen_cocomp(rng, n, p);
}

Graph gen_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

VertexOrdering gen_ordering(Rng& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return VertexOrdering(perm);
}

bool naive_umbrella_free(const Graph& g, const VertexOrdering& sigma) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int k = i + 2; k < n; ++k) {
      const Vertex x = sigma.at(i);
      const Vertex z = sigma.at(k);
      if (!g.has_edge(x, z)) continue;
      for (int j = i + 1; j < k; ++j) {
        const Vertex y = sigma.at(j);
        if (!g.has_edge(x, y) && !g.has_edge(y, z)) return false;
      }
    }
  }
  return true;
}

bool naive_interval_ordering(const Graph& g, const VertexOrdering& sigma) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int k = i + 2; k < n; ++k) {
      if (!g.has_edge(sigma.at(i), sigma.at(k))) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!g.has_edge(sigma.at(i), sigma.at(j))) return false;
      }
    }
  }
  return true;
}

bool naive_less(const Graph& g, const VertexOrdering& sigma, Vertex x, Vertex y) {
  return x != y && sigma.position(x) < sigma.position(y) && !g.has_edge(x, y);
}

namespace {

// All maximal sets in which every pair satisfies `compatible`.
std::vector<std::vector<Vertex>> maximal_compatible_sets(
    int n, const std::function<bool(Vertex, Vertex)>& compatible) {
  if (n > 20) throw std::invalid_argument("subset enumeration limited to n <= 20");
  std::vector<std::uint32_t> ok(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && compatible(u, v)) ok[u] |= 1u << v;
    }
  }
  std::vector<std::vector<Vertex>> out;
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    bool pairwise = true;
    std::uint32_t extend = full & ~s;
    for (int v = 0; v < n && pairwise; ++v) {
      if (s >> v & 1) {
        if ((s & ~(1u << v) & ~ok[v]) != 0) pairwise = false;
        extend &= ok[v];
      }
    }
    if (!pairwise || extend != 0) continue;
    std::vector<Vertex> set;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) set.push_back(v);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> naive_maximal_antichains(const Graph& g,
                                                          const VertexOrdering& sigma) {
  return maximal_compatible_sets(g.n(), [&](Vertex x, Vertex y) {
    return !naive_less(g, sigma, x, y) && !naive_less(g, sigma, y, x);
  });
}

std::vector<std::vector<Vertex>> naive_maximal_cliques(const Graph& g) {
  return maximal_compatible_sets(g.n(), [&](Vertex x, Vertex y) { return g.has_edge(x, y); });
}

bool naive_ma_leq(const Graph& g, const VertexOrdering& sigma, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b) {
  return std::all_of(a.begin(), a.end(), [&](Vertex x) {
    return std::any_of(b.begin(), b.end(),
                       [&](Vertex y) { return x == y || naive_less(g, sigma, x, y); });
  });
}

namespace {

int extreme_bound(const std::vector<std::vector<bool>>& leq, int i, int j, bool lower) {
  const int k = static_cast<int>(leq.size());
  std::vector<int> bounds;
  for (int x = 0; x < k; ++x) {
    if (lower ? (leq[x][i] && leq[x][j]) : (leq[i][x] && leq[j][x])) bounds.push_back(x);
  }
  for (int c : bounds) {
    const bool best = std::all_of(bounds.begin(), bounds.end(),
                                  [&](int x) { return lower ? leq[x][c] : leq[c][x]; });
    if (best) return c;
  }
  return -1;
}

}  // namespace

int naive_glb(const std::vector<std::vector<bool>>& leq, int i, int j) {
  return extreme_bound(leq, i, j, true);
}

int naive_lub(const std::vector<std::vector<bool>>& leq, int i, int j) {
  return extreme_bound(leq, i, j, false);
}

bool naive_chordal(const Graph& g) {
  const int n = g.n();
  std::vector<bool> alive(n, true);
  for (int removed = 0; removed < n; ++removed) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) nb.push_back(w);
      }
      bool clique = true;
      for (std::size_t a = 0; a < nb.size() && clique; ++a) {
        for (std::size_t b = a + 1; b < nb.size() && clique; ++b) {
          clique = g.has_edge(nb[a], nb[b]);
        }
      }
      if (clique) pick = v;
    }
    if (pick < 0) return false;
    alive[pick] = false;
  }
  return true;
}

namespace {

// Depth-first search for an ordering accepted by `extends(prefix, next)`,
// which must check every triple whose last element is `next`.
bool some_ordering(int n, const std::function<bool(const std::vector<Vertex>&, Vertex)>& extends) {
  if (n > 12) throw std::invalid_argument("ordering backtracking limited to n <= 12");
  std::vector<Vertex> prefix;
  std::vector<bool> used(n, false);
  std::function<bool()> go = [&]() {
    if (static_cast<int>(prefix.size()) == n) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || !extends(prefix, v)) continue;
      used[v] = true;
      prefix.push_back(v);
      if (go()) return true;
      prefix.pop_back();
      used[v] = false;
    }
    return false;
  };
  return go();
}

}  // namespace

bool naive_interval_graph(const Graph& g) {
  return some_ordering(g.n(), [&](const std::vector<Vertex>& prefix, Vertex z) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!g.has_edge(prefix[i], z)) continue;
      for (std::size_t j = i + 1; j < prefix.size(); ++j) {
        if (!g.has_edge(prefix[i], prefix[j])) return false;
      }
    }
    return true;
  });
}

bool naive_cocomp_graph(const Graph& g) {
  return some_ordering(g.n(), [&](const std::vector<Vertex>& prefix, Vertex z) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!g.has_edge(prefix[i], z)) continue;
      for (std::size_t j = i + 1; j < prefix.size(); ++j) {
        if (!g.has_edge(prefix[i], prefix[j]) && !g.has_edge(prefix[j], z)) return false;
      }
    }
    return true;
  });
}

std::vector<Vertex> naive_simplicial(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto nb = g.neighbors(v);
    bool clique = true;
    for (std::size_t a = 0; a < nb.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < nb.size() && clique; ++b) {
        clique = g.has_edge(nb[a], nb[b]);
      }
    }
    if (clique) out.push_back(v);
  }
  return out;
}

std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace cocolat::testing
