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

#include "cocolat/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>

namespace cocolat {
namespace {

using Mask = std::uint64_t;

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<std::vector<Vertex>> run() {
    std::vector<Vertex> all(g_.n());
    for (Vertex v = 0; v < g_.n(); ++v) all[v] = v;
    std::vector<Vertex> r;
    if (g_.n() > 0) expand(r, all, {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out_.size() >= cap_) throw CapExceededError("maximal clique count exceeds cap");
        std::vector<Vertex> c = r;
        std::sort(c.begin(), c.end());
        out_.push_back(std::move(c));
      }
      return;
    }
    // Pivot: the vertex of P + X with most neighbors in P, smallest id first.
    Vertex pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (Vertex u : *set) {
        const std::size_t hits = sorted_intersection(p, g_.neighbors(u)).size();
        if (pivot < 0 || hits > best) {
          pivot = u;
          best = hits;
        }
      }
    }
    std::vector<Vertex> candidates;
    std::set_difference(p.begin(), p.end(), g_.neighbors(pivot).begin(),
                        g_.neighbors(pivot).end(), std::back_inserter(candidates));
    for (Vertex v : candidates) {
      r.push_back(v);
      expand(r, sorted_intersection(p, g_.neighbors(v)), sorted_intersection(x, g_.neighbors(v)));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<Vertex>> out_;
};

// Shortest path from u to w whose interior avoids `blocked`.
std::vector<Vertex> path_avoiding(const Graph& g, Vertex u, Vertex w,
                                  const std::vector<char>& blocked) {
  std::vector<Vertex> parent(g.n(), -1);
  std::queue<Vertex> queue;
  parent[u] = u;
  queue.push(u);
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop();
    for (Vertex b : g.neighbors(a)) {
      if (parent[b] >= 0) continue;
      if (b == w) {
        parent[b] = a;
        std::vector<Vertex> path{w};
        for (Vertex c = a; c != u; c = parent[c]) path.push_back(c);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (blocked[b]) continue;
      parent[b] = a;
      queue.push(b);
    }
  }
  return {};
}

// Some chordless cycle of length >= 4, or empty.
std::vector<Vertex> chordless_cycle(const Graph& g) {
  const int n = g.n();
  std::vector<char> blocked(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (g.has_edge(nv[i], nv[j])) continue;
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[v] = 1;
        for (Vertex x : nv) blocked[x] = 1;
        std::vector<Vertex> path = path_avoiding(g, nv[i], nv[j], blocked);
        if (!path.empty()) {
          path.insert(path.begin(), v);
          return path;
        }
      }
    }
  }
  return {};
}

bool has_perfect_elimination(const Graph& g) {
  const int n = g.n();
  // Maximum cardinality search; its reverse is a perfect elimination
  // ordering iff g is chordal.
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<Vertex> visit;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    }
    position[best] = step;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) ++weight[w];
  }
  for (Vertex v : visit) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] < position[v] && (parent < 0 || position[w] > position[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && position[w] < position[v] && !g.has_edge(w, parent)) return false;
    }
  }
  return true;
}

// Bitmask graphs for the exhaustive subset scan.
struct SmallGraph {
  int n = 0;
  std::vector<Mask> adj;
};

Mask bit(int v) { return Mask{1} << v; }

bool small_chordal(const SmallGraph& g) {
  Mask remaining = g.n == 64 ? ~Mask{0} : bit(g.n) - 1;
  while (remaining) {
    bool found = false;
    for (Mask scan = remaining; scan; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      const Mask nb = g.adj[v] & remaining;
      bool clique = true;
      for (Mask s = nb; s && clique; s &= s - 1) {
        const int u = std::countr_zero(s);
        clique = (nb & ~(g.adj[u] | bit(u))) == 0;
      }
      if (clique) {
        remaining &= ~bit(v);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool small_at_free(const SmallGraph& g) {
  const int n = g.n;
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  // comp[x * n + v]: component of v in G - N[x], 0 when v in N[x].
  std::vector<Mask> comp(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    Mask left = all & ~(g.adj[x] | bit(x));
    while (left) {
      Mask c = left & (~left + 1);
      Mask frontier = c;
      while (frontier) {
        Mask grow = 0;
        for (Mask s = frontier; s; s &= s - 1) grow |= g.adj[std::countr_zero(s)];
        grow &= left & ~c;
        c |= grow;
        frontier = grow;
      }
      for (Mask s = c; s; s &= s - 1) comp[static_cast<std::size_t>(x) * n + std::countr_zero(s)] = c;
      left &= ~c;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adj[a] & bit(b)) continue;
      const Mask ab = comp[static_cast<std::size_t>(a) * n + b];
      for (int c = b + 1; c < n; ++c) {
        if ((g.adj[a] | g.adj[b]) & bit(c)) continue;
        if ((ab & bit(c)) && (comp[static_cast<std::size_t>(b) * n + a] & bit(c)) &&
            (comp[static_cast<std::size_t>(c) * n + a] & bit(b))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string join_labels(const Graph& g, std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += g.label(vs[i]);
  }
  return s;
}

VerificationReport fail(Criterion c, std::vector<Vertex> vertices, std::string note = {}) {
  VerificationReport r;
  r.verdict = false;
  r.checked = c;
  r.witness_vertices = std::move(vertices);
  r.note = std::move(note);
  return r;
}

VerificationReport pass(Criterion c) {
  VerificationReport r;
  r.checked = c;
  return r;
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::kChordal: return "chordal";
    case Criterion::kAtFree: return "at-free";
    case Criterion::kIntervalGraph: return "interval-graph";
    case Criterion::kMaximalChain: return "maximal-chain";
    case Criterion::kMaximalInterval: return "maximal-interval-subgraph";
    case Criterion::kMaximalChordal: return "maximal-chordal-subgraph";
    case Criterion::kCocomparability: return "cocomparability";
  }
  return "unknown";
}

std::string VerificationReport::tap_line(const Graph& g) const {
  std::string line = verdict ? "ok " : "not ok ";
  line += to_string(checked);
  if (verdict) return line;
  std::string witness;
  if (!witness_vertices.empty()) witness = "{" + join_labels(g, witness_vertices) + "}";
  for (std::size_t i = 0; i < witness_edges.size(); ++i) {
    witness += (i == 0 ? (witness.empty() ? "" : " ") : ",");
    witness += g.label(witness_edges[i].u) + "-" + g.label(witness_edges[i].v);
  }
  if (!witness.empty()) line += " " + witness;
  if (!note.empty()) line += " # " + note;
  return line;
}

std::vector<std::vector<Vertex>> bron_kerbosch(const Graph& g, std::size_t cap) {
  return CliqueEnumerator(g, cap).run();
}

VerificationReport is_chordal(const Graph& g) {
  if (has_perfect_elimination(g)) return pass(Criterion::kChordal);
  std::vector<Vertex> cycle = chordless_cycle(g);
  if (cycle.empty()) throw std::logic_error("no chordless cycle in a non-chordal graph");
  return fail(Criterion::kChordal, std::move(cycle), "chordless cycle");
}

std::optional<std::array<Vertex, 3>> find_asteroidal_triple(const Graph& g) {
  const int n = g.n();
  // comp[x][v]: component id of v in G - N[x]; -1 inside N[x].
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (Vertex x = 0; x < n; ++x) {
    std::vector<char> blocked(n, 0);
    blocked[x] = 1;
    for (Vertex w : g.neighbors(x)) blocked[w] = 1;
    int id = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked[s] || comp[x][s] >= 0) continue;
      std::queue<Vertex> queue;
      comp[x][s] = id;
      queue.push(s);
      while (!queue.empty()) {
        const Vertex a = queue.front();
        queue.pop();
        for (Vertex b : g.neighbors(a)) {
          if (!blocked[b] && comp[x][b] < 0) {
            comp[x][b] = id;
            queue.push(b);
          }
        }
      }
      ++id;
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
        if (comp[a][b] == comp[a][c] && comp[b][a] == comp[b][c] && comp[c][a] == comp[c][b]) {
          return std::array<Vertex, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

VerificationReport has_asteroidal_triple(const Graph& g) {
  const auto at = find_asteroidal_triple(g);
  if (!at) return pass(Criterion::kAtFree);
  return fail(Criterion::kAtFree, {(*at)[0], (*at)[1], (*at)[2]}, "asteroidal triple");
}

bool has_consecutive_clique_arrangement(const Graph& g, int max_cliques) {
  const auto cliques = bron_kerbosch(g, static_cast<std::size_t>(max_cliques) + 1);
  const int k = static_cast<int>(cliques.size());
  if (k > max_cliques) throw CapExceededError("too many maximal cliques to permute");
  const int n = g.n();
  std::vector<std::vector<char>> has(k, std::vector<char>(n, 0));
  for (int i = 0; i < k; ++i) {
    for (Vertex v : cliques[i]) has[i][v] = 1;
  }
  // Place cliques left to right; a vertex is closed once a placed clique
  // omits it after it appeared. No later clique may contain a closed vertex.
  std::vector<char> used(k, 0), seen(n, 0), closed(n, 0);
  const auto place = [&](auto&& self, int depth, int last) -> bool {
    if (depth == k) return true;
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (Vertex v : cliques[c]) ok = ok && !closed[v];
      if (!ok) continue;
      std::vector<Vertex> newly_closed, newly_seen;
      if (last >= 0) {
        for (Vertex v : cliques[last]) {
          if (!has[c][v]) {
            closed[v] = 1;
            newly_closed.push_back(v);
          }
        }
      }
      for (Vertex v : cliques[c]) {
        if (!seen[v]) {
          seen[v] = 1;
          newly_seen.push_back(v);
        }
      }
      used[c] = 1;
      if (self(self, depth + 1, c)) return true;
      used[c] = 0;
      for (Vertex v : newly_closed) closed[v] = 0;
      for (Vertex v : newly_seen) seen[v] = 0;
    }
    return false;
  };
  return place(place, 0, -1);
}

VerificationReport is_interval_graph(const Graph& g, int cross_check_cliques) {
  VerificationReport chordal = is_chordal(g);
  VerificationReport verdict;
  if (!chordal) {
    verdict = fail(Criterion::kIntervalGraph, chordal.witness_vertices, chordal.note);
  } else if (const auto at = find_asteroidal_triple(g)) {
    verdict = fail(Criterion::kIntervalGraph, {(*at)[0], (*at)[1], (*at)[2]}, "asteroidal triple");
  } else {
    verdict = pass(Criterion::kIntervalGraph);
  }
  if (cross_check_cliques > 0) {
    try {
      if (has_consecutive_clique_arrangement(g, cross_check_cliques) != verdict.verdict) {
        throw std::logic_error("interval characterizations disagree");
      }
    } catch (const CapExceededError&) {
      // Too many cliques to permute; the chordal/AT verdict stands alone.
    }
  }
  return verdict;
}

VerificationReport verify_maximal_chain(const ImplicitPoset& p, std::span<const Antichain> chain) {
  const Criterion c = Criterion::kMaximalChain;
  if (chain.empty()) {
    return p.size() == 0 ? pass(c) : fail(c, {}, "empty chain");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_antichain(p, chain[i].members())) {
      throw std::invalid_argument("chain member " + std::to_string(i + 1) + " is not an antichain");
    }
    for (Vertex v : chain[i]) {
      if (v < 0 || v >= p.size()) throw std::invalid_argument("chain vertex out of range");
    }
    if (!is_maximal_antichain(p, chain[i].members())) {
      const auto m = chain[i].members();
      return fail(c, {m.begin(), m.end()},
                  "clique " + std::to_string(i + 1) + " is not a maximal antichain");
    }
  }
  const std::vector<Vertex> sources = p.sources();
  const auto first = chain.front().members();
  if (!std::equal(first.begin(), first.end(), sources.begin(), sources.end())) {
    return fail(c, {first.begin(), first.end()}, "first clique is not the set of sources");
  }
  const std::vector<Vertex> sinks = p.sinks();
  const auto last = chain.back().members();
  if (!std::equal(last.begin(), last.end(), sinks.begin(), sinks.end())) {
    return fail(c, {last.begin(), last.end()}, "last clique is not the set of sinks");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] == chain[i + 1] || !detail::ma_covers_unchecked(p, chain[i], chain[i + 1])) {
      std::vector<Vertex> both(chain[i].begin(), chain[i].end());
      both.insert(both.end(), chain[i + 1].begin(), chain[i + 1].end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      return fail(c, std::move(both),
                  "clique " + std::to_string(i + 2) + " does not cover clique " +
                      std::to_string(i + 1));
    }
  }
  return pass(c);
}

VerificationReport verify_maximal_chain(const ImplicitPoset& p, const CliqueChain& chain) {
  const std::vector<Antichain> cliques = chain.as_antichains();
  return verify_maximal_chain(p, std::span<const Antichain>(cliques));
}

VerificationReport verify_maximal_subgraph_exhaustive(const Graph& g, const CliqueChain& chain,
                                                      SubgraphKind kind, int max_missing) {
  const Criterion c =
      kind == SubgraphKind::kInterval ? Criterion::kMaximalInterval : Criterion::kMaximalChordal;
  const std::vector<Edge> missing = discarded_edges(g, chain);
  const int k = static_cast<int>(missing.size());
  if (k > max_missing) throw CapExceededError("too many missing edges for an exhaustive scan");
  const Graph base = chain_subgraph(g, chain);

  const auto witness_for = [&](std::uint64_t subset) {
    VerificationReport r = fail(c, {}, "restorable edge set");
    for (int i = 0; i < k; ++i) {
      if ((subset >> i) & 1U) r.witness_edges.push_back(missing[i]);
    }
    return r;
  };

  if (g.n() <= 64) {
    SmallGraph sg{g.n(), std::vector<Mask>(g.n(), 0)};
    for (const Edge& e : base.edges()) {
      sg.adj[e.u] |= bit(e.v);
      sg.adj[e.v] |= bit(e.u);
    }
    // Gray code: one edge toggles per step.
    std::uint64_t subset = 0;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
      const int flip = std::countr_zero(step);
      subset ^= std::uint64_t{1} << flip;
      const Edge& e = missing[flip];
      sg.adj[e.u] ^= bit(e.v);
      sg.adj[e.v] ^= bit(e.u);
      const bool good = small_chordal(sg) && (kind == SubgraphKind::kChordal || small_at_free(sg));
      if (good) return witness_for(subset);
    }
    return pass(c);
  }

  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    std::vector<Edge> extra;
    for (int i = 0; i < k; ++i) {
      if ((subset >> i) & 1U) extra.push_back(missing[i]);
    }
    const Graph h = with_edges(base, extra);
    const bool good = kind == SubgraphKind::kChordal ? is_chordal(h).verdict
                                                     : is_interval_graph(h, 0).verdict;
    if (good) return witness_for(subset);
  }
  return pass(c);
}

std::vector<Vertex> brute_force_simplicial(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto nv = g.neighbors(v);
    bool clique = true;
    for (std::size_t i = 0; i < nv.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < nv.size() && clique; ++j) clique = g.has_edge(nv[i], nv[j]);
    }
    if (clique) out.push_back(v);
  }
  return out;
}

VerificationReport is_cocomparability_bruteforce(const Graph& g, int max_n) {
  const int n = g.n();
  if (n > max_n) throw CapExceededError("graph too large for the exhaustive cocomparability scan");
  std::vector<Vertex> prefix;
  std::vector<char> used(n, 0);
  // Appending z closes every triple that ends at z.
  const auto umbrella_free_with = [&](Vertex z) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const Vertex x = prefix[i];
      if (!g.has_edge(x, z)) continue;
      for (std::size_t j = i + 1; j < prefix.size(); ++j) {
        const Vertex y = prefix[j];
        if (!g.has_edge(x, y) && !g.has_edge(y, z)) return false;
      }
    }
    return true;
  };
  const auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(prefix.size()) == n) return true;
    for (Vertex z = 0; z < n; ++z) {
      if (used[z] || !umbrella_free_with(z)) continue;
      used[z] = 1;
      prefix.push_back(z);
      if (self(self)) return true;
      prefix.pop_back();
      used[z] = 0;
    }
    return false;
  };
  if (!extend(extend)) return fail(Criterion::kCocomparability, {}, "every ordering has an umbrella");
  VerificationReport r = pass(Criterion::kCocomparability);
  r.certificate = prefix;
  return r;
}

MeetJoinTables glb_lub_table_oracle(int k, const std::function<bool(int, int)>& leq) {
  MeetJoinTables t;
  t.size = k;
  t.meet.assign(static_cast<std::size_t>(k) * k, -1);
  t.join.assign(static_cast<std::size_t>(k) * k, -1);
  std::vector<int> bounds;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int pass_no = 0; pass_no < 2; ++pass_no) {
        const bool lower = pass_no == 0;
        // below(a, b): a lies on the far side of b for this bound direction.
        const auto below = [&](int a, int b) { return lower ? leq(a, b) : leq(b, a); };
        bounds.clear();
        for (int l = 0; l < k; ++l) {
          if (below(l, i) && below(l, j)) bounds.push_back(l);
        }
        if (bounds.empty()) throw NotALatticeError("a pair has no common bound");
        int best = bounds.front();
        for (int l : bounds) {
          if (below(best, l)) best = l;
        }
        for (int l : bounds) {
          if (!below(l, best)) throw NotALatticeError("a pair has no unique meet or join");
        }
        (lower ? t.meet : t.join)[static_cast<std::size_t>(i) * k + j] = best;
      }
    }
  }
  return t;
}

MeetJoinTables glb_lub_table_oracle(const MALattice& lattice) {
  return glb_lub_table_oracle(lattice.size(), [&](int i, int j) { return lattice.leq(i, j); });
}

}  // namespace cocolat
