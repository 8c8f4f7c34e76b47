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

#include "cocolat/searches.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "cocolat/poset.hpp"

namespace cocolat {
namespace {

// Adjacency lists re-sorted so each list runs in increasing tie rank.
std::vector<std::vector<Vertex>> neighbors_by_rank(const Graph& g, const TieBreaker& tb) {
  std::vector<std::vector<Vertex>> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out[v].reserve(g.degree(v));
  for (int r = 0; r < g.n(); ++r) {
    const Vertex u = tb.at_rank(r);
    for (Vertex w : g.neighbors(u)) out[w].push_back(u);
  }
  return out;
}

void check_tie_breaker(const Graph& g, const TieBreaker& tb) {
  if (tb.is_plus()) require_same_size(g, tb.reference());
}

// Ordered partition of the unvisited vertices into label classes, each a
// doubly linked list in tie-rank order. Supports LBFS refinement in
// O(degree) per visited vertex.
class LinkedPartition {
 public:
  LinkedPartition(int n, const TieBreaker& tb) : next_(n, -1), prev_(n, -1), cls_(n, -1) {
    if (n == 0) return;
    first_ = new_class();
    for (int r = 0; r < n; ++r) append(first_, tb.at_rank(r));
  }

  Vertex pop_front() {
    const Vertex v = classes_[first_].head;
    remove(v);
    return v;
  }

  // Moves the unvisited members of `nbrs` just before their classes, in the
  // given order. `step` distinguishes refinement rounds.
  void refine(std::span<const Vertex> nbrs, const std::vector<char>& visited, int step) {
    for (Vertex w : nbrs) {
      if (visited[w]) continue;
      const int c = cls_[w];
      int target;
      if (classes_[c].stamp == step) {
        target = classes_[c].split;
      } else {
        target = new_class();
        link_before(target, c);
        classes_[c].stamp = step;
        classes_[c].split = target;
      }
      remove(w);
      append(target, w);
    }
  }

 private:
  struct Class {
    int head = -1, tail = -1, prev = -1, next = -1;
    int size = 0;
    int stamp = -1, split = -1;
  };

  int new_class() {
    classes_.push_back({});
    return static_cast<int>(classes_.size()) - 1;
  }

  void link_before(int c, int before) {
    Class& b = classes_[before];
    classes_[c].next = before;
    classes_[c].prev = b.prev;
    if (b.prev >= 0) classes_[b.prev].next = c;
    else first_ = c;
    b.prev = c;
  }

  void append(int c, Vertex v) {
    Class& k = classes_[c];
    cls_[v] = c;
    prev_[v] = k.tail;
    next_[v] = -1;
    if (k.tail >= 0) next_[k.tail] = v;
    else k.head = v;
    k.tail = v;
    ++k.size;
  }

  void remove(Vertex v) {
    const int c = cls_[v];
    Class& k = classes_[c];
    if (prev_[v] >= 0) next_[prev_[v]] = next_[v];
    else k.head = next_[v];
    if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
    else k.tail = prev_[v];
    cls_[v] = -1;
    if (--k.size == 0) {
      if (k.prev >= 0) classes_[k.prev].next = k.next;
      else first_ = k.next;
      if (k.next >= 0) classes_[k.next].prev = k.prev;
    }
  }

  std::vector<int> next_, prev_, cls_;
  std::vector<Class> classes_;
  int first_ = -1;
};

// Unvisited vertices as a flat sequence tagged with label-class ids. O(n) per
// refinement; used by LDFS and the search audits.
class FlatPartition {
 public:
  FlatPartition(int n, const TieBreaker& tb) : cls_(n, 0) {
    seq_.reserve(n);
    for (int r = 0; r < n; ++r) seq_.push_back(tb.at_rank(r));
  }

  bool empty() const { return seq_.empty(); }
  Vertex front() const { return seq_.front(); }
  bool in_first_class(Vertex v) const { return !seq_.empty() && cls_[v] == cls_[seq_.front()]; }

  void erase(Vertex v) { seq_.erase(std::find(seq_.begin(), seq_.end(), v)); }

  // LBFS: inside every class, marked vertices move ahead of the rest.
  // LDFS: every marked vertex moves ahead of every unmarked one.
  void refine(const std::vector<int>& mark, int stamp, bool depth_first) {
    std::vector<Vertex> hit, miss;
    std::vector<Vertex> out;
    out.reserve(seq_.size());
    std::vector<Vertex> tail;
    std::size_t i = 0;
    while (i < seq_.size()) {
      std::size_t j = i;
      const int c = cls_[seq_[i]];
      hit.clear();
      miss.clear();
      while (j < seq_.size() && cls_[seq_[j]] == c) {
        (mark[seq_[j]] == stamp ? hit : miss).push_back(seq_[j]);
        ++j;
      }
      const int hit_id = next_id_++;
      const int miss_id = next_id_++;
      for (Vertex v : hit) cls_[v] = hit_id;
      for (Vertex v : miss) cls_[v] = miss_id;
      out.insert(out.end(), hit.begin(), hit.end());
      if (depth_first) tail.insert(tail.end(), miss.begin(), miss.end());
      else out.insert(out.end(), miss.begin(), miss.end());
      i = j;
    }
    out.insert(out.end(), tail.begin(), tail.end());
    seq_ = std::move(out);
  }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> cls_;
  int next_id_ = 1;
};

VertexOrdering flat_search(const Graph& g, const TieBreaker& tb, bool depth_first,
                           OrderingSource source) {
  check_tie_breaker(g, tb);
  const int n = g.n();
  FlatPartition part(n, tb);
  std::vector<int> mark(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    const Vertex v = part.front();
    part.erase(v);
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) mark[w] = step;
    part.refine(mark, step, depth_first);
  }
  return VertexOrdering(std::move(order), source);
}

bool flat_audit(const Graph& g, const VertexOrdering& sigma, bool depth_first) {
  require_same_size(g, sigma);
  const int n = g.n();
  FlatPartition part(n, TieBreaker::first_index());
  std::vector<int> mark(n, -1);
  for (int step = 0; step < n; ++step) {
    const Vertex v = sigma.at(step);
    if (!part.in_first_class(v)) return false;
    part.erase(v);
    for (Vertex w : g.neighbors(v)) mark[w] = step;
    part.refine(mark, step, depth_first);
  }
  return true;
}

using Bits = std::vector<std::uint64_t>;

// a strictly inside b.
bool strict_subset(const Bits& a, const Bits& b) {
  bool proper = false;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
    if (b[w] & ~a[w]) proper = true;
  }
  return proper;
}

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

}  // namespace

VertexOrdering lbfs(const Graph& g, const TieBreaker& tb) {
  check_tie_breaker(g, tb);
  const int n = g.n();
  const auto nbrs = neighbors_by_rank(g, tb);
  LinkedPartition part(n, tb);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    const Vertex v = part.pop_front();
    visited[v] = 1;
    order.push_back(v);
    part.refine(nbrs[v], visited, step);
  }
  return VertexOrdering(std::move(order), OrderingSource::kLbfs);
}

VertexOrdering lbfs_plus(const Graph& g, const VertexOrdering& tau) {
  return lbfs(g, TieBreaker::plus(tau));
}

VertexOrdering ldfs(const Graph& g, const TieBreaker& tb) {
  return flat_search(g, tb, /*depth_first=*/true, OrderingSource::kLdfs);
}

VertexOrdering ldfs_plus(const Graph& g, const VertexOrdering& tau) {
  return ldfs(g, TieBreaker::plus(tau));
}

VertexOrdering mcs(const Graph& g, const TieBreaker& tb) {
  check_tie_breaker(g, tb);
  const int n = g.n();
  std::vector<std::set<int>> bucket(n + 1);
  std::vector<int> score(n, 0);
  std::vector<char> visited(n, 0);
  for (int r = 0; r < n; ++r) bucket[0].insert(r);
  int top = 0;
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    while (bucket[top].empty()) --top;
    const int r = *bucket[top].begin();
    bucket[top].erase(bucket[top].begin());
    const Vertex v = tb.at_rank(r);
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      const int rw = tb.rank(w);
      bucket[score[w]].erase(rw);
      bucket[++score[w]].insert(rw);
      top = std::max(top, score[w]);
    }
  }
  return VertexOrdering(std::move(order), OrderingSource::kMcs);
}

VertexOrdering local_mns(const Graph& g, const TieBreaker& tb,
                         const LocalCliqueObserver& observer) {
  check_tie_breaker(g, tb);
  const int n = g.n();
  // bucket[s]: tie ranks of unvisited vertices with |N(w) & D| = s.
  std::vector<std::set<int>> bucket(n + 1);
  std::vector<int> score(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> stamp(n, -1);
  std::vector<Vertex> d;
  std::vector<Vertex> kept;
  for (int r = 0; r < n; ++r) bucket[0].insert(r);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int top = static_cast<int>(d.size());
    while (bucket[top].empty()) --top;
    const int r = *bucket[top].begin();
    bucket[top].erase(bucket[top].begin());
    const Vertex v = tb.at_rank(r);
    visited[v] = 1;
    order.push_back(v);

    for (Vertex w : g.neighbors(v)) stamp[w] = step;
    kept.clear();
    for (Vertex x : d) {
      if (stamp[x] == step) {
        kept.push_back(x);
        continue;
      }
      // x leaves D for good; only v can ever enter.
      for (Vertex w : g.neighbors(x)) {
        if (visited[w]) continue;
        const int rw = tb.rank(w);
        bucket[score[w]].erase(rw);
        bucket[--score[w]].insert(rw);
      }
    }
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      const int rw = tb.rank(w);
      bucket[score[w]].erase(rw);
      bucket[++score[w]].insert(rw);
    }
    kept.push_back(v);
    std::swap(d, kept);
    if (observer) observer(step, d);
  }
  return VertexOrdering(std::move(order),
                        tb.is_plus() ? OrderingSource::kLocalMnsPlus : OrderingSource::kLocalMns);
}

VertexOrdering local_mns_plus(const Graph& g, const VertexOrdering& tau,
                              const LocalCliqueObserver& observer) {
  return local_mns(g, TieBreaker::plus(tau), observer);
}

VertexOrdering local_mcs_linear(const Graph& g) {
  const int n = g.n();
  // Doubly linked score buckets; heads[s] = -1 when empty.
  std::vector<int> heads(n + 1, -1), next(n, -1), prev(n, -1), score(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> stamp(n, -1);
  const auto unlink = [&](Vertex w) {
    if (prev[w] >= 0) next[prev[w]] = next[w];
    else heads[score[w]] = next[w];
    if (next[w] >= 0) prev[next[w]] = prev[w];
  };
  const auto push = [&](Vertex w) {
    prev[w] = -1;
    next[w] = heads[score[w]];
    if (next[w] >= 0) prev[next[w]] = w;
    heads[score[w]] = w;
  };
  for (Vertex v = n - 1; v >= 0; --v) push(v);
  std::vector<Vertex> d, kept, order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int top = static_cast<int>(d.size());
    while (heads[top] < 0) --top;
    const Vertex v = heads[top];
    unlink(v);
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) stamp[w] = step;
    kept.clear();
    for (Vertex x : d) {
      if (stamp[x] == step) {
        kept.push_back(x);
        continue;
      }
      for (Vertex w : g.neighbors(x)) {
        if (visited[w]) continue;
        unlink(w);
        --score[w];
        push(w);
      }
    }
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      unlink(w);
      ++score[w];
      push(w);
    }
    kept.push_back(v);
    std::swap(d, kept);
  }
  return VertexOrdering(std::move(order), OrderingSource::kLocalMns);
}

bool lbfs_audit(const Graph& g, const VertexOrdering& sigma) {
  return flat_audit(g, sigma, /*depth_first=*/false);
}

bool ldfs_audit(const Graph& g, const VertexOrdering& sigma) {
  return flat_audit(g, sigma, /*depth_first=*/true);
}

bool mcs_audit(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  const int n = g.n();
  std::vector<int> count(n, 0);
  std::vector<char> visited(n, 0);
  for (int step = 0; step < n; ++step) {
    const Vertex v = sigma.at(step);
    for (Vertex w = 0; w < n; ++w) {
      if (!visited[w] && count[w] > count[v]) return false;
    }
    visited[v] = 1;
    for (Vertex w : g.neighbors(v)) ++count[w];
  }
  return true;
}

bool mns_audit(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  const int n = g.n();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<Bits> label(n, Bits(words, 0));
  std::vector<char> visited(n, 0);
  for (int step = 0; step < n; ++step) {
    const Vertex v = sigma.at(step);
    for (Vertex w = 0; w < n; ++w) {
      if (!visited[w] && w != v && strict_subset(label[v], label[w])) return false;
    }
    visited[v] = 1;
    for (Vertex w : g.neighbors(v)) set_bit(label[w], step);
  }
  return true;
}

bool local_mns_audit(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  const int n = g.n();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  // label[w] = N(w) & D as a vertex bitset.
  std::vector<Bits> label(n, Bits(words, 0));
  std::vector<char> visited(n, 0);
  std::vector<Vertex> d;
  for (int step = 0; step < n; ++step) {
    const Vertex v = sigma.at(step);
    for (Vertex w = 0; w < n; ++w) {
      if (!visited[w] && w != v && strict_subset(label[v], label[w])) return false;
    }
    visited[v] = 1;
    std::vector<Vertex> next_d;
    for (Vertex x : d) {
      if (g.has_edge(v, x)) {
        next_d.push_back(x);
      } else {
        for (Vertex w : g.neighbors(x)) clear_bit(label[w], x);
      }
    }
    next_d.push_back(v);
    for (Vertex w : g.neighbors(v)) set_bit(label[w], v);
    d = std::move(next_d);
  }
  return true;
}

FlipCheck flipping_check(const Graph& g, const VertexOrdering& sigma, const VertexOrdering& tau) {
  require_same_size(g, sigma);
  require_same_size(sigma, tau);
  const int n = g.n();
  // Pairs ordered alike in both = C(n,2) - inversions of tau-positions read
  // along sigma. The check passes iff every such pair is an edge.
  std::vector<std::int64_t> fenwick(n + 1, 0);
  std::int64_t inversions = 0;
  for (int i = 0; i < n; ++i) {
    const int p = tau.position(sigma.at(i)) + 1;
    std::int64_t not_greater = 0;
    for (int k = p; k > 0; k -= k & -k) not_greater += fenwick[k];
    inversions += i - not_greater;
    for (int k = p; k <= n; k += k & -k) ++fenwick[k];
  }
  const std::int64_t agreeing = static_cast<std::int64_t>(n) * (n - 1) / 2 - inversions;
  std::int64_t agreeing_edges = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && sigma.before(u, v) == tau.before(u, v)) ++agreeing_edges;
    }
  }
  if (agreeing == agreeing_edges) return {};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vertex x = sigma.at(i);
      const Vertex y = sigma.at(j);
      if (tau.before(x, y) && !g.has_edge(x, y)) return {false, Edge{x, y}};
    }
  }
  return {false, std::nullopt};
}

MultisweepResult cocomp_order_multisweep(const Graph& g, std::optional<int> max_rounds) {
  const int rounds = max_rounds.value_or(g.n());
  MultisweepResult result{lbfs(g), false, 0};
  result.converged = is_cocomp_ordering(g, result.order).ok;
  while (!result.converged && result.rounds < rounds) {
    result.order = lbfs_plus(g, result.order);
    ++result.rounds;
    result.converged = is_cocomp_ordering(g, result.order).ok;
  }
  if (result.converged) result.order = result.order.with_source(OrderingSource::kCocomp);
  return result;
}

const std::vector<std::string>& search_names() {
  static const std::vector<std::string> names = {"lbfs", "lbfs+", "ldfs",     "ldfs+",
                                                 "mcs",  "localmns", "localmns+"};
  return names;
}

bool search_needs_reference(std::string_view name) {
  return !name.empty() && name.back() == '+';
}

VertexOrdering run_search(std::string_view name, const Graph& g,
                          const std::optional<VertexOrdering>& tau) {
  if (search_needs_reference(name) && !tau) {
    throw std::invalid_argument(std::string(name) + " needs a reference ordering");
  }
  if (name == "lbfs") return lbfs(g);
  if (name == "lbfs+") return lbfs_plus(g, *tau);
  if (name == "ldfs") return ldfs(g);
  if (name == "ldfs+") return ldfs_plus(g, *tau);
  if (name == "mcs") return mcs(g);
  if (name == "localmns") return local_mns(g);
  if (name == "localmns+") return local_mns_plus(g, *tau);
  throw std::invalid_argument("unknown search: " + std::string(name));
}

}  // namespace cocolat
