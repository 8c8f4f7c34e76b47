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

#include "cocolat/poset.hpp"

#include <algorithm>
#include <string>

namespace cocolat {
namespace {

// Neighbor positions of every vertex, sorted ascending.
std::vector<std::vector<int>> neighbor_positions(const Graph& g, const VertexOrdering& sigma) {
  std::vector<std::vector<int>> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    out[v].reserve(g.degree(v));
    for (Vertex w : g.neighbors(v)) out[v].push_back(sigma.position(w));
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

std::string describe(const Graph& g, std::array<Vertex, 3> t) {
  return g.label(t[0]) + " < " + g.label(t[1]) + " < " + g.label(t[2]);
}

void require_maximal(const ImplicitPoset& p, const Antichain& a, const char* what) {
  if (!is_maximal_antichain(p, a.members())) {
    throw NotMaximalAntichainError(std::string(what) + " is not a maximal antichain");
  }
}

std::vector<Vertex> minus(const Antichain& a, const Antichain& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> intersect(const Antichain& a, const Antichain& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> s_side(const ImplicitPoset& p, const Antichain& a, const Antichain& b,
                           bool below) {
  const std::vector<Vertex> a_only = minus(a, b);
  const std::vector<Vertex> b_only = minus(b, a);
  std::vector<Vertex> out;
  for (Vertex x : a_only) {
    const bool hit = std::any_of(b_only.begin(), b_only.end(), [&](Vertex y) {
      return below ? p.less(x, y) : p.less(y, x);
    });
    if (hit) out.push_back(x);
  }
  return out;
}

Antichain complete(const ImplicitPoset& p, std::vector<Vertex> core, bool take_max) {
  std::sort(core.begin(), core.end());
  const std::vector<Vertex> inc = inc_of(p, core);
  const std::vector<Vertex> extra = take_max ? max_of(p, inc) : min_of(p, inc);
  core.insert(core.end(), extra.begin(), extra.end());
  return Antichain(std::move(core));
}

}  // namespace

OrderingCheck is_cocomp_ordering(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  const int n = g.n();
  const auto npos = neighbor_positions(g, sigma);
  std::vector<int> stamp(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    const int px = sigma.position(x);
    for (Vertex w : g.neighbors(x)) stamp[w] = x;
    const auto& nx = npos[x];
    auto first_later = std::upper_bound(nx.begin(), nx.end(), px);
    for (auto it = first_later; it != nx.end(); ++it) {
      const int pz = *it;
      const Vertex z = sigma.at(pz);
      const int between = pz - px - 1;
      if (between == 0) continue;
      const int from_x = static_cast<int>(it - first_later);
      const auto& nz = npos[z];
      const int from_z = static_cast<int>(std::lower_bound(nz.begin(), nz.end(), pz) -
                                          std::upper_bound(nz.begin(), nz.end(), px));
      int common = 0;
      for (Vertex w : g.neighbors(z)) {
        const int pw = sigma.position(w);
        if (stamp[w] == x && pw > px && pw < pz) ++common;
      }
      if (from_x + from_z - common < between) {
        for (int py = px + 1; py < pz; ++py) {
          const Vertex y = sigma.at(py);
          if (!g.has_edge(x, y) && !g.has_edge(y, z)) return {false, std::array{x, y, z}};
        }
      }
    }
  }
  return {};
}

OrderingCheck is_interval_ordering(const Graph& g, const VertexOrdering& sigma) {
  require_same_size(g, sigma);
  for (Vertex x = 0; x < g.n(); ++x) {
    const int px = sigma.position(x);
    int later = 0;
    int reach = px;
    for (Vertex w : g.neighbors(x)) {
      const int pw = sigma.position(w);
      if (pw > px) {
        ++later;
        reach = std::max(reach, pw);
      }
    }
    if (reach - px > later) {
      for (int py = px + 1; py < reach; ++py) {
        const Vertex y = sigma.at(py);
        if (!g.has_edge(x, y)) return {false, std::array{x, y, sigma.at(reach)}};
      }
    }
  }
  return {};
}

NotCocompError::NotCocompError(const Graph& g, std::array<Vertex, 3> umbrella)
    : std::invalid_argument("ordering is not a cocomp ordering; umbrella " + describe(g, umbrella)),
      umbrella_(umbrella) {}

ImplicitPoset::ImplicitPoset(const Graph& g, VertexOrdering order, Verify verify)
    : graph_(&g), order_(std::move(order)) {
  require_same_size(g, order_);
  if (verify == Verify::kCheck) {
    const OrderingCheck check = is_cocomp_ordering(g, order_);
    if (!check) throw NotCocompError(g, *check.witness);
  }
}

bool ImplicitPoset::covered_by(Vertex x, Vertex y) const {
  if (!less(x, y)) return false;
  for (int i = order_.position(x) + 1; i < order_.position(y); ++i) {
    const Vertex z = order_.at(i);
    if (less(x, z) && less(z, y)) return false;
  }
  return true;
}

std::vector<Vertex> ImplicitPoset::sources() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    int earlier = 0;
    for (Vertex w : graph_->neighbors(v)) earlier += order_.before(w, v) ? 1 : 0;
    if (earlier == order_.position(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> ImplicitPoset::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    int later = 0;
    for (Vertex w : graph_->neighbors(v)) later += order_.before(v, w) ? 1 : 0;
    if (later == size() - 1 - order_.position(v)) out.push_back(v);
  }
  return out;
}

ImplicitPoset ImplicitPoset::reversed() const {
  return ImplicitPoset(*graph_, order_.reversed(), Verify::kTrust);
}

Antichain::Antichain(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Antichain::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool is_antichain(const ImplicitPoset& p, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || p.comparable(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_maximal_antichain(const ImplicitPoset& p, std::span<const Vertex> a) {
  if (!is_antichain(p, a)) return false;
  std::vector<char> in(p.size(), 0);
  for (Vertex v : a) in[v] = 1;
  for (Vertex x = 0; x < p.size(); ++x) {
    if (in[x]) continue;
    if (std::none_of(a.begin(), a.end(), [&](Vertex y) { return p.comparable(x, y); })) {
      return false;
    }
  }
  return true;
}

std::vector<Vertex> max_of(const ImplicitPoset& p, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    if (std::none_of(s.begin(), s.end(), [&](Vertex u) { return p.less(v, u); })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> min_of(const ImplicitPoset& p, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    if (std::none_of(s.begin(), s.end(), [&](Vertex u) { return p.less(u, v); })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> inc_of(const ImplicitPoset& p, std::span<const Vertex> s) {
  std::vector<char> in(p.size(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex x = 0; x < p.size(); ++x) {
    if (in[x]) continue;
    if (std::none_of(s.begin(), s.end(), [&](Vertex y) { return p.comparable(x, y); })) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Vertex> s_min(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return s_side(p, a, b, /*below=*/true);
}

std::vector<Vertex> s_max(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return s_side(p, a, b, /*below=*/false);
}

bool ma_leq(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return detail::ma_leq_unchecked(p, a, b);
}

bool ma_leq_reversed(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return std::all_of(b.begin(), b.end(), [&](Vertex y) {
    return std::any_of(a.begin(), a.end(), [&](Vertex x) { return p.leq(x, y); });
  });
}

Antichain ma_meet(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return detail::ma_meet_unchecked(p, a, b);
}

Antichain ma_join(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return detail::ma_join_unchecked(p, a, b);
}

bool ma_covers(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  if (a == b) throw std::invalid_argument("ma_covers needs two distinct antichains");
  require_maximal(p, a, "first argument");
  require_maximal(p, b, "second argument");
  return detail::ma_covers_unchecked(p, a, b);
}

namespace detail {

bool ma_leq_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  return std::all_of(a.begin(), a.end(), [&](Vertex x) {
    return std::any_of(b.begin(), b.end(), [&](Vertex y) { return p.leq(x, y); });
  });
}

Antichain ma_meet_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  std::vector<Vertex> core = intersect(a, b);
  for (Vertex v : s_side(p, a, b, true)) core.push_back(v);
  for (Vertex v : s_side(p, b, a, true)) core.push_back(v);
  return complete(p, std::move(core), /*take_max=*/true);
}

Antichain ma_join_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  std::vector<Vertex> core = intersect(a, b);
  for (Vertex v : s_side(p, a, b, false)) core.push_back(v);
  for (Vertex v : s_side(p, b, a, false)) core.push_back(v);
  return complete(p, std::move(core), /*take_max=*/false);
}

bool ma_covers_unchecked(const ImplicitPoset& p, const Antichain& a, const Antichain& b) {
  if (a == b) return false;
  const std::vector<Vertex> a_only = minus(a, b);
  const std::vector<Vertex> b_only = minus(b, a);
  for (Vertex x : a_only) {
    for (Vertex y : b_only) {
      if (!p.covered_by(x, y)) return false;
    }
  }
  return true;
}

}  // namespace detail
}  // namespace cocolat
