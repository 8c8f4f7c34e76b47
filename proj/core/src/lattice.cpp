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

#include "cocolat/lattice.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cocolat/oracles.hpp"

namespace cocolat {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int size) { return Bits(static_cast<std::size_t>((size + 63) / 64), 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

Bits member_bits(const Antichain& a, int n) {
  Bits b = make_bits(n);
  for (Vertex v : a) set_bit(b, v);
  return b;
}

// (x & y) within z, word by word.
bool meet_within(const Bits& x, const Bits& y, const Bits& z) {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if ((x[w] & y[w]) & ~z[w]) return false;
  }
  return true;
}

// (x | y) within (z | t).
bool union_within(const Bits& x, const Bits& y, const Bits& z, const Bits& t) {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if ((x[w] | y[w]) & ~(z[w] | t[w])) return false;
  }
  return true;
}

int universe_of(const std::vector<Antichain>& elements) {
  int n = 0;
  for (const Antichain& a : elements) {
    if (!a.empty()) n = std::max(n, a.members().back() + 1);
  }
  return n;
}

std::string member_list(const Antichain& a, const Graph& g) {
  std::string s = "{";
  bool first = true;
  for (Vertex v : a) {
    if (!first) s += ",";
    s += g.label(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

MALattice MALattice::from_relation(std::vector<Antichain> elements,
                                   const std::vector<std::vector<bool>>& leq) {
  const int k = static_cast<int>(elements.size());
  if (static_cast<int>(leq.size()) != k) throw NotALatticeError("relation size mismatch");
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != k) throw NotALatticeError("relation size mismatch");
  }
  for (int i = 0; i < k; ++i) {
    if (!leq[i][i]) throw NotALatticeError("relation is not reflexive");
    for (int j = 0; j < k; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw NotALatticeError("relation is not antisymmetric");
      for (int l = 0; l < k; ++l) {
        if (leq[i][j] && leq[j][l] && !leq[i][l]) {
          throw NotALatticeError("relation is not transitive");
        }
      }
    }
  }
  {
    std::vector<Antichain> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw NotALatticeError("duplicate lattice element");
    }
  }
  const MeetJoinTables tables =
      glb_lub_table_oracle(k, [&](int i, int j) { return static_cast<bool>(leq[i][j]); });
  MALattice out;
  out.elements_ = std::move(elements);
  out.leq_.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.leq_[out.index(i, j)] = leq[i][j] ? 1 : 0;
  }
  out.meet_ = tables.meet;
  out.join_ = tables.join;
  out.finish_structure();
  return out;
}

int MALattice::index_of(const Antichain& a) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i] == a) return i;
  }
  return -1;
}

bool MALattice::is_chain() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

void MALattice::finish_structure() {
  const int k = size();
  std::vector<Bits> strict_up(k, make_bits(k));
  std::vector<Bits> strict_down(k, make_bits(k));
  bottom_ = top_ = -1;
  for (int i = 0; i < k; ++i) {
    int below = 0;
    int above = 0;
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (leq(i, j)) {
        set_bit(strict_up[i], j);
        ++above;
      }
      if (leq(j, i)) {
        set_bit(strict_down[i], j);
        ++below;
      }
    }
    if (above == k - 1) bottom_ = i;
    if (below == k - 1) top_ = i;
  }
  covers_.clear();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool between = false;
      for (std::size_t w = 0; w < strict_up[i].size() && !between; ++w) {
        between = (strict_up[i][w] & strict_down[j][w]) != 0;
      }
      if (!between) covers_.emplace_back(i, j);
    }
  }
}

std::vector<Antichain> maximal_antichains(const ImplicitPoset& p, std::size_t cap) {
  std::vector<Antichain> out;
  for (auto& clique : bron_kerbosch(p.graph(), cap)) out.emplace_back(std::move(clique));
  std::sort(out.begin(), out.end());
  return out;
}

MALattice build_lattice(const ImplicitPoset& p, const LatticeOptions& options) {
  std::vector<Antichain> elements = maximal_antichains(p, options.element_cap);
  const int k = static_cast<int>(elements.size());
  MALattice out;
  out.elements_ = std::move(elements);
  const std::vector<Antichain>& el = out.elements_;
  std::map<Antichain, int> index;
  for (int i = 0; i < k; ++i) index.emplace(el[i], i);
  const auto lookup = [&](const Antichain& a) {
    const auto it = index.find(a);
    if (it == index.end()) throw std::logic_error("meet or join left MA(P)");
    return it->second;
  };

  out.leq_.assign(static_cast<std::size_t>(k) * k, 0);
  out.meet_.assign(static_cast<std::size_t>(k) * k, -1);
  out.join_.assign(static_cast<std::size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      out.leq_[out.index(i, j)] = detail::ma_leq_unchecked(p, el[i], el[j]) ? 1 : 0;
    }
  }
  for (int i = 0; i < k; ++i) {
    out.meet_[out.index(i, i)] = i;
    out.join_[out.index(i, i)] = i;
    for (int j = i + 1; j < k; ++j) {
      const int m = lookup(detail::ma_meet_unchecked(p, el[i], el[j]));
      const int s = lookup(detail::ma_join_unchecked(p, el[i], el[j]));
      out.meet_[out.index(i, j)] = out.meet_[out.index(j, i)] = m;
      out.join_[out.index(i, j)] = out.join_[out.index(j, i)] = s;
    }
  }
  out.finish_structure();

  if (static_cast<std::size_t>(k) > options.validate_limit) return out;

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && out.leq(i, j) && out.leq(j, i)) {
        throw std::logic_error("MA(P) order is not antisymmetric");
      }
      if (!out.leq(i, j)) continue;
      for (int l = 0; l < k; ++l) {
        if (out.leq(j, l) && !out.leq(i, l)) throw std::logic_error("MA(P) order is not transitive");
      }
    }
  }
  MeetJoinTables tables;
  try {
    tables = glb_lub_table_oracle(k, [&](int i, int j) { return out.leq(i, j); });
  } catch (const NotALatticeError& e) {
    throw std::logic_error(std::string("MA(P) failed the lattice axioms: ") + e.what());
  }
  if (tables.meet != out.meet_ || tables.join != out.join_) {
    throw std::logic_error("meet or join disagrees with the leq table");
  }
  const int n = p.size();
  std::vector<Bits> bits;
  bits.reserve(k);
  for (const Antichain& a : el) bits.push_back(member_bits(a, n));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!out.leq(i, j)) continue;
      for (int l = 0; l < k; ++l) {
        if (out.leq(j, l) && !meet_within(bits[i], bits[l], bits[j])) {
          throw std::logic_error("consecutiveness fails on MA(P)");
        }
      }
    }
  }
  return out;
}

IntervalOrderReport is_interval_order(const ImplicitPoset& p, std::size_t lattice_cap) {
  IntervalOrderReport report;
  const int n = p.size();
  std::vector<std::pair<Vertex, Vertex>> less;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (p.less(x, y)) less.emplace_back(x, y);
    }
  }
  for (std::size_t s = 0; s < less.size() && !report.two_plus_two; ++s) {
    const auto [a, c] = less[s];
    for (std::size_t t = s + 1; t < less.size(); ++t) {
      const auto [b, d] = less[t];
      if (a == b || a == d || c == b || c == d) continue;
      if (p.incomparable(a, b) && p.incomparable(a, d) && p.incomparable(c, b) &&
          p.incomparable(c, d)) {
        report.two_plus_two = std::array<Vertex, 4>{a, c, b, d};
        break;
      }
    }
  }
  report.interval = !report.two_plus_two.has_value();

  try {
    const std::vector<Antichain> ma = maximal_antichains(p, lattice_cap);
    bool chain = true;
    for (std::size_t i = 0; i < ma.size() && chain; ++i) {
      for (std::size_t j = i + 1; j < ma.size() && chain; ++j) {
        chain = detail::ma_leq_unchecked(p, ma[i], ma[j]) ||
                detail::ma_leq_unchecked(p, ma[j], ma[i]);
      }
    }
    report.lattice_is_chain = chain;
    if (chain != report.interval) {
      throw std::logic_error("2+2 test and MA(P) chain test disagree");
    }
  } catch (const CapExceededError&) {
    report.lattice_is_chain.reset();
  }
  return report;
}

bool IntervalExtension::extends(const ImplicitPoset& p) const {
  for (Vertex x = 0; x < p.size(); ++x) {
    for (Vertex y = 0; y < p.size(); ++y) {
      if (p.less(x, y) && !before(x, y)) return false;
    }
  }
  return true;
}

IntervalExtension minimal_interval_extension(const ImplicitPoset& p,
                                             std::span<const Antichain> chain) {
  const VerificationReport check = verify_maximal_chain(p, chain);
  if (!check) throw std::invalid_argument("not a maximal chain: " + check.tap_line(p.graph()));
  const int n = p.size();
  IntervalExtension out{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
    for (Vertex v : chain[i]) {
      if (out.first[v] == 0) out.first[v] = i + 1;
      out.last[v] = i + 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.first[v] == 0) throw std::invalid_argument("chain misses a vertex");
  }
  return out;
}

LatticeConditionsReport check_lattice_conditions(const Graph& g, const MALattice& lattice) {
  const int k = lattice.size();
  const int n = g.n();
  for (const Antichain& a : lattice.elements()) {
    for (Vertex v : a) {
      if (v < 0 || v >= n) throw std::invalid_argument("lattice element outside the graph");
    }
    for (auto i = a.begin(); i != a.end(); ++i) {
      for (auto j = i + 1; j != a.end(); ++j) {
        if (!g.has_edge(*i, *j)) throw std::invalid_argument("lattice element is not a clique");
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (a.contains(v)) continue;
      const bool universal =
          std::all_of(a.begin(), a.end(), [&](Vertex u) { return g.has_edge(u, v); });
      if (universal) throw std::invalid_argument("lattice element is not a maximal clique");
    }
  }
  if (universe_of(lattice.elements()) > n) throw std::invalid_argument("vertex out of range");

  std::vector<Bits> bits;
  bits.reserve(k);
  for (const Antichain& a : lattice.elements()) bits.push_back(member_bits(a, n));

  LatticeConditionsReport report;
  for (int i = 0; i < k && report.consecutive; ++i) {
    for (int j = 0; j < k && report.consecutive; ++j) {
      if (!lattice.leq(i, j)) continue;
      for (int l = 0; l < k; ++l) {
        if (lattice.leq(j, l) && !meet_within(bits[i], bits[l], bits[j])) {
          report.consecutive = false;
          report.consecutive_witness = std::array<int, 3>{i, j, l};
          break;
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Bits& m = bits[lattice.meet(i, j)];
      const Bits& s = bits[lattice.join(i, j)];
      if (report.union_covered && !union_within(bits[i], bits[j], m, s)) {
        report.union_covered = false;
        report.union_witness = std::make_pair(i, j);
      }
      if (report.intersection_kept &&
          !(meet_within(bits[i], bits[j], m) && meet_within(bits[i], bits[j], s))) {
        report.intersection_kept = false;
        report.intersection_witness = std::make_pair(i, j);
      }
    }
  }
  return report;
}

void write_lattice_text(std::ostream& out, const MALattice& lattice, const Graph& g) {
  for (int i = 0; i < lattice.size(); ++i) {
    out << i << ": " << member_list(lattice.element(i), g) << '\n';
  }
  for (const auto& [i, j] : lattice.covers()) out << i << " < " << j << '\n';
}

void write_lattice_dot(std::ostream& out, const MALattice& lattice, const Graph& g) {
  out << "digraph ma {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << member_list(lattice.element(i), g) << "\"];\n";
  }
  if (lattice.bottom() >= 0) out << "  { rank=min; n" << lattice.bottom() << "; }\n";
  for (const auto& [i, j] : lattice.covers()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
}

}  // namespace cocolat
