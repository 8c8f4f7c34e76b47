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

// Release gate: ten numbered criteria, one PASS/FAIL line each. Arguments
// select a subset by number; none runs all. Exits 1 when any selected
// criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "cocolat/chainclique.hpp"
#include "cocolat/generate.hpp"
#include "cocolat/lattice.hpp"
#include "cocolat/oracles.hpp"
#include "cocolat/poset.hpp"
#include "cocolat/searches.hpp"
#include "properties.hpp"
#include "support.hpp"

namespace cocolat {
namespace {

using Clock = std::chrono::steady_clock;
using testing::labels_of;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs check(i) for i in [0, count) across hardware threads. Returns the
/// failure with the smallest index, so the report is deterministic.
Verdict parallel_instances(int count, const std::function<std::string(int)>& check) {
  std::atomic<int> next{0};
  std::mutex mu;
  int worst = count;
  std::string why;
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        std::string r;
        try {
          r = check(i);
        } catch (const std::exception& e) {
          r = std::string("exception: ") + e.what();
        }
        if (r.empty()) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (i < worst) {
          worst = i;
          why = std::move(r);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (worst == count) return {true, std::to_string(count) + " instances"};
  return fail("instance " + std::to_string(worst) + ": " + why);
}

testing::Rng instance_rng(int criterion, int i) {
  return testing::Rng(0x5eed0000ULL + static_cast<std::uint64_t>(criterion) * 100000ULL +
                      static_cast<std::uint64_t>(i));
}

using Names = std::vector<std::vector<std::string>>;

// 1: six-vertex fixture chains.
Verdict six_vertex_chains() {
  const auto start = Clock::now();
  const auto g = testing::load_fixture("six.txt").graph;
  const auto ldfs_order = testing::load_fixture("six.txt", "six_ldfs.txt").order;
  const auto tau = testing::load_fixture("six.txt", "six_tau.txt").order;
  const Names want_edges{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"}, {"2", "3"},
                         {"2", "4"}, {"4", "5"}, {"4", "6"}, {"5", "6"}};
  Names edges;
  for (const Edge& e : g.edges()) edges.push_back(labels_of(g, {e.u, e.v}));
  std::sort(edges.begin(), edges.end());
  if (edges != want_edges) return fail("fixture edge set differs");

  const auto ldfs_chain = chainclique(g, ldfs_order);
  if (labels_of(g, ldfs_chain.cliques) != Names{{"1", "2", "3"}, {"1", "2", "4"}, {"4", "5", "6"}}) {
    return fail("(1a) LDFS chain differs");
  }
  const auto sigma = local_mns_plus(g, tau);
  if (sigma != testing::ordering_of(g, {"1", "3", "2", "4", "5", "6"})) {
    return fail("(1b) LocalMNS+ ordering differs");
  }
  const auto chain = maximal_interval_subgraph(g, tau);
  if (labels_of(g, chain.cliques) !=
      Names{{"1", "2", "3"}, {"1", "2", "4"}, {"1", "4", "5"}, {"4", "5", "6"}}) {
    return fail("(1c) pipeline chain differs");
  }
  const ImplicitPoset p(g, sigma);
  if (!verify_maximal_chain(p, chain)) return fail("(1c) pipeline chain rejected");
  if (verify_maximal_chain(p, ldfs_chain)) return fail("(1c) LDFS chain accepted under P_sigma");
  if (verify_maximal_chain(ImplicitPoset(g, ldfs_order), ldfs_chain)) {
    return fail("(1c) LDFS chain accepted under its own order");
  }
  const double s = seconds_since(start);
  if (s >= 1.0) return fail("took " + std::to_string(s) + " s");
  return {true, "1a-1c exact"};
}

// 2: fifteen-vertex greedy chain.
Verdict fifteen_vertex_chain() {
  const auto start = Clock::now();
  const auto f = testing::load_fixture("fifteen.txt", "fifteen_tau.txt");
  const auto chain = chainclique(f.graph, f.order);
  const Names want{{"v1", "v2", "v3"},    {"v2", "v3", "v4"},   {"v3", "v4", "v5"},
                   {"v5", "v6"},          {"v6", "v7", "v8"},   {"v7", "v8", "v9"},
                   {"v10", "v8", "v9"},   {"v11", "v12", "v13"}, {"v11", "v13", "v14"},
                   {"v13", "v14", "v15"}};
  if (labels_of(f.graph, chain.cliques) != want) return fail("cliques differ");
  Names dropped;
  for (const Edge& e : discarded_edges(f.graph, chain)) {
    dropped.push_back(labels_of(f.graph, {e.u, e.v}));
  }
  std::sort(dropped.begin(), dropped.end());
  if (dropped != Names{{"v11", "v7"}, {"v12", "v4"}}) return fail("discarded edges differ");
  const double s = seconds_since(start);
  if (s >= 1.0) return fail("took " + std::to_string(s) + " s");
  return {true, "10 cliques, 2 discarded edges"};
}

// 3: 2^k maximal antichains.
Verdict two_chain_counts() {
  for (int k = 1; k <= 10; ++k) {
    const auto inst = disjoint_two_chains(k);
    const auto start = Clock::now();
    const auto count = maximal_antichains(ImplicitPoset(inst.graph, inst.witness)).size();
    const double s = seconds_since(start);
    if (count != (std::size_t{1} << k)) {
      return fail("k=" + std::to_string(k) + " gave " + std::to_string(count));
    }
    if (k == 10 && s >= 1.0) return fail("k=10 took " + std::to_string(s) + " s");
  }
  return {true, "k=1..10"};
}

// 4: lattice algebra.
Verdict lattice_algebra() {
  const auto n5 = testing::load_fixture("n5_poset.txt", "n5_poset_order.txt");
  const std::string fixture = testing::check_lattice_algebra(n5.graph, n5.order);
  if (!fixture.empty()) return fail("N5 fixture: " + fixture);
  return parallel_instances(200, [](int i) {
    auto rng = instance_rng(4, i);
    const auto f = testing::gen_cocomp_any(rng, 1, 9);
    return testing::check_lattice_algebra(f.graph, f.order);
  });
}

// 5: maximal interval subgraph is interval, chordal and maximal for both kinds.
Verdict maximal_subgraphs() {
  std::atomic<int> skipped{0};
  Verdict v = parallel_instances(500, [&](int i) -> std::string {
    // Redraw until the pipeline leaves at most 20 missing edges.
    for (int attempt = 0;; ++attempt) {
      auto rng = instance_rng(5, i * 1000 + attempt);
      const auto f = testing::gen_cocomp_any(rng, 1, 9);
      const auto chain = maximal_interval_subgraph(f.graph, f.order);
      if (discarded_edges(f.graph, chain).size() > 20) {
        ++skipped;
        continue;
      }
      const Graph kept = chain_subgraph(f.graph, chain);
      if (!is_interval_graph(kept)) return "output not interval";
      if (!testing::naive_interval_graph(kept)) return "output not interval (backtracking)";
      if (!is_chordal(kept)) return "output not chordal";
      if (!verify_maximal_chain(ImplicitPoset(f.graph, chain.source_ordering), chain)) {
        return "chain not maximal in MA(P_sigma)";
      }
      const auto iv = verify_maximal_subgraph_exhaustive(f.graph, chain, SubgraphKind::kInterval);
      if (!iv) return iv.tap_line(f.graph);
      const auto ch = verify_maximal_subgraph_exhaustive(f.graph, chain, SubgraphKind::kChordal);
      if (!ch) return ch.tap_line(f.graph);
      return "";
    }
  });
  if (v.pass) v.detail += ", " + std::to_string(skipped.load()) + " redrawn";
  return v;
}

// 6: chainclique on arbitrary graphs and orderings.
Verdict arbitrary_chainclique() {
  return parallel_instances(500, [](int i) {
    auto rng = instance_rng(6, i);
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = testing::gen_graph(rng, n, p);
    const auto sigma = testing::gen_ordering(rng, n);
    return testing::check_chain_properties(g, sigma, chainclique(g, sigma));
  });
}

// 7: simplicial vertices, plus the path negative control.
Verdict simplicial() {
  const auto p3 = testing::load_fixture("p3.txt", "p3_uwv.txt");
  const auto chain = chainclique(p3.graph, p3.order);
  const auto uv = testing::ids(p3.graph, {"u", "v"});
  if (std::find(chain.cliques.begin(), chain.cliques.end(), uv) != chain.cliques.end()) {
    return fail("negative control: {u,v} present in the u,w,v chain");
  }
  const auto lattice = build_lattice(ImplicitPoset(p3.graph, p3.order));
  const auto full = fully_comparable_cliques(lattice);
  if (std::find(full.begin(), full.end(), lattice.index_of(Antichain(uv))) == full.end()) {
    return fail("negative control: {u,v} not fully comparable");
  }
  return parallel_instances(1000, [](int i) -> std::string {
    auto rng = instance_rng(7, i);
    const auto f = testing::gen_cocomp_any(rng, 1, 30);
    const auto got = simplicial_vertices(f.graph, lbfs_plus(f.graph, f.order));
    if (got != brute_force_simplicial(f.graph)) return "differs from the brute-force oracle";
    if (got != testing::naive_simplicial(f.graph)) return "differs from the naive scan";
    return "";
  });
}

// 8: LocalMNS+ keeps cocomp orderings and flips them.
Verdict cocomp_preservation() {
  return parallel_instances(500, [](int i) -> std::string {
    auto rng = instance_rng(8, i);
    const auto f = testing::gen_cocomp_any(rng, 1, 50);
    const auto sigma = local_mns_plus(f.graph, f.order);
    if (!is_cocomp_ordering(f.graph, sigma)) return "output has an umbrella";
    if (!testing::naive_umbrella_free(f.graph, sigma)) return "output has an umbrella (naive)";
    if (!flipping_check(f.graph, sigma, f.order)) return "flipping property fails";
    return "";
  });
}

// 9: pipeline scaling against n + m log n.
Verdict complexity_smoke() {
  const std::vector<int> sizes{1000, 3162, 10000, 31623, 100000};
  std::vector<double> ratio;
  std::string rows;
  double largest = 0;
  for (int n : sizes) {
    const auto inst = random_permutation_instance(n, 20, 9000 + n);
    const cli::BenchRow row = cli::time_pipeline(inst, n >= 31623 ? 3 : 7);
    const double work = n + static_cast<double>(row.m) * std::log2(static_cast<double>(n));
    ratio.push_back(row.millis / work);
    rows += " n=" + std::to_string(n) + ",m=" + std::to_string(row.m) + "," +
            std::to_string(row.millis) + "ms";
    largest = row.millis;
  }
  const double spread = *std::max_element(ratio.begin(), ratio.end()) /
                        *std::min_element(ratio.begin(), ratio.end());
  char buf[64];
  std::snprintf(buf, sizeof buf, " spread %.2fx", spread);
  if (spread > 3.0) return fail("time/(n + m log n) spread above 3x:" + rows + buf);
  if (largest >= 10000.0) return fail("largest size took over 10 s:" + rows);
  return {true, std::string(rows.substr(1)) + buf};
}

// 10: fully comparable cliques appear in the pipeline chain.
Verdict fully_comparable() {
  return parallel_instances(300, [](int i) -> std::string {
    auto rng = instance_rng(10, i);
    const auto f = testing::gen_cocomp_any(rng, 1, 9);
    const auto chain = maximal_interval_subgraph(f.graph, f.order);
    const auto lattice = build_lattice(ImplicitPoset(f.graph, chain.source_ordering));
    for (int idx : fully_comparable_cliques(lattice)) {
      const auto& a = lattice.element(idx);
      const std::vector<Vertex> clique(a.begin(), a.end());
      if (std::find(chain.cliques.begin(), chain.cliques.end(), clique) == chain.cliques.end()) {
        return "fully comparable clique missing from the chain";
      }
    }
    return "";
  });
}

struct Gate {
  int number;
  const char* name;
  Verdict (*run)();
};

const Gate kGates[] = {
    {1, "six-vertex chains reproduce exactly", six_vertex_chains},
    {2, "fifteen-vertex chain and discarded edges", fifteen_vertex_chain},
    {3, "2^k maximal antichains for k disjoint 2-chains", two_chain_counts},
    {4, "meet/join algebra of MA(P)", lattice_algebra},
    {5, "maximal interval subgraph is maximal for both kinds", maximal_subgraphs},
    {6, "chainclique properties on arbitrary inputs", arbitrary_chainclique},
    {7, "simplicial vertices match brute force", simplicial},
    {8, "LocalMNS+ preserves cocomp orderings", cocomp_preservation},
    {9, "pipeline scales as n + m log n", complexity_smoke},
    {10, "fully comparable cliques lie on the chain", fully_comparable},
};

}  // namespace
}  // namespace cocolat

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : cocolat::kGates) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto start = cocolat::Clock::now();
    cocolat::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = cocolat::fail(std::string("exception: ") + e.what());
    }
    const double s = cocolat::seconds_since(start);
    std::printf("%s %2d %s (%.2f s) %s\n", v.pass ? "PASS" : "FAIL", c.number, c.name, s,
                v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
