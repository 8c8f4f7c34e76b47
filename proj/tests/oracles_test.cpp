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

#include <gtest/gtest.h>

#include <algorithm>

#include "cocolat/chainclique.hpp"
#include "cocolat/errors.hpp"
#include "cocolat/generate.hpp"
#include "cocolat/lattice.hpp"
#include "cocolat/oracles.hpp"
#include "support.hpp"

namespace cocolat {
namespace {

using testing::labels_of;

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

TEST(BronKerbosch, SmallGraphs) {
  EXPECT_EQ(bron_kerbosch(complete(4)), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  EXPECT_EQ(bron_kerbosch(cycle(4)),
            (std::vector<std::vector<Vertex>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  const auto f = testing::load_fixture("chain_lattice.txt");
  EXPECT_EQ(labels_of(f.graph, bron_kerbosch(f.graph)),
            (std::vector<std::vector<std::string>>{
                {"a", "b", "c"}, {"a", "b", "d"}, {"a", "d", "e"}, {"b", "c", "f"}}));
  EXPECT_THROW(bron_kerbosch(disjoint_two_chains(5).graph, 31), CapExceededError);
}

TEST(BronKerbosch, AgreesWithSubsetEnumeration) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::gen_graph(rng, 11, 0.5);
    EXPECT_EQ(bron_kerbosch(g), testing::naive_maximal_cliques(g));
  }
}

TEST(Chordal, TreesCyclesAndWitness) {
  EXPECT_TRUE(is_chordal(path(7)));
  EXPECT_TRUE(is_chordal(complete(5)));
  const auto report = is_chordal(cycle(4));
  EXPECT_FALSE(report);
  EXPECT_EQ(report.checked, Criterion::kChordal);
  auto cyc = report.witness_vertices;
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(report.tap_line(cycle(4)).rfind("not ok chordal", 0), 0u);
}

TEST(Chordal, WitnessIsAChordlessCycle) {
  testing::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::gen_graph(rng, 10, 0.35);
    const auto report = is_chordal(g);
    ASSERT_EQ(report.verdict, testing::naive_chordal(g));
    if (report) continue;
    const auto& c = report.witness_vertices;
    const int k = static_cast<int>(c.size());
    ASSERT_GE(k, 4);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        EXPECT_EQ(g.has_edge(c[i], c[j]), consecutive);
      }
    }
  }
}

TEST(AsteroidalTriple, IntervalGraphsHaveNone) {
  EXPECT_FALSE(find_asteroidal_triple(path(6)).has_value());
  EXPECT_TRUE(has_asteroidal_triple(complete(4)));
  testing::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = testing::gen_cocomp_any(rng, 1, 10);
    if (testing::naive_interval_graph(f.graph)) {
      EXPECT_FALSE(find_asteroidal_triple(f.graph).has_value());
    }
  }
}

TEST(AsteroidalTriple, SpiderHasAfg) {
  const auto spider = testing::load_fixture("spider.txt");
  const auto at = find_asteroidal_triple(spider.graph);
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(labels_of(spider.graph, {(*at)[0], (*at)[1], (*at)[2]}),
            (std::vector<std::string>{"a", "f", "g"}));
  const auto report = has_asteroidal_triple(spider.graph);
  EXPECT_FALSE(report);
  EXPECT_EQ(report.checked, Criterion::kAtFree);
  EXPECT_EQ(report.witness_vertices.size(), 3u);
}

TEST(AsteroidalTriple, SubdividedClaw) {
  // Claw centre 0 with legs 0-1-2, 0-3-4, 0-5-6.
  const Graph g(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const auto at = find_asteroidal_triple(g);
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(*at, (std::array<Vertex, 3>{2, 4, 6}));
}

TEST(IntervalGraph, ConditionsAgree) {
  EXPECT_TRUE(is_interval_graph(path(5)));
  EXPECT_TRUE(is_interval_graph(complete(5)));
  const auto c4 = is_interval_graph(cycle(4));
  EXPECT_FALSE(c4);
  EXPECT_EQ(c4.checked, Criterion::kIntervalGraph);
  EXPECT_FALSE(is_interval_graph(testing::load_fixture("spider.txt").graph));
  testing::Rng rng(54);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::gen_graph(rng, 8, trial % 3 == 0 ? 0.7 : 0.35);
    const bool want = testing::naive_interval_graph(g);
    EXPECT_EQ(is_interval_graph(g).verdict, want);
    if (bron_kerbosch(g).size() <= 8) EXPECT_EQ(has_consecutive_clique_arrangement(g), want);
  }
}

TEST(MaximalChain, SixVertexChains) {
  const auto f = testing::load_fixture("six.txt", "six_tau.txt");
  const auto sigma = testing::ordering_of(f.graph, {"1", "3", "2", "4", "5", "6"});
  const ImplicitPoset p(f.graph, sigma);
  EXPECT_TRUE(verify_maximal_chain(p, maximal_interval_subgraph(f.graph, f.order)));
  const auto ldfs_chain =
      chainclique(f.graph, testing::load_fixture("six.txt", "six_ldfs.txt").order);
  const auto report = verify_maximal_chain(p, ldfs_chain);
  EXPECT_FALSE(report);
  EXPECT_EQ(report.checked, Criterion::kMaximalChain);
  const auto k = complete(4);
  EXPECT_TRUE(verify_maximal_chain(ImplicitPoset(k, VertexOrdering::identity(4)),
                                   chainclique(k, VertexOrdering::identity(4))));
}

TEST(MaximalChain, RejectsNonAntichainsAndNonMaximal) {
  const auto f = testing::load_fixture("p3.txt");
  const auto sigma = testing::ordering_of(f.graph, {"u", "v", "w"});
  const ImplicitPoset p(f.graph, sigma);
  const std::vector<Antichain> bad{Antichain(testing::ids(f.graph, {"u", "w"}))};
  EXPECT_THROW(verify_maximal_chain(p, bad), std::invalid_argument);
  const std::vector<Antichain> partial{Antichain(testing::ids(f.graph, {"u"})),
                                       Antichain(testing::ids(f.graph, {"v", "w"}))};
  EXPECT_FALSE(verify_maximal_chain(p, partial));
}

TEST(MaximalSubgraph, FifteenVertexChainIsMaximal) {
  const auto f = testing::load_fixture("fifteen.txt", "fifteen_tau.txt");
  const auto chain = chainclique(f.graph, f.order);
  EXPECT_TRUE(verify_maximal_subgraph_exhaustive(f.graph, chain, SubgraphKind::kInterval));
}

TEST(MaximalSubgraph, TruncatedChainIsNotMaximal) {
  const auto f = testing::load_fixture("six.txt", "six_tau.txt");
  auto chain = maximal_interval_subgraph(f.graph, f.order);
  // Shrinking the last clique to {4,5} loses edges 46 and 56; adding
  // either back keeps the graph interval.
  chain.cliques.back() = {f.graph.find_label("4"), f.graph.find_label("5")};
  chain.cliques.push_back({f.graph.find_label("6")});
  std::sort(chain.cliques.back().begin(), chain.cliques.back().end());
  const auto report =
      verify_maximal_subgraph_exhaustive(f.graph, chain, SubgraphKind::kInterval);
  EXPECT_FALSE(report);
  EXPECT_FALSE(report.witness_edges.empty());
  EXPECT_EQ(report.checked, Criterion::kMaximalInterval);
  EXPECT_FALSE(verify_maximal_subgraph_exhaustive(f.graph, chain, SubgraphKind::kChordal));
}

TEST(MaximalSubgraph, GuardOnMissingEdges) {
  const Graph k = complete(8);
  CliqueChain chain;
  for (Vertex v = 0; v < 8; ++v) chain.cliques.push_back({v});
  EXPECT_THROW(verify_maximal_subgraph_exhaustive(k, chain, SubgraphKind::kInterval, 20),
               CapExceededError);
}

TEST(Cocomparability, SmallCycles) {
  EXPECT_FALSE(is_cocomparability_bruteforce(cycle(5)));
  EXPECT_FALSE(testing::naive_cocomp_graph(cycle(5)));
  const auto c4 = is_cocomparability_bruteforce(cycle(4));
  EXPECT_TRUE(c4);
  ASSERT_EQ(c4.certificate.size(), 4u);
  EXPECT_TRUE(testing::naive_umbrella_free(cycle(4), VertexOrdering(c4.certificate)));
  EXPECT_THROW(is_cocomparability_bruteforce(path(11)), CapExceededError);
}

TEST(Cocomparability, AgreesWithBacktracking) {
  testing::Rng rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::gen_graph(rng, 7, 0.5);
    const auto report = is_cocomparability_bruteforce(g);
    EXPECT_EQ(report.verdict, testing::naive_cocomp_graph(g));
    if (report) EXPECT_TRUE(testing::naive_umbrella_free(g, VertexOrdering(report.certificate)));
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EXPECT_TRUE(is_cocomparability_bruteforce(random_cocomp_instance(9, 0.3, seed).graph));
  }
}

TEST(SimplicialOracle, Cycles) {
  EXPECT_TRUE(brute_force_simplicial(cycle(6)).empty());
  EXPECT_EQ(brute_force_simplicial(complete(3)), (std::vector<Vertex>{0, 1, 2}));
}

TEST(GlbLubTables, ChainAndNonLattice) {
  const auto chain = glb_lub_table_oracle(4, [](int i, int j) { return i <= j; });
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(chain.meet_of(i, j), std::min(i, j));
      EXPECT_EQ(chain.join_of(i, j), std::max(i, j));
    }
  }
  // Bowtie: 0,1 below both 2,3.
  const auto bowtie = [](int i, int j) { return i == j || (i < 2 && j >= 2); };
  EXPECT_THROW(glb_lub_table_oracle(4, bowtie), NotALatticeError);
}

TEST(GlbLubTables, DiamondMatchesLattice) {
  const auto inst = disjoint_two_chains(2);
  const auto lat = build_lattice(ImplicitPoset(inst.graph, inst.witness));
  const auto tables = glb_lub_table_oracle(lat);
  for (int i = 0; i < lat.size(); ++i) {
    for (int j = 0; j < lat.size(); ++j) {
      EXPECT_EQ(tables.meet_of(i, j), lat.meet(i, j));
      EXPECT_EQ(tables.join_of(i, j), lat.join(i, j));
    }
  }
}

TEST(Report, TapLine) {
  VerificationReport ok;
  ok.checked = Criterion::kIntervalGraph;
  EXPECT_EQ(ok.tap_line(Graph(1, {})), "ok interval-graph");
  const auto f = testing::load_fixture("p3.txt");
  VerificationReport bad;
  bad.verdict = false;
  bad.checked = Criterion::kMaximalChain;
  bad.witness_vertices = {0, 1};
  bad.witness_edges = {{1, 2}};
  bad.note = "gap";
  EXPECT_EQ(bad.tap_line(f.graph), "not ok maximal-chain {u,v} v-w # gap");
}

}  // namespace
}  // namespace cocolat
