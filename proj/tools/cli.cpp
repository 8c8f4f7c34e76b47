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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "cocolat/chainclique.hpp"
#include "cocolat/graph_io.hpp"
#include "cocolat/lattice.hpp"
#include "cocolat/oracles.hpp"
#include "cocolat/poset.hpp"
#include "cocolat/searches.hpp"

namespace cocolat::cli {
namespace {

// Usage-level failure inside a verb (bad file, bad combination of flags).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

Graph read_graph(const std::string& path, Io& io) {
  if (path.empty() || path == "-") return load_graph(io.in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open graph file '" + path + "'");
  return load_graph(file);
}

VertexOrdering read_ordering(const std::string& path, const Graph& g) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open ordering file '" + path + "'");
  return load_ordering(file, g);
}

// Writes through `fn` to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  fn(file);
}

std::string umbrella_text(const Graph& g, const std::array<Vertex, 3>& t) {
  return "(" + g.label(t[0]) + "," + g.label(t[1]) + "," + g.label(t[2]) + ")";
}

std::string ordering_text(const VertexOrdering& order, const Graph& g) {
  std::ostringstream s;
  save_ordering(s, order, g);
  std::string text = s.str();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

SuiteLine line(bool ok, const std::string& criterion, const std::string& detail = {}) {
  SuiteLine l;
  l.ok = ok;
  l.text = std::string(ok ? "ok " : "not ok ") + criterion;
  if (!detail.empty()) l.text += " " + detail;
  return l;
}

SuiteLine line(const VerificationReport& r, const Graph& g) {
  SuiteLine l;
  l.ok = r.verdict;
  l.text = r.tap_line(g);
  return l;
}

SuiteLine skip(const std::string& criterion, const std::string& why) {
  SuiteLine l;
  l.skipped = true;
  l.text = "ok " + criterion + " # SKIP " + why;
  return l;
}

bool print_suite(const std::vector<SuiteLine>& lines, std::ostream& out) {
  bool all = true;
  for (const SuiteLine& l : lines) {
    out << l.text << '\n';
    all = all && l.ok;
  }
  return all;
}

struct Options {
  // Shared.
  std::string graph;
  std::string order;
  std::string out;
  std::string dot;
  std::string index;
  bool trust = false;
  // gen.
  int n = 9;
  double density = 0.3;
  double avg_degree = 20;
  double mean_length = 3;
  std::string kind = "cocomp";
  std::string emit_order;
  std::optional<std::uint64_t> seed;
  // check-cocomp.
  bool interval = false;
  // search.
  std::string name;
  std::string ref;
  // simplicial.
  bool mns = false;
  // lattice.
  std::size_t cap = 2048;
  bool conditions = false;
  // verify.
  bool all = false;
  int random = 0;
  int jobs = 1;
  // bench.
  int min_n = 1000;
  int max_n = 100000;
  int points = 5;
  int repeats = 3;
};

int do_gen(const Options& o, Io& io) {
  const std::uint64_t seed = o.seed.value_or(default_seed());
  GeneratedInstance inst;
  if (o.kind == "cocomp") {
    inst = random_cocomp_instance(o.n, o.density, seed);
  } else if (o.kind == "interval") {
    inst = random_interval_instance(o.n, o.mean_length, seed);
  } else if (o.kind == "permutation") {
    inst = random_permutation_instance(o.n, o.avg_degree, seed);
  } else if (o.kind == "two-chains") {
    inst = disjoint_two_chains(o.n);
  } else if (o.kind == "random") {
    if (!o.emit_order.empty()) throw UsageError("kind 'random' has no witness ordering");
    emit(o.out, io.out, [&](std::ostream& s) { save_graph(s, random_graph(o.n, o.density, seed)); });
    return kExitOk;
  } else {
    throw UsageError("unknown kind '" + o.kind + "'");
  }
  emit(o.out, io.out, [&](std::ostream& s) { save_graph(s, inst.graph); });
  if (!o.emit_order.empty()) {
    emit(o.emit_order, io.out, [&](std::ostream& s) { save_ordering(s, inst.witness, inst.graph); });
  }
  return kExitOk;
}

int do_check_cocomp(const Options& o, Io& io) {
  const Graph g = read_graph(o.graph, io);
  if (!o.order.empty()) {
    const VertexOrdering sigma = read_ordering(o.order, g);
    const OrderingCheck check = o.interval ? is_interval_ordering(g, sigma) : is_cocomp_ordering(g, sigma);
    const std::string criterion = o.interval ? "interval-ordering" : "cocomp-ordering";
    if (check) {
      io.out << "ok " << criterion << '\n';
      return kExitOk;
    }
    io.out << "not ok " << criterion << " " << umbrella_text(g, *check.witness) << '\n';
    return kExitFalse;
  }
  const MultisweepResult sweep = cocomp_order_multisweep(g);
  if (sweep.converged) {
    io.out << "ok cocomparability # certificate " << ordering_text(sweep.order, g) << '\n';
    return kExitOk;
  }
  if (g.n() <= 10) {
    const VerificationReport r = is_cocomparability_bruteforce(g);
    io.out << r.tap_line(g);
    if (r) io.out << " # certificate " << ordering_text(VertexOrdering(r.certificate), g);
    io.out << '\n';
    return r ? kExitOk : kExitFalse;
  }
  io.out << "not ok cocomparability # undecided: multisweep found no umbrella-free ordering\n";
  return kExitFalse;
}

int do_search(const Options& o, Io& io) {
  const Graph g = read_graph(o.graph, io);
  std::optional<VertexOrdering> tau;
  if (!o.ref.empty()) tau = read_ordering(o.ref, g);
  if (search_needs_reference(o.name) && !tau) {
    throw UsageError("search '" + o.name + "' needs --ref");
  }
  const VertexOrdering sigma = run_search(o.name, g, tau);
  emit(o.out, io.out, [&](std::ostream& s) { save_ordering(s, sigma, g); });
  return kExitOk;
}

void emit_chain(const Options& o, Io& io, const Graph& g, const CliqueChain& chain) {
  emit(o.out, io.out, [&](std::ostream& s) { write_chain_text(s, chain, g); });
  if (!o.dot.empty()) emit(o.dot, io.out, [&](std::ostream& s) { write_chain_dot(s, chain, g); });
  if (!o.index.empty()) {
    emit(o.index, io.out,
         [&](std::ostream& s) { write_chain_index_tsv(s, chain_index(chain, g), g); });
  }
}

int do_chainclique(const Options& o, Io& io) {
  const Graph g = read_graph(o.graph, io);
  emit_chain(o, io, g, chainclique(g, read_ordering(o.order, g)));
  return kExitOk;
}

int do_max_subgraph(const Options& o, Io& io, bool chordal) {
  const Graph g = read_graph(o.graph, io);
  const VertexOrdering tau = read_ordering(o.order, g);
  const Verify verify = o.trust ? Verify::kTrust : Verify::kCheck;
  const CliqueChain chain =
      chordal ? maximal_chordal_subgraph(g, tau, verify) : maximal_interval_subgraph(g, tau, verify);
  emit_chain(o, io, g, chain);
  io.err << (chordal ? "maximal chordal subgraph: " : "maximal interval subgraph: ")
         << chain.edge_count << " edges kept, " << (g.m() - chain.edge_count) << " discarded\n";
  return kExitOk;
}

int do_simplicial(const Options& o, Io& io) {
  const Graph g = read_graph(o.graph, io);
  const VertexOrdering sigma = read_ordering(o.order, g);
  const Verify verify = o.trust ? Verify::kTrust : Verify::kCheck;
  const std::vector<Vertex> simp =
      o.mns ? simplicial_vertices(g, sigma, verify) : simplicial_vertices_from_cocomp(g, sigma, verify);
  emit(o.out, io.out, [&](std::ostream& s) {
    for (std::size_t i = 0; i < simp.size(); ++i) s << (i ? " " : "") << g.label(simp[i]);
    s << '\n';
  });
  return kExitOk;
}

int do_lattice(const Options& o, Io& io) {
  const Graph g = read_graph(o.graph, io);
  const ImplicitPoset p(g, read_ordering(o.order, g), o.trust ? Verify::kTrust : Verify::kCheck);
  LatticeOptions lo;
  lo.element_cap = o.cap;
  const MALattice lattice = build_lattice(p, lo);
  emit(o.out, io.out, [&](std::ostream& s) { write_lattice_text(s, lattice, g); });
  if (!o.dot.empty()) emit(o.dot, io.out, [&](std::ostream& s) { write_lattice_dot(s, lattice, g); });
  if (!o.conditions) return kExitOk;
  const LatticeConditionsReport r = check_lattice_conditions(g, lattice);
  io.out << (r.consecutive ? "ok" : "not ok") << " condition-i\n";
  io.out << (r.union_covered ? "ok" : "not ok") << " condition-ii\n";
  io.out << (r.intersection_kept ? "ok" : "not ok") << " condition-iii\n";
  return r.all() ? kExitOk : kExitFalse;
}

int do_verify(const Options& o, Io& io) {
  if (o.random > 0) {
    if (o.jobs < 1) throw UsageError("--jobs must be positive");
    const std::uint64_t seed = o.seed.value_or(default_seed());
    std::vector<std::vector<SuiteLine>> results(o.random);
    std::atomic<int> next{0};
    const auto worker = [&] {
      for (int i = next++; i < o.random; i = next++) {
        const GeneratedInstance inst = random_cocomp_instance(o.n, o.density, seed + i);
        results[i] = run_oracle_suite(inst.graph, inst.witness);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < o.jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    bool all = true;
    for (int i = 0; i < o.random; ++i) {
      io.out << "# instance " << i << " seed " << (seed + i) << '\n';
      all = print_suite(results[i], io.out) && all;
    }
    return all ? kExitOk : kExitFalse;
  }
  if (o.order.empty()) throw UsageError("verify needs --order (or --random COUNT)");
  const Graph g = read_graph(o.graph, io);
  return print_suite(run_oracle_suite(g, read_ordering(o.order, g)), io.out) ? kExitOk : kExitFalse;
}

int do_bench(const Options& o, Io& io) {
  if (o.min_n < 1 || o.max_n < o.min_n || o.points < 1) throw UsageError("bad size range");
  const std::uint64_t seed = o.seed.value_or(default_seed());
  io.out << "n,m,millis\n";
  for (int i = 0; i < o.points; ++i) {
    const double t = o.points == 1 ? 0.0 : static_cast<double>(i) / (o.points - 1);
    const int n = static_cast<int>(std::lround(o.min_n * std::pow(double(o.max_n) / o.min_n, t)));
    const GeneratedInstance inst = random_permutation_instance(n, o.avg_degree, seed + i);
    BenchRow row;
    if (o.trust) {
      row = time_pipeline(inst, o.repeats);
    } else {
      const auto start = std::chrono::steady_clock::now();
      const CliqueChain chain = maximal_interval_subgraph(inst.graph, inst.witness, Verify::kCheck);
      const auto stop = std::chrono::steady_clock::now();
      row = {inst.graph.n(), inst.graph.m(),
             std::chrono::duration<double, std::milli>(stop - start).count()};
    }
    io.out << row.n << ',' << row.m << ',' << row.millis << '\n';
  }
  return kExitOk;
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("COCOLAT_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  return (end != nullptr && *end == '\0') ? value : fallback;
}

BenchRow time_pipeline(const GeneratedInstance& instance, int repeats) {
  const Graph& g = instance.graph;
  BenchRow row{g.n(), g.m(), 0};
  double best = -1;
  std::int64_t sink = 0;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = std::chrono::steady_clock::now();
    const CliqueChain chain = maximal_interval_subgraph(g, instance.witness, Verify::kTrust);
    const auto stop = std::chrono::steady_clock::now();
    sink += chain.edge_count;
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (best < 0 || ms < best) best = ms;
  }
  row.millis = best;
  if (sink < 0) row.millis = -1;  // Keeps the chain observable.
  return row;
}

std::vector<SuiteLine> run_oracle_suite(const Graph& g, const VertexOrdering& tau) {
  std::vector<SuiteLine> lines;
  const OrderingCheck tau_check = is_cocomp_ordering(g, tau);
  lines.push_back(line(tau_check.ok, "cocomp-ordering",
                       tau_check ? "" : umbrella_text(g, *tau_check.witness)));
  if (!tau_check) return lines;

  const VertexOrdering sigma = local_mns_plus(g, tau);
  const OrderingCheck sigma_check = is_cocomp_ordering(g, sigma);
  lines.push_back(line(sigma_check.ok, "localmns+-cocomp",
                       sigma_check ? "" : umbrella_text(g, *sigma_check.witness)));
  const FlipCheck flip = flipping_check(g, sigma, tau);
  lines.push_back(line(flip.ok, "flipping",
                       flip.witness ? g.label(flip.witness->u) + "-" + g.label(flip.witness->v) : ""));
  lines.push_back(line(local_mns_audit(g, sigma), "localmns-audit"));
  if (!sigma_check) return lines;

  const CliqueChain chain = chainclique(g, sigma);
  const Graph gc = chain_subgraph(g, chain);
  lines.push_back(line(is_interval_ordering(gc, sigma).ok, "interval-ordering-of-chain"));
  lines.push_back(line(is_interval_graph(gc), gc));
  lines.push_back(line(is_chordal(gc), gc));
  const ImplicitPoset p(g, sigma, Verify::kTrust);
  lines.push_back(line(verify_maximal_chain(p, chain), g));
  for (const SubgraphKind kind : {SubgraphKind::kInterval, SubgraphKind::kChordal}) {
    const char* name = kind == SubgraphKind::kInterval ? "maximal-interval-subgraph"
                                                       : "maximal-chordal-subgraph";
    try {
      lines.push_back(line(verify_maximal_subgraph_exhaustive(g, chain, kind), g));
    } catch (const CapExceededError&) {
      lines.push_back(skip(name, "more than 20 missing edges"));
    }
  }

  const std::vector<Vertex> fast = simplicial_vertices_from_cocomp(g, tau, Verify::kTrust);
  const std::vector<Vertex> slow = brute_force_simplicial(g);
  lines.push_back(line(fast == slow, "simplicial"));

  try {
    const MALattice lattice = build_lattice(p, {512, 512});
    const MeetJoinTables tables = glb_lub_table_oracle(lattice);
    bool tables_ok = true;
    for (int i = 0; i < lattice.size() && tables_ok; ++i) {
      for (int j = 0; j < lattice.size() && tables_ok; ++j) {
        tables_ok = tables.meet_of(i, j) == lattice.meet(i, j) &&
                    tables.join_of(i, j) == lattice.join(i, j);
      }
    }
    lines.push_back(line(tables_ok, "meet-join-tables"));
    const LatticeConditionsReport cond = check_lattice_conditions(g, lattice);
    lines.push_back(line(cond.all(), "lattice-conditions"));
    bool fully_in_chain = true;
    for (int i : fully_comparable_cliques(lattice)) {
      const auto members = lattice.element(i).members();
      const std::vector<Vertex> c(members.begin(), members.end());
      fully_in_chain = fully_in_chain &&
                       std::find(chain.cliques.begin(), chain.cliques.end(), c) != chain.cliques.end();
    }
    lines.push_back(line(fully_in_chain, "fully-comparable-in-chain"));
  } catch (const CapExceededError&) {
    lines.push_back(skip("lattice", "more than 512 maximal cliques"));
  }
  return lines;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Cocomparability orderings, clique chains and maximal antichain lattices.", "cocolat"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Graph file (edge list or DIMACS); '-' or absent reads stdin");
  };
  const auto add_order = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--order", o.order, "Vertex ordering file");
    if (required) opt->required();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed (default: COCOLAT_SEED or 1)");
  };
  const auto add_chain_outputs = [&](CLI::App* sub) {
    sub->add_option("--dot", o.dot, "Write G_C as DOT, discarded edges dashed");
    sub->add_option("--index", o.index, "Write the first/last/forward/backward table as TSV");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph with a cocomp witness ordering");
  gen->add_option("--n", o.n, "Vertex count (chain count for two-chains)");
  gen->add_option("--density", o.density, "Arc probability (cocomp) or edge probability (random)");
  gen->add_option("--avg-degree", o.avg_degree, "Target average degree (permutation)");
  gen->add_option("--mean-length", o.mean_length, "Mean interval length (interval)");
  gen->add_option("--kind", o.kind, "cocomp | interval | permutation | two-chains | random");
  gen->add_option("--emit", o.out, "Graph output file (default stdout)");
  gen->add_option("--emit-order", o.emit_order, "Witness ordering output file");
  add_seed(gen);

  auto* check = app.add_subcommand("check-cocomp", "Check an ordering, or search for one");
  add_graph(check);
  add_order(check, false);
  check->add_flag("--interval", o.interval, "Check for an interval ordering instead");

  auto* search = app.add_subcommand("search", "Run a graph search");
  add_graph(search);
  search->add_option("--name", o.name, "lbfs | lbfs+ | ldfs | ldfs+ | mcs | localmns | localmns+")
      ->required()
      ->check(CLI::IsMember(search_names()));
  search->add_option("--ref", o.ref, "Reference ordering for '+' searches");
  add_out(search);

  auto* cc = app.add_subcommand("chainclique", "Greedy clique chain along an ordering");
  add_graph(cc);
  add_order(cc, true);
  add_out(cc);
  add_chain_outputs(cc);

  CLI::App* max_sub[2];
  const char* max_names[2] = {"max-interval", "max-chordal"};
  for (int i = 0; i < 2; ++i) {
    max_sub[i] = app.add_subcommand(max_names[i], i == 0
                                                      ? "Maximal interval subgraph from a cocomp ordering"
                                                      : "Maximal chordal subgraph from a cocomp ordering");
    add_graph(max_sub[i]);
    add_order(max_sub[i], true);
    add_out(max_sub[i]);
    add_chain_outputs(max_sub[i]);
    max_sub[i]->add_flag("--trust", o.trust, "Skip the umbrella check");
  }

  auto* simp = app.add_subcommand("simplicial", "Simplicial vertices from a cocomp ordering");
  add_graph(simp);
  add_order(simp, true);
  add_out(simp);
  simp->add_flag("--trust", o.trust, "Skip precondition checks");
  simp->add_flag("--mns", o.mns, "The ordering is already an MNS cocomp ordering");

  auto* lat = app.add_subcommand("lattice", "Maximal antichain lattice of P_sigma");
  add_graph(lat);
  add_order(lat, true);
  add_out(lat);
  lat->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
  lat->add_option("--cap", o.cap, "Largest lattice to tabulate");
  lat->add_flag("--conditions", o.conditions, "Report the three clique-lattice conditions");
  lat->add_flag("--trust", o.trust, "Skip the umbrella check");

  auto* ver = app.add_subcommand("verify", "Run the oracle suite, TAP output");
  add_graph(ver);
  add_order(ver, false);
  ver->add_flag("--all", o.all, "Run every applicable oracle (the default)");
  ver->add_option("--random", o.random, "Verify COUNT generated instances instead");
  ver->add_option("--n", o.n, "Vertex count for --random");
  ver->add_option("--density", o.density, "Arc probability for --random");
  ver->add_option("--jobs", o.jobs, "Worker threads for --random");
  add_seed(ver);

  auto* bench = app.add_subcommand("bench", "Time local_mns_plus + chainclique, CSV n,m,millis");
  bench->add_option("--min-n", o.min_n, "Smallest vertex count");
  bench->add_option("--max-n", o.max_n, "Largest vertex count");
  bench->add_option("--points", o.points, "Sizes, geometrically spaced");
  bench->add_option("--avg-degree", o.avg_degree, "Target average degree");
  bench->add_option("--repeats", o.repeats, "Timed runs per size; the best is reported");
  bench->add_flag("--trust", o.trust, "Skip precondition checks (as the timing claim assumes)");
  add_seed(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Io io{out, err, in};
  try {
    if (gen->parsed()) return do_gen(o, io);
    if (check->parsed()) return do_check_cocomp(o, io);
    if (search->parsed()) return do_search(o, io);
    if (cc->parsed()) return do_chainclique(o, io);
    if (max_sub[0]->parsed()) return do_max_subgraph(o, io, false);
    if (max_sub[1]->parsed()) return do_max_subgraph(o, io, true);
    if (simp->parsed()) return do_simplicial(o, io);
    if (lat->parsed()) return do_lattice(o, io);
    if (ver->parsed()) return do_verify(o, io);
    if (bench->parsed()) return do_bench(o, io);
  } catch (const NotCocompError& e) {
    out << "not ok cocomp-ordering " << e.what() << '\n';
    return kExitFalse;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitFalse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace cocolat::cli
