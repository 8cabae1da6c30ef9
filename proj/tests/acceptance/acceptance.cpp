// One PASS/FAIL line per acceptance criterion. A criterion passes only if
// every check holds and it finishes inside its time limit.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "dcycles/bounds.hpp"
#include "dcycles/certificate.hpp"
#include "dcycles/cycle_basic.hpp"
#include "dcycles/dicycles.hpp"
#include "dcycles/error.hpp"
#include "dcycles/extremal.hpp"
#include "dcycles/packing.hpp"
#include "dcycles/partition.hpp"

using namespace dcycles;

namespace {

// Sweep result pinned by the regression test; see the bounds unit suite.
constexpr int kSweepSmallestK = 28123;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::vector<Vertex> verts(const Cycle& c) { return {c.vertices().begin(), c.vertices().end()}; }

brute::Cycles lists(const CyclePacking& p) {
  brute::Cycles out;
  for (const auto& c : p.cycles) out.push_back(verts(c));
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool proved_absent(const OracleResult& r) { return !r.found && r.exhaustive; }

template <class G, class F>
bool found_with(const G& g, F&& finder, std::vector<int> lengths) {
  try {
    const auto p = finder();
    return brute::is_distinct_packing(g, lists(p)) && sorted(p.lengths()) == lengths;
  } catch (const Error&) {
    return false;
  }
}

template <class G>
bool family_ok(const G& g, const CycleFamily& f, int k) {
  if (f.cycles.size() != static_cast<std::size_t>(k)) return false;
  std::set<std::size_t> lengths;
  for (const auto& c : f.cycles) {
    if (!brute::is_cycle_of(g, verts(c)) || !c.contains(f.hub)) return false;
    lengths.insert(c.length());
  }
  return lengths.size() == f.cycles.size();
}

bool partition_ok(const Graph& g, const VertexPartition& p, int s, int t) {
  if (p.classes.size() != 2) return false;
  std::vector<int> side(g.order(), -1);
  for (int i = 0; i < 2; ++i) {
    if (p.classes[i].empty()) return false;
    for (Vertex v : p.classes[i]) {
      if (side[v] != -1) return false;
      side[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (side[v] < 0) return false;
    if (brute::induced_degree(g, v, side, side[v]) < (side[v] == 0 ? s : t)) return false;
  }
  return true;
}

Outcome tightness_f() {
  Outcome o;
  o.require(proved_absent(exact_packing_oracle(complete_graph(6), 2, Profile::plain())), "K6 absent");
  const auto k7 = complete_graph(7);
  o.require(found_with(k7, [&] { return find_disjoint_distinct(k7, 2); }, {3, 4}), "K7 found");
  o.require(proved_absent(exact_packing_oracle(complete_graph(11), 3, Profile::plain())), "K11 absent");
  const auto k12 = complete_graph(12);
  o.require(found_with(k12, [&] { return find_disjoint_distinct(k12, 3); }, {3, 4, 5}), "K12 found");
  return o;
}

Outcome tightness_g() {
  Outcome o;
  o.require(proved_absent(exact_packing_oracle(complete_bipartite_graph(4, 4), 2, Profile::plain())),
            "K(4,4) absent");
  const auto k55 = complete_bipartite_graph(5, 5);
  o.require(found_with(k55, [&] { return find_disjoint_distinct_trianglefree(k55, 2); }, {4, 6}),
            "K(5,5) found");
  return o;
}

Outcome tightness_h() {
  Outcome o;
  o.require(proved_absent(exact_packing_oracle(complete_graph(9), 2, Profile::even())), "K9 absent");
  const auto k10 = complete_graph(10);
  o.require(found_with(k10, [&] { return find_disjoint_even_distinct(k10, 2); }, {4, 6}), "K10 found");
  return o;
}

Outcome heawood() {
  Outcome o;
  const auto r = exact_packing_oracle(heawood_graph(), 2, Profile::plain());
  o.require(!r.found, "no packing");
  o.require(r.exhaustive, "exhaustive flag");
  o.note << "explored " << r.explored << " nodes";
  return o;
}

Outcome cubic() {
  Outcome o;
  int wins = 0;
  for (std::uint64_t seed = 0, made = 0; made < 50; ++seed) {
    const int n = 16 + 2 * static_cast<int>(made % 5);
    const auto g = random_cubic_graph(n, seed);
    if (!is_connected(g)) continue;
    ++made;
    try {
      const auto p = find_two_distinct(g);
      const bool ok = p.cycles.size() == 2 && brute::is_distinct_packing(g, lists(p));
      o.require(ok, "valid pair on n=" + std::to_string(n));
      wins += ok;
    } catch (const Error& e) {
      o.require(false, std::string("n=") + std::to_string(n) + ": " + e.what());
    }
  }
  o.note << wins << "/50";
  return o;
}

Outcome petersen() {
  Outcome o;
  const auto g = petersen_graph();
  o.require(proved_absent(exact_packing_oracle(g, 2, Profile::plain())), "oracle absent");
  // independent: enumerate every cycle and search pairs
  o.require(!brute::has_packing(brute::all_cycles(g), 2), "enumeration absent");
  return o;
}

Outcome partitions() {
  Outcome o;
  std::mt19937_64 rng(7001);
  int exhausted = 0, large = 0;
  auto attempt = [&](const Graph& g, int s, int t, PartitionMode mode, std::uint64_t seed) {
    const bool above = g.order() > PartitionOptions{}.exhaustive_threshold;
    large += above;
    PartitionOptions opt;
    opt.seed = seed;
    try {
      o.require(partition_ok(g, degree_partition(g, s, t, mode, opt), s, t), "partition valid");
    } catch (const Error& e) {
      if (above && e.kind() == ErrorKind::SearchExhausted) {
        ++exhausted;
        std::fprintf(stderr, "criterion 7: SearchExhausted on n=%d s=%d t=%d\n", g.order(), s, t);
      } else {
        o.require(false, e.what());
      }
    }
  };
  for (int i = 0; i < 200; ++i) {
    const int s = 1 + static_cast<int>(rng() % 4);
    const int t = 1 + static_cast<int>(rng() % 4);
    const int n = std::min(60, s + t + 2 + static_cast<int>(rng() % 50));
    attempt(brute::with_min_degree(n, s + t + 1, 0.05, rng), s, t, PartitionMode::Stiebitz, i);
  }
  for (int i = 0; i < 100; ++i) {
    const int s = 1 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 3);
    const int a = s + t + static_cast<int>(rng() % 20);
    const int b = s + t + static_cast<int>(rng() % 20);
    std::vector<std::set<Vertex>> adj(a + b);
    for (Vertex u = 0; u < a + b; ++u) {
      while (static_cast<int>(adj[u].size()) < s + t) {
        const Vertex v = u < a ? a + static_cast<Vertex>(rng() % b) : static_cast<Vertex>(rng() % a);
        adj[u].insert(v);
        adj[v].insert(u);
      }
    }
    std::vector<Edge> es;
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v : adj[u]) es.push_back({u, v});
    attempt(Graph::from_edges(a + b, es), s, t, PartitionMode::Kaneko, 1000 + i);
  }
  o.require(exhausted * 50 <= std::max(large, 1), "at most 2% SearchExhausted");
  o.note << exhausted << " exhausted of " << large << " above threshold";
  return o;
}

Outcome maximal_paths() {
  Outcome o;
  std::mt19937_64 rng(7002);
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + i % 6;
    const int n = k + 2 + static_cast<int>(rng() % 40);
    const auto g = brute::with_min_degree(n, k + 1, 0.08, rng);
    o.require(family_ok(g, maximal_path_cycles(g, k), k), "undirected family");
    const auto d = brute::with_min_out_degree(n, k, rng);
    o.require(family_ok(d, dipath_distinct_cycles(d, k), k), "directed family");
  }
  return o;
}

Outcome tournaments() {
  Outcome o;
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const auto t = brute::tournament_from_bits(n, bits);
      ++checked;
      if (!brute::strongly_connected(t)) {
        bool rejected = false;
        try {
          camion_hamiltonian(t);
        } catch (const Error& e) {
          rejected = e.kind() == ErrorKind::NotStrong;
        }
        o.require(rejected, "non-strong rejected");
        continue;
      }
      const auto c = camion_hamiltonian(t);
      o.require(static_cast<int>(c.length()) == n && brute::is_cycle_of(t, verts(c)), "hamiltonian");
    }
  }
  std::mt19937_64 rng(7003);
  for (int i = 0; i < 500; ++i) {
    const auto t = random_tournament(3 + static_cast<int>(rng() % 13), rng());
    const int delta = t.min_out_degree();
    if (delta == 0) continue;
    const auto c = tournament_long_cycle(t);
    o.require(static_cast<int>(c.length()) >= 2 * delta + 1 && brute::is_cycle_of(t, verts(c)), "long cycle");
  }
  for (int i = 0; i < 20; ++i) {
    const auto t = i == 0 ? regular_tournament(11) : brute::random_regular_tournament(11, rng);
    const auto p = tournament_disjoint_distinct(t, 2);
    o.require(p.cycles.size() == 2 && brute::is_distinct_packing(t, lists(p)), "2-packing");
  }
  o.note << checked << " labeled tournaments";
  return o;
}

Outcome probabilistic() {
  Outcome o;
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const AnyGraph any = random_regular_digraph(12, 60, 9000 + seed);
    const auto& d = std::get<Digraph>(any);
    ProbabilisticOptions opt;
    opt.seed = seed;
    try {
      const auto r = regular_partition_finder(d, 2, opt);
      auto cert = packing_certificate(any, r.packing, 2);
      cert.classes = r.classes;
      cert.demands = r.demands;
      cert.degree_kind = "induced-out";
      cert.allow_uncovered = true;
      const bool ok = certificate_violations(cert, any).empty();
      o.require(ok, "certificate verifies");
      wins += ok;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RetriesExhausted) o.require(false, e.what());
    }
  }
  o.require(wins >= 19, "at least 19/20 regular runs");
  int uniform = 0;
  for (int n : {10, 15, 20}) {
    const AnyGraph any = bidirected_complete(n);
    try {
      const auto r = uniform_partition_finder(std::get<Digraph>(any), 2);
      auto cert = packing_certificate(any, r.packing, 2);
      cert.classes = r.classes;
      cert.demands = r.demands;
      cert.degree_kind = "induced-out";
      uniform += certificate_violations(cert, any).empty();
    } catch (const Error&) {
    }
  }
  o.require(uniform == 3, "uniform 3/3");
  o.note << "regular " << wins << "/20, uniform " << uniform << "/3";
  return o;
}

Outcome bounds() {
  Outcome o;
  const auto r = probabilistic_bounds_report(ProbabilisticBudget{});
  const double threshold = 2.0 * (1 + 7 * std::cbrt(std::log(2.0) / 2));
  const double c0 = std::pow(24 * std::log(2.0), 2);
  o.require(std::fabs(r.threshold - 11.84) <= 0.01 && std::fabs(threshold - 11.84) <= 0.01, "threshold");
  o.require(std::fabs(r.c0 - 276.8) <= 0.1 && std::fabs(c0 - 276.8) <= 0.1, "c0");
  const auto k = smallest_k_all_regular_verdicts(40000);
  o.require(k == kSweepSmallestK, "sweep");
  o.note << "threshold " << r.threshold << ", c0 " << r.c0 << ", sweep " << (k ? *k : -1);
  return o;
}

Outcome structure() {
  Outcome o;
  std::mt19937_64 rng(7004);
  int enumerated = 0;
  for (bool c4 : {false, true}) {
    for (int i = 0; i < 100; ++i) {
      const auto g = brute::block_graph(1 + i % 8, c4, rng);
      const auto s = uniform_cycle_structure(g);
      const double bound = g.order() / (c4 ? 5.0 : 3.0) + 2;
      o.require(s.kind == (c4 ? StructureKind::AllC4 : StructureKind::AllTriangles), "kind");
      o.require(s.n2 == g.count_of_degree(2) && s.n2 >= bound, "degree-2 count");
      if (g.order() <= 12) {
        ++enumerated;
        const auto lengths = brute::cycle_lengths(g);
        o.require(lengths == std::set<int>{c4 ? 4 : 3}, "enumeration agrees");
      }
    }
  }
  // and the negative side on arbitrary small graphs
  for (int i = 0; i < 200; ++i) {
    const auto g = brute::random_graph(4 + i % 9, 0.3, rng);
    const auto lengths = brute::cycle_lengths(g);
    const auto s = uniform_cycle_structure(g);
    o.require((s.kind == StructureKind::AllTriangles) == (lengths == std::set<int>{3}), "triangles");
    o.require((s.kind == StructureKind::AllC4) == (lengths == std::set<int>{4}), "C4");
    ++enumerated;
  }
  o.note << enumerated << " enumerated";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto graphs = brute::load_corpus(DCYCLES_TEST_DATA "/connected_graphs_n7.txt");
  const auto corpus = graphs.size();
  std::mt19937_64 rng(7005);
  for (int i = 0; i < 200; ++i) graphs.push_back(brute::random_graph(8 + i % 2, 0.3 + 0.05 * (i % 6), rng));
  auto found = [](auto&& finder) {
    try {
      finder();
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      return false;
    }
  };
  int disagreements = 0;
  for (const auto& g : graphs) {
    const auto cycles = brute::all_cycles(g);
    for (int k = 1; k <= 3; ++k) {
      const bool truth = brute::has_packing(cycles, k);
      const bool oracle = exact_packing_oracle(g, k, Profile::plain()).found;
      const bool finder = found([&] { return find_disjoint_distinct(g, k); });
      const bool even_truth = brute::has_packing(cycles, k, 'e');
      const bool even_oracle = exact_packing_oracle(g, k, Profile::even()).found;
      const bool even_finder = found([&] { return find_disjoint_even_distinct(g, k); });
      disagreements += oracle != finder || oracle != truth;
      disagreements += even_oracle != even_finder || even_oracle != even_truth;
      if (is_triangle_free(g)) {
        const bool tf = found([&] { return find_disjoint_distinct_trianglefree(g, k); });
        disagreements += tf != truth;
      }
    }
  }
  o.require(disagreements == 0, "no disagreements");
  o.note << graphs.size() << " graphs (" << corpus << " corpus), " << disagreements << " disagreements";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "f(k) tightness", 60, tightness_f},
      {2, "g(k) tightness", 10, tightness_g},
      {3, "h(k) tightness", 30, tightness_h},
      {4, "heawood sharpness", 10, heawood},
      {5, "cubic pairs", 60, cubic},
      {6, "petersen negative", 5, petersen},
      {7, "partition suite", 300, partitions},
      {8, "maximal-path extractors", 60, maximal_paths},
      {9, "tournament suite", 300, tournaments},
      {10, "probabilistic finders", 300, probabilistic},
      {11, "bounds report", 5, bounds},
      {12, "structure classification", 60, structure},
      {13, "oracle equivalence", 300, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "unexpected error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s criterion %d (%s): %.2fs / %.0fs%s; %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED", o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
