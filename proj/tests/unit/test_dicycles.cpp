#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute.hpp"
#include "dcycles/dicycles.hpp"
#include "dcycles/extremal.hpp"
#include "expect.hpp"

using namespace dcycles;

namespace {

std::vector<Vertex> verts(const Cycle& c) { return {c.vertices().begin(), c.vertices().end()}; }

brute::Cycles lists(const CyclePacking& p) {
  brute::Cycles out;
  for (const auto& c : p.cycles) out.push_back(verts(c));
  return out;
}

int induced_out(const Digraph& d, Vertex v, const std::vector<Vertex>& cls) {
  int n = 0;
  for (Vertex w : d.out_neighbors(v)) n += std::count(cls.begin(), cls.end(), w) > 0;
  return n;
}

void check_coloring(const Digraph& d, const ProbabilisticResult& r) {
  REQUIRE(r.classes.size() == r.demands.size());
  std::set<Vertex> seen;
  for (std::size_t j = 0; j < r.classes.size(); ++j) {
    CHECK_FALSE(r.classes[j].empty());
    for (Vertex v : r.classes[j]) {
      CHECK(seen.insert(v).second);
      CHECK(induced_out(d, v, r.classes[j]) >= r.demands[j]);
    }
  }
  CHECK(brute::is_distinct_packing(d, lists(r.packing)));
}

}  // namespace

TEST_SUITE("dicycles") {

TEST_CASE("hamiltonian cycles of every small tournament") {
  for (int n = 3; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const auto t = brute::tournament_from_bits(n, bits);
      if (!brute::strongly_connected(t)) {
        CHECK(kind_of([&] { camion_hamiltonian(t); }) == ErrorKind::NotStrong);
        continue;
      }
      const auto c = camion_hamiltonian(t);
      CHECK(static_cast<int>(c.length()) == n);
      CHECK(brute::is_cycle_of(t, verts(c)));
      for (int l = 3; l <= n; ++l) {
        const auto s = tournament_cycle_shorten(t, c, l);
        CHECK(static_cast<int>(s.length()) == l);
        CHECK(brute::is_cycle_of(t, verts(s)));
        for (Vertex v : s.vertices()) CHECK(c.contains(v));
      }
    }
  }
  CHECK(kind_of([] { camion_hamiltonian(brute::tournament_from_bits(2, 1)); }) == ErrorKind::TooSmall);
  CHECK(kind_of([] { camion_hamiltonian(bidirected_complete(4)); }) == ErrorKind::NotTournament);
}

TEST_CASE("long cycles in random tournaments") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto t = random_tournament(5 + static_cast<int>(seed % 40), seed);
    const int delta = t.min_out_degree();
    if (delta == 0) {
      CHECK(kind_of([&] { tournament_long_cycle(t); }) == ErrorKind::DegreeTooLow);
      continue;
    }
    const auto c = tournament_long_cycle(t);
    CHECK(static_cast<int>(c.length()) >= 2 * delta + 1);
    CHECK(brute::is_cycle_of(t, verts(c)));
  }
}

TEST_CASE("shortening rejects bad lengths and foreign cycles") {
  const auto t = regular_tournament(7);
  const auto c = camion_hamiltonian(t);
  CHECK(kind_of([&] { tournament_cycle_shorten(t, c, 2); }) == ErrorKind::BadLength);
  CHECK(kind_of([&] { tournament_cycle_shorten(t, c, 8); }) == ErrorKind::BadLength);
  const auto reversed = Cycle::directed({0, 6, 5, 4, 3, 2, 1});
  if (!reversed.valid_in(t))
    CHECK(kind_of([&] { tournament_cycle_shorten(t, reversed, 3); }) == ErrorKind::InvalidInput);
}

TEST_CASE("disjoint cycles of distinct lengths in tournaments") {
  CHECK(tournament_degree_bound(1) == 1);
  CHECK(tournament_degree_bound(2) == 5);   // ceil(9/2)
  CHECK(tournament_degree_bound(3) == 9);
  std::mt19937_64 rng(61);
  for (int k = 1; k <= 3; ++k) {
    const int b = tournament_degree_bound(k);
    for (int rep = 0; rep < 4; ++rep) {
      const auto t = rep == 0 ? regular_tournament(2 * b + 1) : brute::random_regular_tournament(2 * b + 1, rng);
      REQUIRE(t.min_out_degree() >= b);
      const auto p = tournament_disjoint_distinct(t, k);
      REQUIRE(p.cycles.size() == static_cast<std::size_t>(k));
      auto l = p.lengths();
      std::sort(l.begin(), l.end());
      for (int i = 0; i + 1 < k; ++i) CHECK(l[i] == i + 3);
      CHECK(l.back() >= k + 2);
      CHECK(brute::is_distinct_packing(t, lists(p)));
    }
  }
  CHECK(kind_of([] { tournament_disjoint_distinct(regular_tournament(9), 2); }) == ErrorKind::DegreeTooLow);
}

TEST_CASE("k longest cycles through the end of a maximal dipath") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 150; ++i) {
    const int k = 1 + i % 5;
    const auto d = brute::with_min_out_degree(k + 1 + static_cast<int>(rng() % 20), k, rng);
    const auto fam = dipath_distinct_cycles(d, k);
    REQUIRE(fam.cycles.size() == static_cast<std::size_t>(k));
    std::set<std::size_t> lengths;
    for (const auto& c : fam.cycles) {
      CHECK(c.length() >= 2);
      CHECK(c.contains(fam.hub));
      CHECK(brute::is_cycle_of(d, verts(c)));
      lengths.insert(c.length());
    }
    CHECK(lengths.size() == fam.cycles.size());
  }
  CHECK(kind_of([] { dipath_distinct_cycles(directed_cycle(5), 2); }) == ErrorKind::DegreeTooLow);
}

TEST_CASE("regular partition finder") {
  CHECK(regular_degree_threshold(2) == doctest::Approx(11.8339).epsilon(1e-4));
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = random_regular_digraph(12, 60, seed);
    ProbabilisticOptions opt;
    opt.seed = seed;
    try {
      const auto r = regular_partition_finder(d, 2, opt);
      check_coloring(d, r);
      CHECK(r.packing.cycles.size() == 2);
      ++ok;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RetriesExhausted);
    }
  }
  CHECK(ok >= 9);
  const auto low = random_regular_digraph(6, 30, 1);
  CHECK(kind_of([&] { regular_partition_finder(low, 2); }) == ErrorKind::DegreeTooLow);
  CHECK(kind_of([] { regular_partition_finder(random_regular_digraph(12, 60, 0), 1); }) ==
        ErrorKind::BadParameters);
  std::mt19937_64 rng(63);
  CHECK(kind_of([&] { regular_partition_finder(brute::with_min_out_degree(30, 12, rng), 2); }) ==
        ErrorKind::NotRegular);
}

TEST_CASE("uniform partition finder on bidirected complete digraphs") {
  for (int n : {10, 15, 20}) {
    const auto d = bidirected_complete(n);
    ProbabilisticOptions opt;
    opt.seed = static_cast<std::uint64_t>(n);
    const auto r = uniform_partition_finder(d, 2, opt);
    check_coloring(d, r);
    CHECK(r.packing.cycles.size() == 2);
  }
  CHECK(kind_of([] { uniform_partition_finder(bidirected_complete(8), 2); }) == ErrorKind::DegreeTooLow);
}

TEST_CASE("finders are deterministic per seed") {
  const auto d = random_regular_digraph(12, 60, 7);
  ProbabilisticOptions opt;
  opt.seed = 5;
  const auto a = regular_partition_finder(d, 2, opt);
  const auto b = regular_partition_finder(d, 2, opt);
  CHECK(a.classes == b.classes);
  CHECK(a.attempts == b.attempts);
}

}  // TEST_SUITE
