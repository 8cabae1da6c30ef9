#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "dcycles/cycle_basic.hpp"
#include "dcycles/extremal.hpp"
#include "expect.hpp"

using namespace dcycles;

namespace {

std::vector<Vertex> verts(const Cycle& c) { return {c.vertices().begin(), c.vertices().end()}; }

}  // namespace

TEST_SUITE("cycle-basic") {

TEST_CASE("maximal path cannot be extended at its end") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = brute::random_graph(2 + i % 15, 0.3, rng);
    const auto path = maximal_path(g, 0);
    std::set<Vertex> on(path.begin(), path.end());
    CHECK(on.size() == path.size());
    for (std::size_t j = 0; j + 1 < path.size(); ++j) CHECK(g.adjacent(path[j], path[j + 1]));
    for (Vertex w : g.neighbors(path.back())) CHECK(on.count(w));
  }
}

TEST_CASE("maximal path cycles have distinct lengths through the hub") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int k = 1 + i % 5;
    const int n = k + 2 + static_cast<int>(rng() % 20);
    const auto g = brute::with_min_degree(n, k + 1, 0.1, rng);
    const auto fam = maximal_path_cycles(g, k);
    REQUIRE(fam.cycles.size() == static_cast<std::size_t>(k));
    std::set<std::size_t> lengths;
    for (const auto& c : fam.cycles) {
      CHECK(brute::is_cycle_of(g, verts(c)));
      CHECK(c.contains(fam.hub));
      lengths.insert(c.length());
    }
    CHECK(lengths.size() == static_cast<std::size_t>(k));
  }
  CHECK(kind_of([] { maximal_path_cycles(complete_graph(4), 3); }) == ErrorKind::DegreeTooLow);
  CHECK(kind_of([] { maximal_path_cycles(complete_graph(4), 0); }) == ErrorKind::BadParameters);
}

TEST_CASE("max cut gives every vertex k cross neighbors") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + i % 4;
    const auto g = brute::with_min_degree(2 * k + static_cast<int>(rng() % 20), 2 * k - 1, 0.15, rng);
    const auto cut = maxcut_bipartition(g, k);
    const auto cls = cut.class_of(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(cls[v] >= 0);
      CHECK(g.degree(v) - brute::induced_degree(g, v, cls, cls[v]) >= k);
    }
    const auto cross = cross_subgraph(g, cut);
    CHECK(bipartition(cross).has_value());
  }
  CHECK(kind_of([] { maxcut_bipartition(complete_graph(3), 2); }) == ErrorKind::DegreeTooLow);
}

TEST_CASE("even distinct cycles") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const int k = 1 + i % 4;
    const auto g = brute::with_min_degree(2 * k + 3 + static_cast<int>(rng() % 20), 2 * k + 1, 0.1, rng);
    const auto fam = even_distinct_cycles(g, k);
    std::set<std::size_t> lengths;
    for (const auto& c : fam.cycles) {
      CHECK(c.length() % 2 == 0);
      CHECK(brute::is_cycle_of(g, verts(c)));
      lengths.insert(c.length());
    }
    CHECK(lengths.size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("residue cycles agree with enumeration") {
  const auto corpus = brute::load_corpus(DCYCLES_TEST_DATA "/connected_graphs_n7.txt");
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    const auto& g = corpus[i];
    const auto lengths = brute::cycle_lengths(g);
    for (int r = 2; r <= 4; ++r) {
      for (int c = 0; c < r; ++c) {
        bool exists = false;
        for (int l : lengths) exists = exists || l % r == c;
        const auto res = residue_cycle(g, c, r);
        if (!res.cycle) CHECK(res.completed);
        CHECK((res.status == ResidueStatus::Found) == exists);
        if (res.cycle) {
          CHECK(static_cast<int>(res.cycle->length()) % r == c);
          CHECK(brute::is_cycle_of(g, verts(*res.cycle)));
        }
      }
    }
  }
  CHECK(kind_of([] { residue_cycle(complete_graph(4), 3, 3); }) == ErrorKind::BadResidue);
  CHECK(kind_of([] { residue_cycle(complete_graph(4), 0, 1); }) == ErrorKind::BadResidue);
}

TEST_CASE("residue guarantee flag") {
  const auto k5 = complete_graph(5);  // min degree 4 >= 2*2-1
  CHECK(residue_cycle(k5, 0, 2).guaranteed);
  CHECK_FALSE(residue_cycle(k5, 1, 2).guaranteed);  // odd residue, even modulus
  CHECK(residue_cycle(k5, 1, 2).status == ResidueStatus::Found);
  const auto small_budget = residue_cycle(complete_graph(12), 0, 11, 5);
  CHECK(small_budget.status == ResidueStatus::Exhausted);
  CHECK_FALSE(small_budget.completed);
}

TEST_CASE("divisible distinct cycles") {
  CHECK(divisible_degree_bound(2, 3) == 17);
  CHECK(divisible_degree_bound(3, 3) == 17);
  CHECK(divisible_degree_bound(2, 4) == 15);
  const auto g = complete_graph(18);
  const auto cycles = divisible_distinct_cycles(g, 2, 3);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].length() != cycles[1].length());
  for (const auto& c : cycles) {
    CHECK(c.length() % 3 == 0);
    CHECK(brute::is_cycle_of(g, verts(c)));
  }
  CHECK(kind_of([] { divisible_distinct_cycles(complete_graph(13), 2, 3); }) == ErrorKind::DegreeTooLow);
}

}  // TEST_SUITE
