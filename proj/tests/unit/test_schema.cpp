#include <doctest.h>

#include <functional>
#include <random>

#include "brute.hpp"
#include "dcycles/extremal.hpp"
#include "dcycles/schema.hpp"
#include "expect.hpp"

using namespace dcycles;

namespace {

// regression constant: apex + a 9-vertex path (girth 6 forces 4 edges
// between consecutive apex neighbors on the path)
constexpr int kHeawoodSchemaMin = 10;

// Smallest |V(P)| + 1 over all paths P and apexes with exactly k+1
// neighbors on P; 0 when none exists.
int brute_min_schema(const Graph& g, int k) {
  const int n = g.order();
  int best = 0;
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  auto score = [&] {
    for (Vertex x = 0; x < n; ++x) {
      if (on[x]) continue;
      int count = 0;
      for (Vertex v : path) count += g.adjacent(x, v);
      if (count == k + 1) {
        const int size = static_cast<int>(path.size()) + 1;
        if (best == 0 || size < best) best = size;
      }
    }
  };
  std::function<void(Vertex)> grow = [&](Vertex v) {
    score();
    for (Vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      grow(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    grow(s);
    on[s] = 0;
  }
  return best;
}

void check_cycles(const Graph& g, const PathVertexSchema& s) {
  const auto cycles = schema_cycles(g, s);
  REQUIRE(cycles.size() == static_cast<std::size_t>(s.k));
  std::set<std::size_t> lengths;
  for (const auto& c : cycles) {
    CHECK(c.contains(s.apex));
    CHECK(brute::is_cycle_of(g, {c.vertices().begin(), c.vertices().end()}));
    lengths.insert(c.length());
  }
  CHECK(lengths.size() == cycles.size());
}

}  // namespace

TEST_SUITE("schema") {

TEST_CASE("find_schema is valid on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    const int k = 1 + i % 4;
    const auto g = brute::with_min_degree(k + 3 + static_cast<int>(rng() % 25), k + 1, 0.1, rng);
    const auto s = find_schema(g, k);
    CHECK(is_valid_schema(g, s));
    check_cycles(g, s);
  }
  CHECK(kind_of([] { find_schema(complete_graph(3), 2); }) == ErrorKind::DegreeTooLow);
}

TEST_CASE("exact optimum matches enumeration") {
  const auto corpus = brute::load_corpus(DCYCLES_TEST_DATA "/connected_graphs_n7.txt");
  int checked = 0;
  for (const auto& g : corpus) {
    for (int k = 1; k <= 3; ++k) {
      if (g.min_degree() < k + 1) continue;
      const auto best = optimize_schema(g, k);
      CHECK(best.exactness == Exactness::Exact);
      CHECK(is_valid_schema(g, best.schema));
      CHECK(best.schema.cardinality() == brute_min_schema(g, k));
      CHECK(best.schema.path.front() < best.schema.path.back());
      const auto rep = schema_external_report(g, best);
      CHECK(rep.consistent);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("best-found schemas on larger graphs are valid and no larger than find_schema") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const int k = 1 + i % 3;
    const auto g = brute::with_min_degree(20 + static_cast<int>(rng() % 20), k + 1, 0.05, rng);
    const auto best = optimize_schema(g, k);
    CHECK(best.exactness == Exactness::BestFound);
    CHECK(is_valid_schema(g, best.schema));
    CHECK(best.schema.cardinality() <= find_schema(g, k).cardinality());
    check_cycles(g, best.schema);
    CHECK(kind_of([&] { schema_external_report(g, best); }) == ErrorKind::NotOptimal);
  }
}

TEST_CASE("heawood schema minimum is pinned") {
  const auto g = heawood_graph();
  const auto best = optimize_schema(g, 2);
  REQUIRE(best.exactness == Exactness::Exact);
  CHECK(best.schema.cardinality() == brute_min_schema(g, 2));
  CHECK(best.schema.cardinality() == kHeawoodSchemaMin);
  CHECK(schema_external_report(g, best).consistent);
}

TEST_CASE("invalid schemas are rejected") {
  const auto g = complete_graph(5);
  PathVertexSchema s{{0, 1, 2}, 1, 2};
  CHECK_FALSE(is_valid_schema(g, s));
  CHECK(kind_of([&] { schema_cycles(g, s); }) == ErrorKind::InvalidSchema);
  PathVertexSchema ok{{0, 1, 2}, 3, 2};
  CHECK(is_valid_schema(g, ok));
  CHECK(ok.cardinality() == 4);
}

}  // TEST_SUITE
