#include <doctest.h>

#include <fstream>
#include <sstream>

#include "brute.hpp"
#include "dcycles/edge_list.hpp"
#include "dcycles/extremal.hpp"
#include "expect.hpp"

using namespace dcycles;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("named graphs") {
  const auto k6 = complete_graph(6);
  CHECK(k6.size() == 15);
  const auto k34 = complete_bipartite_graph(3, 4);
  CHECK(k34.size() == 12);
  CHECK(bipartition(k34).has_value());
  CHECK_FALSE(k34.adjacent(0, 1));
  CHECK(k34.adjacent(0, 3));

  const auto h = heawood_graph();
  CHECK(h.order() == 14);
  CHECK(regular(h, 3));
  CHECK(bipartition(h).has_value());
  CHECK(brute::cycle_lengths(h) == std::set<int>{6, 8, 10, 12, 14});

  const auto p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(regular(p, 3));
  CHECK(brute::cycle_lengths(p) == std::set<int>{5, 6, 8, 9});
}

TEST_CASE("random regular graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int d = 2 + static_cast<int>(seed % 5);
    const int n = 2 * (d + 1 + static_cast<int>(seed % 11));
    const auto g = random_regular_graph(d, n, seed);
    CHECK(g.order() == n);
    CHECK(regular(g, d));
    CHECK(g == random_regular_graph(d, n, seed));
  }
  CHECK(random_cubic_graph(20, 1) != random_cubic_graph(20, 2));
  CHECK(kind_of([] { random_regular_graph(3, 7, 0); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { random_cubic_graph(5, 0); }) == ErrorKind::BadParameters);
}

TEST_CASE("tournaments and digraphs") {
  for (int n = 1; n <= 15; n += 2) {
    const auto t = regular_tournament(n);
    CHECK(t.is_tournament());
    CHECK(t.regular_degree() == (n - 1) / 2);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tournament(12, seed);
    CHECK(t.is_tournament());
    CHECK(t.arcs() == random_tournament(12, seed).arcs());
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int r = 1 + static_cast<int>(seed % 12);
    const auto d = random_regular_digraph(r, 30, seed);
    CHECK(d.regular_degree() == r);
    for (Vertex v = 0; v < d.order(); ++v) CHECK_FALSE(d.has_arc(v, v));
  }
  const auto bc = bidirected_complete(6);
  CHECK(bc.arcs().size() == 30);
  const auto c = directed_cycle(5);
  CHECK(c.regular_degree() == 1);
  CHECK(is_strong(c));
  CHECK(kind_of([] { regular_tournament(4); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { directed_cycle(1); }) == ErrorKind::BadParameters);
}

TEST_CASE("family specs") {
  CHECK(FamilySpec::parse("random_regular:3,10,7").to_string() == "random_regular:3,10,7");
  CHECK(FamilySpec::parse("heawood").args.empty());
  for (const char* bad : {"", "nope:3", "complete", "complete:3,4", "complete:x", "heawood:1",
                          "complete:-1", "complete:99999999999999999999", "complete:2097152"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { generate(FamilySpec::parse(bad)); }) == ErrorKind::BadParameters);
  }
  CHECK(std::holds_alternative<Digraph>(generate(FamilySpec::parse("directed_cycle:4"))));
  CHECK(std::get<Graph>(generate(FamilySpec::parse("complete_bipartite:2,3"))) ==
        complete_bipartite_graph(2, 3));
}

TEST_CASE("golden edge lists") {
  for (const char* spec : {"petersen", "heawood", "regular_tournament:7", "random_cubic:12,3",
                           "random_regular:4,11,5"}) {
    CAPTURE(spec);
    std::string file = spec;
    for (char& ch : file)
      if (ch == ':' || ch == ',') ch = '_';
    const auto want = slurp(std::string(DCYCLES_TEST_DATA "/golden/") + file + ".txt");
    CHECK(to_edge_list(generate(FamilySpec::parse(spec))) == want);
  }
}

TEST_CASE("claims hold for small k") {
  for (int k = 2; k <= 3; ++k) {
    for (auto id : all_claims()) {
      CAPTURE(to_string(id));
      CAPTURE(k);
      ClaimOptions opt;
      opt.k = k;
      const auto r = tightness_check(id, opt);
      CHECK(r.pass);
      CHECK_FALSE(r.transcript.empty());
      for (const auto& line : r.transcript) CHECK(line.rfind("FAIL", 0) != 0);
      CHECK(parse_claim(to_string(id)) == id);
    }
  }
  ClaimOptions bad;
  bad.k = 7;
  CHECK(kind_of([&] { tightness_check(ClaimId::FTight, bad); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { parse_claim("f_tight"); }) == ErrorKind::BadParameters);
}

}  // TEST_SUITE
