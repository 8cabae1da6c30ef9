#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcycles/edge_list.hpp"
#include "dcycles/graph.hpp"

namespace dcycles {

/// A named graph family with integer parameters, written `name:a,b,...`
/// (`heawood` and `petersen` take none).
struct FamilySpec {
  std::string name;
  std::vector<std::uint64_t> args;

  /// BadParameters on unknown names, wrong arity or malformed numbers.
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
/// Point-line incidence graph of the Fano plane: points 0..6, line i is
/// vertex 7+i and contains points i, i+1, i+3 (mod 7).
Graph heawood_graph();
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();
/// Uniform pairing of d*n points, one pair at a time, avoiding loops and
/// parallel edges; restarts when stuck. GenerationFailed after 1000 restarts.
Graph random_regular_graph(int d, int n, std::uint64_t seed);
Graph random_cubic_graph(int n, std::uint64_t seed);

/// Vertex i beats i+1, ..., i+(n-1)/2 (mod n); n odd.
Digraph regular_tournament(int n);
/// One fair coin per pair.
Digraph random_tournament(int n, std::uint64_t seed);
/// Union of r random permutations; fixed points and repeated arcs are
/// repaired by random transpositions. Every in- and out-degree is r.
Digraph random_regular_digraph(int r, int n, std::uint64_t seed);
/// Both arcs between every pair.
Digraph bidirected_complete(int n);
Digraph directed_cycle(int n);

/// BadParameters on invalid parameters, GenerationFailed when a random
/// generator gives up.
AnyGraph generate(const FamilySpec& spec);

enum class ClaimId { FTight, GTight, HTight, LargeOrderSharp, HeawoodSharp, TournamentLb };

std::string to_string(ClaimId id);
/// Accepts the upper-case names, e.g. "F_TIGHT".
ClaimId parse_claim(const std::string& text);
std::vector<ClaimId> all_claims();

struct ClaimReport {
  ClaimId id = ClaimId::FTight;
  int k = 2;
  bool pass = false;
  std::vector<std::string> transcript;
};

struct ClaimOptions {
  int k = 2;
  /// Order of the LARGEORDER_SHARP instance; default g(k) - 1 + 10.
  std::optional<int> n;
};

/// Generates the claim's instances and compares the oracle / finder
/// verdicts with the expected ones. ResourceBudgetExceeded propagates.
ClaimReport tightness_check(ClaimId id, const ClaimOptions& options = {});

}  // namespace dcycles
