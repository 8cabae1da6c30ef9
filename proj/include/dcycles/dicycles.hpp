#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcycles/cycle_basic.hpp"
#include "dcycles/graph.hpp"
#include "dcycles/packing.hpp"

namespace dcycles {

/// Hamiltonian cycle of a strong tournament: start from a 3-cycle, insert
/// vertices having both an in- and an out-neighbor on the cycle, and when
/// every remaining vertex dominates or is dominated by the whole cycle,
/// splice in an arc b -> a from the dominated to the dominating side.
/// NotTournament, TooSmall (n < 3), NotStrong.
Cycle camion_hamiltonian(const Digraph& t);

/// A directed cycle of length >= 2 * min out-degree + 1: Hamiltonian cycle
/// of the last strong component. DegreeTooLow when min out-degree is 0.
Cycle tournament_long_cycle(const Digraph& t);

/// A directed l-cycle on a subset of V(c). Drops one vertex at a time along
/// chords c_i -> c_{i+2}; when no such chord exists, searches V(c) directly.
/// BadLength unless 3 <= l <= |c|; InvalidInput when c is not a cycle of t.
Cycle tournament_cycle_shorten(const Digraph& t, const Cycle& c, int l);

/// ceil((k^2 + 4k - 3) / 2).
int tournament_degree_bound(int k);

/// k disjoint cycles of lengths 3, 4, ..., k+1 and one of length >= k+2.
/// Requires min out-degree >= tournament_degree_bound(k).
CyclePacking tournament_disjoint_distinct(const Digraph& t, int k);

/// k directed cycles of distinct lengths (>= 2) through the end of a maximal
/// directed path, the k longest ones. Requires min out-degree >= k.
CycleFamily dipath_distinct_cycles(const Digraph& d, int k);

/// (k^2/2)(1 + 7 (ln k / k)^(1/3)).
double regular_degree_threshold(int k);

struct ProbabilisticOptions {
  std::uint64_t seed = 0;
  int retries = 1000;
  /// Run the regular finder even below regular_degree_threshold.
  bool force = false;
};

struct ProbabilisticResult {
  CyclePacking packing;
  /// The accepted coloring: classes[j-1] is color j (uncolored vertices are
  /// in no class); demands[j-1] its required induced min out-degree.
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> demands;
  int attempts = 0;
};

/// Colors vertex v with color j with probability (j + q) / s (q and s as in
/// ProbabilisticBudget), leaving it uncolored otherwise, until class j
/// induces min out-degree >= j for every j. NotRegular, BadParameters
/// (k < 2), DegreeTooLow (unless forced), RetriesExhausted.
ProbabilisticResult regular_partition_finder(const Digraph& d, int k,
                                             const ProbabilisticOptions& options = {});

/// Uniform k-colorings until every vertex has >= k out-neighbors of its own
/// color and every color is used. Requires min out-degree >= 2k^2.
ProbabilisticResult uniform_partition_finder(const Digraph& d, int k,
                                             const ProbabilisticOptions& options = {});

}  // namespace dcycles
