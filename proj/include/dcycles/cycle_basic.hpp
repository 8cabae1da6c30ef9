#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dcycles/graph.hpp"
#include "dcycles/partition.hpp"

namespace dcycles {

/// Cycles of pairwise distinct lengths sharing the vertex `hub` (the end of
/// the maximal path they were read from). Not vertex-disjoint.
struct CycleFamily {
  std::vector<Cycle> cycles;  // decreasing length
  Vertex hub = -1;
};

/// A path that cannot be extended at its last vertex: every neighbor of
/// path.back() lies on the path. Grown greedily from `start` by always taking
/// the smallest unused neighbor.
std::vector<Vertex> maximal_path(const Graph& g, Vertex start = 0);
std::vector<Vertex> maximal_path(const Digraph& d, Vertex start = 0);

/// k cycles of distinct lengths through the end of a maximal path. Requires
/// min degree >= k+1 (DegreeTooLow otherwise). The k longest candidates are
/// returned.
CycleFamily maximal_path_cycles(const Graph& g, int k);

/// Two-sided cut in which every vertex has at least k neighbors on the other
/// side (kind == DegreeKind::Cross). Requires min degree >= 2k-1. Found by
/// flipping, lowest id first, any vertex with more same-side than cross
/// neighbors; every flip strictly increases the cut.
VertexPartition maxcut_bipartition(const Graph& g, int k);

/// The bipartite subgraph (S,T)_G of a two-class partition.
Graph cross_subgraph(const Graph& g, const VertexPartition& cut);

/// k even cycles of distinct lengths: max cut with cross degree k+1, then
/// maximal-path cycles in the bipartite cross subgraph. Requires min degree
/// >= 2k+1.
CycleFamily even_distinct_cycles(const Graph& g, int k);

enum class ResidueStatus {
  Found,
  /// Budget hit, or the search completed empty where no cycle is promised.
  Exhausted,
  /// The search completed empty although min degree >= 2r-1 promises a
  /// cycle of this residue. Should never be observed.
  CompletedEmpty,
};

struct ResidueSearch {
  ResidueStatus status = ResidueStatus::Exhausted;
  std::optional<Cycle> cycle;
  bool completed = false;   // the enumeration finished without truncation
  bool guaranteed = false;  // min degree >= 2r-1 and (r odd or c even)
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultResidueBudget = 10'000'000;

/// Depth-first search for a cycle whose length is congruent to c modulo r.
/// Cycles are rooted at their smallest vertex, roots tried in increasing
/// order. BadResidue unless r >= 2 and 0 <= c < r.
ResidueSearch residue_cycle(const Graph& g, int c, int r,
                            std::uint64_t budget = kDefaultResidueBudget);

/// Minimum degree that promises k distinct lengths divisible by r:
/// 2(k+1)r-1 when k is even and r odd, 2kr-1 otherwise.
int divisible_degree_bound(int k, int r);

/// k cycles of distinct lengths, each divisible by r. Uses residue searches
/// modulo kr (or (k+1)r when k is even and r odd). Throws DegreeTooLow, or
/// SearchExhausted when a residue search does not produce a cycle.
std::vector<Cycle> divisible_distinct_cycles(const Graph& g, int k, int r,
                                             std::uint64_t budget = kDefaultResidueBudget);

}  // namespace dcycles
