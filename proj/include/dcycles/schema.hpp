#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcycles/graph.hpp"

namespace dcycles {

/// A path P and an apex x off P with exactly k+1 neighbors on P.
struct PathVertexSchema {
  std::vector<Vertex> path;
  Vertex apex = -1;
  int k = 0;

  /// |V(P)| + 1.
  int cardinality() const { return static_cast<int>(path.size()) + 1; }
  bool operator==(const PathVertexSchema&) const = default;
};

bool is_valid_schema(const Graph& g, const PathVertexSchema& s);

/// Maximal path from vertex 0, its end as apex, prefix trimmed until the apex
/// has exactly k+1 neighbors left on the path. DegreeTooLow unless
/// min degree >= k+1.
PathVertexSchema find_schema(const Graph& g, int k);

enum class Exactness { Exact, BestFound };

struct OptimizedSchema {
  PathVertexSchema schema;
  Exactness exactness = Exactness::BestFound;
  std::uint64_t explored = 0;
};

inline constexpr int kDefaultSchemaExactThreshold = 16;

/// Minimum-cardinality schema. Exact when n <= exact_threshold; ties go to
/// the smallest apex, then the lexicographically smallest path with
/// path.front() < path.back(). Larger graphs get BestFound: find_schema
/// followed by window trimming, apex swaps and reroutings until no move
/// shrinks the schema.
OptimizedSchema optimize_schema(const Graph& g, int k,
                                int exact_threshold = kDefaultSchemaExactThreshold);

/// k cycles through the apex, one per apex neighbor after the first on the
/// path (all share the first one), in increasing length. InvalidSchema when
/// `s` is not a schema of g.
std::vector<Cycle> schema_cycles(const Graph& g, const PathVertexSchema& s);

struct ExternalReport {
  /// (y, number of neighbors of y in V(S)) for every y outside the schema.
  std::vector<std::pair<Vertex, int>> counts;
  int max_count = 0;
  bool counts_within_bound = true;      // every count <= k+2
  std::vector<Vertex> attaining;        // vertices with count == k+2
  bool attaining_adjacent_to_apex = true;
  bool path_inside_apex_neighborhood = true;
  bool cardinality_is_minimum = true;  // |V(S)| == k+2
  bool consistent = true;
};

/// Neighbor counts of the outside vertices into V(S) and the consequences
/// an optimal schema must satisfy. NotOptimal unless s is Exact.
ExternalReport schema_external_report(const Graph& g, const OptimizedSchema& s);

}  // namespace dcycles
