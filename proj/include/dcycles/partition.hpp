#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dcycles/graph.hpp"

namespace dcycles {

enum class DegreeKind {
  Induced,  // every vertex of class i has >= guarantees[i] neighbors inside class i
  Cross,    // every vertex has >= guarantees[i] neighbors outside its class
};

struct VertexPartition {
  std::vector<std::vector<Vertex>> classes;  // each sorted
  std::vector<int> guarantees;
  DegreeKind kind = DegreeKind::Induced;

  std::size_t class_count() const { return classes.size(); }
  /// class index per vertex; -1 for vertices outside every class.
  std::vector<int> class_of(int n) const;
};

/// Recomputes every degree from scratch. Checks disjointness, coverage of all
/// n vertices (unless allow_uncovered), nonempty classes and the guarantees.
bool verify_partition(const Graph& g, const VertexPartition& p, bool allow_uncovered = false);

enum class PartitionMode { Auto, Stiebitz, Kaneko, Diwan };

std::string_view to_string(PartitionMode mode);

struct PartitionOptions {
  std::uint64_t seed = 0;
  int restarts = 50;
  /// Above this order the exhaustive fallback is skipped.
  int exhaustive_threshold = 24;
};

/// Which mode's degree hypothesis holds for (g, s, t); Auto resolves to
/// the weakest one that holds (Diwan, then Kaneko, then Stiebitz).
/// Throws PreconditionUnmet naming the failed condition.
PartitionMode resolve_mode(const Graph& g, int s, int t, PartitionMode mode);

/// Two nonempty classes inducing minimum degrees >= s and >= t.
///
/// Local search over two-sided partitions on the total degree deficiency
/// (vertices moved out of deficient positions only when the deficiency
/// strictly drops), with seeded restarts. Each local optimum is completed via
/// cores: if the s-core of one side and the t-core of the other are both
/// nonempty, the t-core of G minus the s-core fixes the second class and every
/// remaining vertex keeps enough neighbors on the first side under any of the
/// three degree hypotheses. Restart 0 starts from a small s-dense seed set.
/// Graphs with at most `exhaustive_threshold` vertices fall back to an
/// exhaustive branch-and-bound before SearchExhausted is thrown.
VertexPartition degree_partition(const Graph& g, int s, int t,
                                 PartitionMode mode = PartitionMode::Auto,
                                 const PartitionOptions& options = {});

/// Classes with induced minimum degrees >= demands[i], built by repeatedly
/// splitting off the next class (Stiebitz splits). Requires
/// min degree >= sum(d_i + 1) - 1.
VertexPartition multiway_degree_partition(const Graph& g, const std::vector<int>& demands,
                                          const PartitionOptions& options = {});

}  // namespace dcycles
