#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dcycles {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

struct InducedSubgraph;
struct InducedSubdigraph;

/// Immutable simple undirected graph on vertices 0..n-1 (CSR adjacency,
/// neighbor lists sorted ascending).
class Graph {
public:
  Graph() = default;

  /// Throws InvalidInput on out-of-range endpoints, self-loops or repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  /// 0 for the empty graph.
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  /// N_i(G): the vertices of degree exactly d.
  std::vector<Vertex> vertices_of_degree(int d) const;
  int count_of_degree(int d) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  InducedSubgraph induced(std::span<const Vertex> vertices) const;
  /// G - X.
  InducedSubgraph without(std::span<const Vertex> removed) const;

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Immutable simple digraph: no loops, at most one arc per ordered pair
/// (digons allowed).
class Digraph {
public:
  Digraph() = default;

  static Digraph from_arcs(int n, std::span<const Edge> arcs);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return out_targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }
  int out_degree(Vertex v) const noexcept {
    return static_cast<int>(out_offsets_[v + 1] - out_offsets_[v]);
  }
  int in_degree(Vertex v) const noexcept {
    return static_cast<int>(in_offsets_[v + 1] - in_offsets_[v]);
  }
  bool has_arc(Vertex u, Vertex v) const noexcept;

  int min_out_degree() const noexcept;

  /// Arcs sorted lexicographically.
  std::vector<Edge> arcs() const;

  /// True when every unordered pair carries exactly one arc.
  bool is_tournament() const noexcept;
  /// Returns r when every in- and out-degree equals r.
  std::optional<int> regular_degree() const noexcept;

  InducedSubdigraph induced(std::span<const Vertex> vertices) const;
  InducedSubdigraph without(std::span<const Vertex> removed) const;

  bool operator==(const Digraph&) const = default;

private:
  int n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_targets_;
};

/// A cycle stored in canonical form: rotated so the smallest vertex comes
/// first; undirected cycles are additionally oriented so that the second
/// vertex is smaller than the last one.
class Cycle {
public:
  Cycle() = default;

  /// Canonicalizes; throws InvalidInput on repeated vertices or a length
  /// below 3 (undirected) / 2 (directed). Adjacency is not checked here.
  static Cycle undirected(std::vector<Vertex> vertices);
  static Cycle directed(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  bool is_directed() const noexcept { return directed_; }
  bool contains(Vertex v) const noexcept;

  bool valid_in(const Graph& g) const noexcept;
  bool valid_in(const Digraph& d) const noexcept;

  /// Maps every vertex through `to_parent` and re-canonicalizes.
  Cycle relabeled(std::span<const Vertex> to_parent) const;

  auto operator<=>(const Cycle&) const = default;

private:
  Cycle(std::vector<Vertex> vertices, bool directed);
  std::vector<Vertex> vertices_;
  bool directed_ = false;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
};

struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> to_parent;
};

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // u < v, sorted
};

/// Biconnected components (maximal 2-connected subgraphs and bridges).
/// Isolated vertices belong to no block.
std::vector<Block> blocks(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct StrongComponents {
  /// Components in a topological order of the condensation (every arc
  /// between two components goes from an earlier to a later one).
  std::vector<std::vector<Vertex>> components;
  std::vector<int> component_of;
};

StrongComponents strong_components(const Digraph& d);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_strong(const Digraph& d);
/// Two-coloring when g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace dcycles
