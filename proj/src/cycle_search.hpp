#pragma once

// Bitmask kernels shared by the exact searches (packing oracle, residue
// cycle search, two-cycle finder). Graphs are limited to 64 vertices.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "dcycles/graph.hpp"

namespace dcycles::detail {

using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask above(int v) { return v >= 63 ? Mask{0} : ~((Mask{1} << (v + 1)) - 1); }

struct MaskGraph {
  int n = 0;
  bool directed = false;
  std::array<Mask, kMaxMaskVertices> out{};
  std::array<Mask, kMaxMaskVertices> in{};

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  int min_cycle_length() const { return directed ? 2 : 3; }

  static MaskGraph from(const Graph& g) {
    MaskGraph m;
    m.n = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) m.out[v] |= bit(w);
      m.in[v] = m.out[v];
    }
    return m;
  }

  static MaskGraph from(const Digraph& d) {
    MaskGraph m;
    m.n = d.order();
    m.directed = true;
    for (Vertex v = 0; v < d.order(); ++v) {
      for (Vertex w : d.out_neighbors(v)) {
        m.out[v] |= bit(w);
        m.in[w] |= bit(v);
      }
    }
    return m;
  }
};

/// Thrown when a search exceeds its node budget.
struct BudgetHit {};

struct NodeCounter {
  std::uint64_t nodes = 0;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();

  void tick() {
    if (++nodes > budget) throw BudgetHit{};
  }
};

/// Restricts `avail` to the vertices that can lie on a cycle inside it:
/// the 2-core for graphs; for digraphs, vertices keeping both an in- and an
/// out-neighbor.
inline Mask cycle_core(const MaskGraph& g, Mask avail) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask rest = avail; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      bool keep;
      if (g.directed) {
        keep = (g.out[v] & avail) != 0 && (g.in[v] & avail) != 0;
      } else {
        keep = popcount(g.out[v] & avail) >= 2;
      }
      if (!keep) {
        avail &= ~bit(v);
        changed = true;
      }
    }
  }
  return avail;
}

/// Cheap necessary conditions for the existence of a cycle of a given
/// length inside a vertex set (component sizes, bipartite side sizes).
class LengthFilter {
public:
  LengthFilter(const MaskGraph& g, Mask avail) : directed_(g.directed) {
    if (directed_) {
      components_.push_back({popcount(avail), popcount(avail), false});
      return;
    }
    Mask left = avail;
    while (left) {
      const int s = lowest(left);
      Mask comp = bit(s);
      Mask side0 = bit(s);
      Mask side1 = 0;
      Mask frontier = bit(s);
      bool bipartite = true;
      int parity = 0;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.out[lowest(f)] & avail;
        Mask& same = parity == 0 ? side0 : side1;
        Mask& other = parity == 0 ? side1 : side0;
        if (next & same) bipartite = false;
        next &= ~comp;
        other |= next;
        comp |= next;
        frontier = next;
        parity ^= 1;
      }
      left &= ~comp;
      const int size = popcount(comp);
      const int longest = bipartite ? 2 * std::min(popcount(side0), popcount(side1)) : size;
      components_.push_back({size, longest, bipartite});
    }
  }

  bool may_contain(int length) const {
    for (const auto& c : components_) {
      if (length > c.longest) continue;
      if (c.bipartite && length % 2 != 0) continue;
      return true;
    }
    return false;
  }

private:
  struct Component {
    int size;
    int longest;
    bool bipartite;
  };
  bool directed_;
  std::vector<Component> components_;
};

/// Enumerates every cycle of exactly `length` vertices inside `allowed`, once
/// each, in increasing lexicographic order of the canonical vertex sequence.
/// `visit(std::span<const Vertex>)` returns true to stop; the function then
/// returns true.
template <typename Visitor>
class CycleWalker {
public:
  CycleWalker(const MaskGraph& g, Mask allowed, int length, NodeCounter& counter,
              Visitor& visit)
      : g_(g), allowed_(allowed), length_(length), counter_(counter), visit_(visit) {}

  bool run() {
    if (length_ < g_.min_cycle_length()) return false;
    for (Mask roots = allowed_; roots; roots &= roots - 1) {
      root_ = lowest(roots);
      higher_ = allowed_ & above(root_);
      if (popcount(higher_) + 1 < length_) break;
      compute_distances();
      path_[0] = root_;
      if (dfs(1, root_, bit(root_))) return true;
    }
    return false;
  }

private:
  static constexpr int kFar = std::numeric_limits<int>::max() / 2;

  // dist_[v]: arcs needed to get from v back to the root inside higher_.
  void compute_distances() {
    dist_.fill(kFar);
    dist_[root_] = 0;
    Mask seen = bit(root_);
    Mask frontier = bit(root_);
    int d = 0;
    while (frontier) {
      ++d;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= g_.in[lowest(f)];
      next &= higher_ & ~seen;
      for (Mask x = next; x; x &= x - 1) dist_[lowest(x)] = d;
      seen |= next;
      frontier = next;
    }
  }

  bool dfs(int depth, int cur, Mask used) {
    counter_.tick();
    if (depth == length_) {
      if (!(g_.out[cur] & bit(root_))) return false;
      return visit_(std::span<const Vertex>(path_.data(), static_cast<std::size_t>(length_)));
    }
    const int budget = length_ - depth;
    for (Mask cand = g_.out[cur] & higher_ & ~used; cand; cand &= cand - 1) {
      const int next = lowest(cand);
      if (dist_[next] > budget) continue;
      // undirected cycles are emitted in the orientation path[1] < path[last]
      if (!g_.directed && depth == length_ - 1 && next < path_[1]) continue;
      path_[depth] = next;
      if (dfs(depth + 1, next, used | bit(next))) return true;
    }
    return false;
  }

  const MaskGraph& g_;
  Mask allowed_;
  int length_;
  NodeCounter& counter_;
  Visitor& visit_;
  int root_ = 0;
  Mask higher_ = 0;
  std::array<int, kMaxMaskVertices> dist_{};
  std::array<Vertex, kMaxMaskVertices> path_{};
};

template <typename Visitor>
bool for_each_cycle_of_length(const MaskGraph& g, Mask allowed, int length,
                              NodeCounter& counter, Visitor&& visit) {
  CycleWalker<std::remove_reference_t<Visitor>> walker(g, allowed, length, counter, visit);
  return walker.run();
}

inline Mask mask_of(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

}  // namespace dcycles::detail
