#include "dcycles/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "dcycles/error.hpp"

namespace dcycles {

namespace {

void check_endpoint(int n, Vertex v) {
  if (v < 0 || v >= n) {
    fail(ErrorKind::InvalidInput,
         "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

// Builds a CSR structure from (source, target) pairs; rows come out sorted.
void build_csr(int n, std::vector<Edge> pairs, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& targets) {
  std::sort(pairs.begin(), pairs.end());
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : pairs) ++offsets[p.u + 1];
  for (int v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) targets[i] = pairs[i].v;
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> vs, int n) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  for (Vertex v : out) check_endpoint(n, v);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    fail(ErrorKind::InvalidInput, "repeated vertex in induced vertex set");
  }
  return out;
}

std::vector<Vertex> complement(std::span<const Vertex> removed, int n) {
  std::vector<char> drop(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) {
    check_endpoint(n, v);
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return keep;
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  std::vector<Edge> pairs;
  pairs.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) {
      fail(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(e.u));
    }
    pairs.push_back({e.u, e.v});
    pairs.push_back({e.v, e.u});
  }
  Graph g;
  g.n_ = n;
  build_csr(n, std::move(pairs), g.offsets_, g.targets_);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      fail(ErrorKind::InvalidInput, "repeated edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::vertices_of_degree(int d) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) == d) out.push_back(v);
  }
  return out;
}

int Graph::count_of_degree(int d) const {
  return static_cast<int>(vertices_of_degree(d).size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

InducedSubgraph Graph::induced(std::span<const Vertex> vertices) const {
  auto keep = sorted_unique(vertices, n_);
  std::vector<Vertex> local(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (Vertex u : keep) {
    for (Vertex v : neighbors(u)) {
      if (u < v && local[v] >= 0) es.push_back({local[u], local[v]});
    }
  }
  return {Graph::from_edges(static_cast<int>(keep.size()), es), std::move(keep)};
}

InducedSubgraph Graph::without(std::span<const Vertex> removed) const {
  return induced(complement(removed, n_));
}

// -------------------------------------------------------------- Digraph

Digraph Digraph::from_arcs(int n, std::span<const Edge> arcs) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  std::vector<Edge> out_pairs;
  std::vector<Edge> in_pairs;
  out_pairs.reserve(arcs.size());
  in_pairs.reserve(arcs.size());
  for (const auto& a : arcs) {
    check_endpoint(n, a.u);
    check_endpoint(n, a.v);
    if (a.u == a.v) {
      fail(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(a.u));
    }
    out_pairs.push_back({a.u, a.v});
    in_pairs.push_back({a.v, a.u});
  }
  Digraph d;
  d.n_ = n;
  build_csr(n, std::move(out_pairs), d.out_offsets_, d.out_targets_);
  build_csr(n, std::move(in_pairs), d.in_offsets_, d.in_targets_);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = d.out_neighbors(v);
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      fail(ErrorKind::InvalidInput, "repeated arc from vertex " + std::to_string(v));
    }
  }
  return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const noexcept {
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Digraph::min_out_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
  return best;
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_neighbors(u)) out.push_back({u, v});
  }
  return out;
}

bool Digraph::is_tournament() const noexcept {
  if (size() != static_cast<std::size_t>(n_) * (n_ - 1) / 2) return false;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_neighbors(u)) {
      if (has_arc(v, u)) return false;
    }
  }
  return true;
}

std::optional<int> Digraph::regular_degree() const noexcept {
  if (n_ == 0) return 0;
  const int r = out_degree(0);
  for (Vertex v = 0; v < n_; ++v) {
    if (out_degree(v) != r || in_degree(v) != r) return std::nullopt;
  }
  return r;
}

InducedSubdigraph Digraph::induced(std::span<const Vertex> vertices) const {
  auto keep = sorted_unique(vertices, n_);
  std::vector<Vertex> local(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> as;
  for (Vertex u : keep) {
    for (Vertex v : out_neighbors(u)) {
      if (local[v] >= 0) as.push_back({local[u], local[v]});
    }
  }
  return {Digraph::from_arcs(static_cast<int>(keep.size()), as), std::move(keep)};
}

InducedSubdigraph Digraph::without(std::span<const Vertex> removed) const {
  return induced(complement(removed, n_));
}

// ---------------------------------------------------------------- Cycle

Cycle::Cycle(std::vector<Vertex> vertices, bool directed) : directed_(directed) {
  const std::size_t min_len = directed ? 2 : 3;
  if (vertices.size() < min_len) {
    fail(ErrorKind::InvalidInput,
         "cycle of length " + std::to_string(vertices.size()) + " is too short");
  }
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorKind::InvalidInput, "cycle repeats a vertex");
    }
  }
  auto first = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), first, vertices.end());
  if (!directed && vertices[1] > vertices.back()) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  vertices_ = std::move(vertices);
}

Cycle Cycle::undirected(std::vector<Vertex> vertices) {
  return Cycle(std::move(vertices), false);
}

Cycle Cycle::directed(std::vector<Vertex> vertices) {
  return Cycle(std::move(vertices), true);
}

bool Cycle::contains(Vertex v) const noexcept {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Cycle::valid_in(const Graph& g) const noexcept {
  if (directed_ || vertices_.size() < 3) return false;
  const std::size_t len = vertices_.size();
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = vertices_[i];
    Vertex b = vertices_[(i + 1) % len];
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order()) return false;
    if (!g.adjacent(a, b)) return false;
  }
  return true;
}

bool Cycle::valid_in(const Digraph& d) const noexcept {
  if (!directed_ || vertices_.size() < 2) return false;
  const std::size_t len = vertices_.size();
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = vertices_[i];
    Vertex b = vertices_[(i + 1) % len];
    if (a < 0 || a >= d.order() || b < 0 || b >= d.order()) return false;
    if (!d.has_arc(a, b)) return false;
  }
  return true;
}

Cycle Cycle::relabeled(std::span<const Vertex> to_parent) const {
  std::vector<Vertex> mapped;
  mapped.reserve(vertices_.size());
  for (Vertex v : vertices_) mapped.push_back(to_parent[v]);
  return Cycle(std::move(mapped), directed_);
}

// ------------------------------------------------------------ structure

std::vector<Block> blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Block> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        Block b;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
          b.vertices.push_back(e.u);
          b.vertices.push_back(e.v);
          if (e.u == up.v && e.v == done.v) break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<int> count(g.order(), 0);
  for (const auto& b : blocks(g)) {
    for (Vertex v : b.vertices) ++count[v];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count[v] >= 2) out.push_back(v);
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

StrongComponents strong_components(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> scc_stack;
  StrongComponents result;
  result.component_of.assign(n, -1);
  int timer = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = timer++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto nb = d.out_neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (index[w] < 0) {
          index[w] = low[w] = timer++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        result.components.push_back(std::move(comp));
      }
    }
  }
  // Tarjan emits sink components first.
  std::reverse(result.components.begin(), result.components.end());
  for (std::size_t c = 0; c < result.components.size(); ++c) {
    for (Vertex v : result.components[c]) result.component_of[v] = static_cast<int>(c);
  }
  return result;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // common neighbor w > v closes a triangle
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
      }
    }
  }
  return true;
}

bool is_strong(const Digraph& d) {
  return d.order() <= 1 || strong_components(d).components.size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace dcycles
