#include "dcycles/cycle_basic.hpp"

#include <algorithm>
#include <string>

#include "dcycles/error.hpp"

namespace dcycles {

namespace {

void require_positive(int k, const char* name) {
  if (k < 1) fail(ErrorKind::BadParameters, std::string(name) + " must be positive");
}

void require_min_degree(const Graph& g, int needed, const std::string& what) {
  if (g.order() == 0 || g.min_degree() < needed) {
    fail(ErrorKind::DegreeTooLow, what + " needs minimum degree >= " + std::to_string(needed) +
                                      ", graph has " + std::to_string(g.min_degree()));
  }
}

}  // namespace

std::vector<Vertex> maximal_path(const Graph& g, Vertex start) {
  std::vector<Vertex> path;
  if (g.order() == 0) return path;
  std::vector<char> on_path(g.order(), 0);
  path.push_back(start);
  on_path[start] = 1;
  while (true) {
    auto nb = g.neighbors(path.back());
    auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return !on_path[w]; });
    if (it == nb.end()) break;
    on_path[*it] = 1;
    path.push_back(*it);
  }
  return path;
}

std::vector<Vertex> maximal_path(const Digraph& d, Vertex start) {
  std::vector<Vertex> path;
  if (d.order() == 0) return path;
  std::vector<char> on_path(d.order(), 0);
  path.push_back(start);
  on_path[start] = 1;
  while (true) {
    auto nb = d.out_neighbors(path.back());
    auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return !on_path[w]; });
    if (it == nb.end()) break;
    on_path[*it] = 1;
    path.push_back(*it);
  }
  return path;
}

CycleFamily maximal_path_cycles(const Graph& g, int k) {
  require_positive(k, "k");
  require_min_degree(g, k + 1, "maximal_path_cycles");

  const auto path = maximal_path(g, 0);
  const auto last = static_cast<int>(path.size()) - 1;
  const Vertex hub = path.back();
  std::vector<int> position(g.order(), -1);
  for (int i = 0; i <= last; ++i) position[path[i]] = i;

  // Each neighbor u_i of the end, other than its predecessor, closes the
  // cycle u_i .. u_last of length last - i + 1.
  std::vector<int> starts;
  for (Vertex w : g.neighbors(hub)) {
    if (position[w] <= last - 2) starts.push_back(position[w]);
  }
  std::sort(starts.begin(), starts.end());

  CycleFamily family;
  family.hub = hub;
  for (int j = 0; j < k; ++j) {
    const int i = starts[j];
    family.cycles.push_back(Cycle::undirected({path.begin() + i, path.end()}));
  }
  return family;
}

VertexPartition maxcut_bipartition(const Graph& g, int k) {
  require_positive(k, "k");
  VertexPartition cut;
  cut.kind = DegreeKind::Cross;
  cut.guarantees = {k, k};
  cut.classes.resize(2);
  if (g.order() == 0) return cut;
  require_min_degree(g, 2 * k - 1, "maxcut_bipartition");

  const int n = g.order();
  std::vector<int> side(n);
  for (Vertex v = 0; v < n; ++v) side[v] = v % 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      int same = 0;
      for (Vertex w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] ^= 1;
        changed = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) cut.classes[side[v]].push_back(v);
  return cut;
}

Graph cross_subgraph(const Graph& g, const VertexPartition& cut) {
  const auto cls = cut.class_of(g.order());
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (cls[e.u] != cls[e.v]) es.push_back(e);
  }
  return Graph::from_edges(g.order(), es);
}

CycleFamily even_distinct_cycles(const Graph& g, int k) {
  require_positive(k, "k");
  require_min_degree(g, 2 * k + 1, "even_distinct_cycles");
  const auto cut = maxcut_bipartition(g, k + 1);
  return maximal_path_cycles(cross_subgraph(g, cut), k);
}

ResidueSearch residue_cycle(const Graph& g, int c, int r, std::uint64_t budget) {
  if (r < 2 || c < 0 || c >= r) {
    fail(ErrorKind::BadResidue,
         "need r >= 2 and 0 <= c < r, got c=" + std::to_string(c) + " r=" + std::to_string(r));
  }
  const int n = g.order();
  ResidueSearch result;
  result.guaranteed = n > 0 && g.min_degree() >= 2 * r - 1 && (r % 2 == 1 || c % 2 == 0);

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<Frame> stack;
  bool truncated = false;

  for (Vertex root = 0; root < n && !truncated; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next == nb.size()) {
        on_path[f.v] = 0;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      const Vertex w = nb[f.next++];
      if (w == root) {
        const auto len = static_cast<int>(path.size());
        if (len >= 3 && len % r == c) {
          result.cycle = Cycle::undirected(path);
          result.status = ResidueStatus::Found;
          result.completed = false;
          return result;
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      if (++result.expansions > budget) {
        truncated = true;
        break;
      }
      on_path[w] = 1;
      path.push_back(w);
      stack.push_back({w, 0});
    }
    for (Vertex v : path) on_path[v] = 0;
  }

  result.completed = !truncated;
  result.status = result.completed && result.guaranteed ? ResidueStatus::CompletedEmpty
                                                        : ResidueStatus::Exhausted;
  return result;
}

int divisible_degree_bound(int k, int r) {
  return (k % 2 == 0 && r % 2 == 1) ? 2 * (k + 1) * r - 1 : 2 * k * r - 1;
}

std::vector<Cycle> divisible_distinct_cycles(const Graph& g, int k, int r,
                                             std::uint64_t budget) {
  require_positive(k, "k");
  if (r < 2) fail(ErrorKind::BadParameters, "r must be at least 2");
  require_min_degree(g, divisible_degree_bound(k, r), "divisible_distinct_cycles");

  // Residues i*r (r even) or 2*i*r (r odd) modulo count*r are pairwise
  // distinct, so the cycles found have distinct lengths, all divisible by r.
  const int count = (k % 2 == 0 && r % 2 == 1) ? k + 1 : k;
  const int modulus = count * r;
  std::vector<Cycle> cycles;
  for (int i = 0; i < count; ++i) {
    const int residue = r % 2 == 0 ? i * r : (2 * i * r) % modulus;
    auto search = residue_cycle(g, residue, modulus, budget);
    if (search.status != ResidueStatus::Found) {
      throw Error(ErrorKind::SearchExhausted,
                  "SearchExhausted: no cycle of length " + std::to_string(residue) + " mod " +
                      std::to_string(modulus) + " within the search budget")
          .with_search(search.expansions, search.completed);
    }
    cycles.push_back(*search.cycle);
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  cycles.resize(static_cast<std::size_t>(k));
  return cycles;
}

}  // namespace dcycles
