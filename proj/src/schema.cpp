#include "dcycles/schema.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dcycles/cycle_basic.hpp"
#include "dcycles/error.hpp"

namespace dcycles {

namespace {

bool is_path(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return !path.empty();
}

std::vector<int> apex_positions(const Graph& g, const std::vector<Vertex>& path, Vertex apex) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (g.adjacent(apex, path[i])) pos.push_back(static_cast<int>(i));
  }
  return pos;
}

// Shortest window of `path` on which `apex` has exactly k+1 neighbors.
std::optional<PathVertexSchema> shortest_window(const Graph& g, const std::vector<Vertex>& path,
                                                Vertex apex, int k) {
  if (std::find(path.begin(), path.end(), apex) != path.end()) return std::nullopt;
  const auto pos = apex_positions(g, path, apex);
  if (static_cast<int>(pos.size()) < k + 1) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t j = 0; j + k < pos.size(); ++j) {
    if (pos[j + k] - pos[j] < pos[best + k] - pos[best]) best = j;
  }
  PathVertexSchema s;
  s.path.assign(path.begin() + pos[best], path.begin() + pos[best + k] + 1);
  s.apex = apex;
  s.k = k;
  return s;
}

void require_degree(const Graph& g, int k) {
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  if (g.order() == 0 || g.min_degree() < k + 1) {
    fail(ErrorKind::DegreeTooLow, "schemas need minimum degree >= " + std::to_string(k + 1) +
                                      ", graph has " + std::to_string(g.min_degree()));
  }
}

class ExactSchemaSearch {
public:
  ExactSchemaSearch(const Graph& g, int k) : g_(g), k_(k), nb_(g.order()), on_(g.order()) {}

  OptimizedSchema run() {
    for (Vertex x = 0; x < g_.order() && best_card_ > k_ + 2; ++x) {
      apex_ = x;
      std::fill(nb_.begin(), nb_.end(), 0);
      for (Vertex w : g_.neighbors(x)) nb_[w] = 1;
      for (Vertex start : g_.neighbors(x)) {
        path_.assign(1, start);
        on_[start] = 1;
        extend(1);
        on_[start] = 0;
        if (best_card_ == k_ + 2) break;
      }
    }
    return {best_, Exactness::Exact, explored_};
  }

private:
  void extend(int count) {
    ++explored_;
    const Vertex last = path_.back();
    const int size = static_cast<int>(path_.size());
    if (count == k_ + 1) {
      if (size >= 2 && path_.front() < last && size + 1 < best_card_) {
        best_card_ = size + 1;
        best_ = {path_, apex_, k_};
      }
      return;
    }
    if (size + (k_ + 1 - count) + 1 >= best_card_) return;
    for (Vertex w : g_.neighbors(last)) {
      if (w == apex_ || on_[w]) continue;
      on_[w] = 1;
      path_.push_back(w);
      extend(count + nb_[w]);
      path_.pop_back();
      on_[w] = 0;
      if (best_card_ == k_ + 2) return;
    }
  }

  const Graph& g_;
  int k_;
  std::vector<char> nb_;
  std::vector<char> on_;
  std::vector<Vertex> path_;
  Vertex apex_ = -1;
  int best_card_ = std::numeric_limits<int>::max();
  PathVertexSchema best_;
  std::uint64_t explored_ = 0;
};

// One shrinking move, or nullopt when none applies.
std::optional<PathVertexSchema> shrink(const Graph& g, const PathVertexSchema& s) {
  const int k = s.k;
  if (auto w = shortest_window(g, s.path, s.apex, k); w && w->cardinality() < s.cardinality()) {
    return w;
  }
  std::vector<char> in_schema(g.order(), 0);
  for (Vertex v : s.path) in_schema[v] = 1;
  in_schema[s.apex] = 1;
  const auto& p = s.path;
  const int len = static_cast<int>(p.size());
  for (Vertex y = 0; y < g.order(); ++y) {
    if (in_schema[y]) continue;
    // y as the new apex on a window of the same path
    if (auto w = shortest_window(g, p, y, k); w && w->cardinality() < s.cardinality()) return w;
    // rerouting through y when it sees both ends of P and the apex
    if (len < 3 || !g.adjacent(y, p.front()) || !g.adjacent(y, p.back()) ||
        !g.adjacent(y, s.apex)) {
      continue;
    }
    int i = -1;  // 0-based index of the last path vertex outside N(apex)
    for (int j = len - 2; j >= 1; --j) {
      if (!g.adjacent(s.apex, p[j])) {
        i = j;
        break;
      }
    }
    if (i < 0) continue;
    std::vector<Vertex> rerouted;
    if (i <= len - 3) {
      rerouted.assign(p.begin() + i + 2, p.end());
      rerouted.push_back(y);
      rerouted.insert(rerouted.end(), p.begin(), p.begin() + i);
    } else {
      rerouted.push_back(y);
      rerouted.insert(rerouted.end(), p.begin(), p.end() - 2);
    }
    if (!is_path(g, rerouted)) continue;
    if (auto w = shortest_window(g, rerouted, s.apex, k); w && w->cardinality() < s.cardinality()) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_valid_schema(const Graph& g, const PathVertexSchema& s) {
  if (s.k < 1 || s.apex < 0 || s.apex >= g.order()) return false;
  if (!is_path(g, s.path)) return false;
  if (std::find(s.path.begin(), s.path.end(), s.apex) != s.path.end()) return false;
  return static_cast<int>(apex_positions(g, s.path, s.apex).size()) == s.k + 1;
}

PathVertexSchema find_schema(const Graph& g, int k) {
  require_degree(g, k);
  auto path = maximal_path(g, 0);
  const Vertex apex = path.back();
  path.pop_back();
  const auto pos = apex_positions(g, path, apex);
  // keep the k+1 apex neighbors closest to the end
  const int from = pos[pos.size() - static_cast<std::size_t>(k) - 1];
  return {{path.begin() + from, path.end()}, apex, k};
}

OptimizedSchema optimize_schema(const Graph& g, int k, int exact_threshold) {
  require_degree(g, k);
  if (g.order() <= exact_threshold) return ExactSchemaSearch(g, k).run();
  OptimizedSchema result{find_schema(g, k), Exactness::BestFound, 0};
  while (auto smaller = shrink(g, result.schema)) {
    ++result.explored;
    result.schema = std::move(*smaller);
  }
  return result;
}

std::vector<Cycle> schema_cycles(const Graph& g, const PathVertexSchema& s) {
  if (!is_valid_schema(g, s)) fail(ErrorKind::InvalidSchema, "not a path-vertex schema of the graph");
  const auto pos = apex_positions(g, s.path, s.apex);
  std::vector<Cycle> cycles;
  for (int j = 1; j <= s.k; ++j) {
    std::vector<Vertex> vs{s.apex};
    vs.insert(vs.end(), s.path.begin() + pos[0], s.path.begin() + pos[j] + 1);
    cycles.push_back(Cycle::undirected(std::move(vs)));
  }
  return cycles;
}

ExternalReport schema_external_report(const Graph& g, const OptimizedSchema& s) {
  if (s.exactness != Exactness::Exact) {
    fail(ErrorKind::NotOptimal, "the schema is not certified optimal");
  }
  if (!is_valid_schema(g, s.schema)) fail(ErrorKind::InvalidSchema, "not a path-vertex schema of the graph");
  const auto& sc = s.schema;
  std::vector<char> in_schema(g.order(), 0);
  for (Vertex v : sc.path) in_schema[v] = 1;
  in_schema[sc.apex] = 1;

  ExternalReport r;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (in_schema[y]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(y)) count += in_schema[w];
    r.counts.emplace_back(y, count);
    r.max_count = std::max(r.max_count, count);
    if (count > sc.k + 2) r.counts_within_bound = false;
    if (count == sc.k + 2) r.attaining.push_back(y);
  }
  if (!r.attaining.empty()) {
    for (Vertex y : r.attaining) {
      r.attaining_adjacent_to_apex = r.attaining_adjacent_to_apex && g.adjacent(y, sc.apex);
    }
    for (Vertex v : sc.path) {
      r.path_inside_apex_neighborhood = r.path_inside_apex_neighborhood && g.adjacent(v, sc.apex);
    }
    r.cardinality_is_minimum = sc.cardinality() == sc.k + 2;
  }
  r.consistent = r.counts_within_bound && r.attaining_adjacent_to_apex &&
                 r.path_inside_apex_neighborhood && r.cardinality_is_minimum;
  return r;
}

}  // namespace dcycles
