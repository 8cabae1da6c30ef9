#include "dcycles/dicycles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "dcycles/error.hpp"
#include "dcycles/random.hpp"

namespace dcycles {

namespace {

void require_tournament(const Digraph& t) {
  if (!t.is_tournament()) fail(ErrorKind::NotTournament, "not a tournament");
}

// Some directed 3-cycle through vertex v of a strong tournament.
std::vector<Vertex> triangle_through(const Digraph& t, Vertex v) {
  for (Vertex a : t.out_neighbors(v)) {
    for (Vertex b : t.out_neighbors(a)) {
      if (t.has_arc(b, v)) return {v, a, b};
    }
  }
  return {};
}

// Directed cycle of exactly `length` vertices inside `allowed`, roots in
// increasing order, each rooted at its smallest vertex.
std::vector<Vertex> cycle_of_length(const Digraph& d, const std::vector<char>& allowed,
                                    int length) {
  std::vector<Vertex> path;
  std::vector<char> on(d.order(), 0);
  auto dfs = [&](auto&& self, Vertex root) -> bool {
    const Vertex cur = path.back();
    if (static_cast<int>(path.size()) == length) return d.has_arc(cur, root);
    for (Vertex w : d.out_neighbors(cur)) {
      if (w <= root || !allowed[w] || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      if (self(self, root)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  for (Vertex root = 0; root < d.order(); ++root) {
    if (!allowed[root]) continue;
    path.assign(1, root);
    on[root] = 1;
    if (dfs(dfs, root)) return path;
    on[root] = 0;
  }
  return {};
}

}  // namespace

Cycle camion_hamiltonian(const Digraph& t) {
  require_tournament(t);
  const int n = t.order();
  if (n < 3) fail(ErrorKind::TooSmall, "a Hamiltonian cycle needs at least 3 vertices");
  if (!is_strong(t)) fail(ErrorKind::NotStrong, "the tournament is not strong");

  std::vector<Vertex> cycle = triangle_through(t, 0);
  std::vector<char> on(n, 0);
  for (Vertex v : cycle) on[v] = 1;

  while (static_cast<int>(cycle.size()) < n) {
    bool inserted = false;
    for (Vertex v = 0; v < n && !inserted; ++v) {
      if (on[v]) continue;
      const auto m = cycle.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (t.has_arc(cycle[i], v) && t.has_arc(v, cycle[(i + 1) % m])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
          on[v] = 1;
          inserted = true;
          break;
        }
      }
    }
    if (inserted) continue;
    // Every outside vertex now dominates the cycle (A) or is dominated by it
    // (B); strong connectivity forces an arc b -> a.
    bool spliced = false;
    for (Vertex b = 0; b < n && !spliced; ++b) {
      if (on[b] || !t.has_arc(cycle[0], b)) continue;
      for (Vertex a : t.out_neighbors(b)) {
        if (on[a] || !t.has_arc(a, cycle[0])) continue;
        cycle.insert(cycle.begin() + 1, {b, a});
        on[a] = on[b] = 1;
        spliced = true;
        break;
      }
    }
    if (!spliced) throw std::logic_error("strong tournament without a splice arc");
  }
  return Cycle::directed(cycle);
}

Cycle tournament_long_cycle(const Digraph& t) {
  require_tournament(t);
  if (t.order() == 0 || t.min_out_degree() < 1) {
    fail(ErrorKind::DegreeTooLow, "min out-degree 0");
  }
  const auto sc = strong_components(t);
  if (sc.components.size() == 1) return camion_hamiltonian(t);
  // the last component is dominated by the rest, so it keeps every out-degree
  const auto sub = t.induced(sc.components.back());
  return camion_hamiltonian(sub.graph).relabeled(sub.to_parent);
}

Cycle tournament_cycle_shorten(const Digraph& t, const Cycle& c, int l) {
  if (!c.is_directed() || !c.valid_in(t)) {
    fail(ErrorKind::InvalidInput, "not a directed cycle of the tournament");
  }
  const int len = static_cast<int>(c.length());
  if (l < 3 || l > len) {
    fail(ErrorKind::BadLength, "target length " + std::to_string(l) + " outside [3, " +
                                   std::to_string(len) + "]");
  }
  std::vector<Vertex> cur(c.vertices().begin(), c.vertices().end());
  while (static_cast<int>(cur.size()) > l) {
    const auto m = cur.size();
    bool shortened = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.has_arc(cur[i], cur[(i + 2) % m])) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>((i + 1) % m));
        shortened = true;
        break;
      }
    }
    if (shortened) continue;
    std::vector<char> allowed(t.order(), 0);
    for (Vertex v : cur) allowed[v] = 1;
    cur = cycle_of_length(t, allowed, l);
    if (cur.empty()) throw std::logic_error("strong subtournament without an l-cycle");
  }
  return Cycle::directed(cur);
}

int tournament_degree_bound(int k) { return (k * k + 4 * k - 3 + 1) / 2; }

CyclePacking tournament_disjoint_distinct(const Digraph& t, int k) {
  require_tournament(t);
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  const int need = tournament_degree_bound(k);
  if (t.order() == 0 || t.min_out_degree() < need) {
    fail(ErrorKind::DegreeTooLow, "min out-degree " + std::to_string(t.min_out_degree()) +
                                      " < " + std::to_string(need));
  }
  CyclePacking p;
  p.finder = Finder::Constructive;
  if (k == 1) {
    p.cycles = {tournament_long_cycle(t)};
    return p;
  }
  // i-th shortest of the k-1 cycles has length >= i+2; cut it down to i+2
  auto previous = tournament_disjoint_distinct(t, k - 1).cycles;
  std::vector<Vertex> removed;
  for (int i = 0; i < k - 1; ++i) {
    auto shorter = tournament_cycle_shorten(t, previous[i], i + 3);
    removed.insert(removed.end(), shorter.vertices().begin(), shorter.vertices().end());
    p.cycles.push_back(std::move(shorter));
  }
  std::sort(removed.begin(), removed.end());
  const auto rest = t.without(removed);
  p.cycles.push_back(tournament_long_cycle(rest.graph).relabeled(rest.to_parent));
  return p;
}

CycleFamily dipath_distinct_cycles(const Digraph& d, int k) {
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  if (d.order() == 0 || d.min_out_degree() < k) {
    fail(ErrorKind::DegreeTooLow, "min out-degree " + std::to_string(d.min_out_degree()) +
                                      " < " + std::to_string(k));
  }
  const auto path = maximal_path(d, 0);
  const auto last = static_cast<int>(path.size()) - 1;
  std::vector<int> position(d.order(), -1);
  for (int i = 0; i <= last; ++i) position[path[i]] = i;
  std::vector<int> starts;
  for (Vertex w : d.out_neighbors(path.back())) starts.push_back(position[w]);
  std::sort(starts.begin(), starts.end());

  CycleFamily family;
  family.hub = path.back();
  for (int j = 0; j < k; ++j) {
    family.cycles.push_back(Cycle::directed({path.begin() + starts[j], path.end()}));
  }
  return family;
}

double regular_degree_threshold(int k) {
  const double kk = k;
  return kk * kk / 2.0 * (1.0 + 7.0 * std::cbrt(std::log(kk) / kk));
}

namespace {

// Checks a coloring; returns an empty string on success, else the first
// violation found.
std::string check_coloring(const Digraph& d, const std::vector<int>& color,
                           const std::vector<int>& demands) {
  const int k = static_cast<int>(demands.size());
  std::vector<int> size(k, 0);
  for (int c : color) {
    if (c >= 0) ++size[c];
  }
  for (int j = 0; j < k; ++j) {
    if (size[j] == 0) return "class " + std::to_string(j + 1) + " is empty";
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    if (color[v] < 0) continue;
    int same = 0;
    for (Vertex w : d.out_neighbors(v)) same += color[w] == color[v];
    if (same < demands[color[v]]) {
      return "vertex " + std::to_string(v) + " has " + std::to_string(same) +
             " out-neighbors in class " + std::to_string(color[v] + 1) + ", needs " +
             std::to_string(demands[color[v]]);
    }
  }
  return {};
}

// Reads one cycle per class, classes in increasing order, each time taking
// the longest length not used yet. Class j offers at least demands[j]
// distinct lengths; with demands[j] >= j+1 a fresh one always exists.
ProbabilisticResult extract(const Digraph& d, const std::vector<int>& color,
                            const std::vector<int>& demands, int attempts) {
  const int k = static_cast<int>(demands.size());
  ProbabilisticResult result;
  result.classes.resize(k);
  result.demands = demands;
  result.attempts = attempts;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (color[v] >= 0) result.classes[color[v]].push_back(v);
  }
  std::set<std::size_t> used;
  for (int j = 0; j < k; ++j) {
    const auto sub = d.induced(result.classes[j]);
    auto menu = dipath_distinct_cycles(sub.graph, demands[j]).cycles;
    std::sort(menu.begin(), menu.end(),
              [](const Cycle& a, const Cycle& b) { return a.length() > b.length(); });
    auto fresh = std::find_if(menu.begin(), menu.end(),
                              [&](const Cycle& c) { return !used.count(c.length()); });
    if (fresh == menu.end()) throw std::logic_error("class without a fresh length");
    used.insert(fresh->length());
    result.packing.cycles.push_back(fresh->relabeled(sub.to_parent));
  }
  std::sort(result.packing.cycles.begin(), result.packing.cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              return a.length() != b.length() ? a.length() < b.length() : a < b;
            });
  result.packing.finder = Finder::Search;
  return result;
}

template <typename Sample>
ProbabilisticResult las_vegas(const Digraph& d, const std::vector<int>& demands,
                              const ProbabilisticOptions& options, Sample sample) {
  if (options.retries < 1) fail(ErrorKind::BadParameters, "retries must be positive");
  std::vector<int> color(d.order());
  std::string last;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    Rng rng(options.seed, static_cast<std::uint64_t>(attempt));
    for (auto& c : color) c = sample(rng);
    last = check_coloring(d, color, demands);
    if (last.empty()) return extract(d, color, demands, attempt + 1);
  }
  fail(ErrorKind::RetriesExhausted, std::to_string(options.retries) +
                                        " colorings rejected; last failure: " + last);
}

}  // namespace

ProbabilisticResult regular_partition_finder(const Digraph& d, int k,
                                             const ProbabilisticOptions& options) {
  if (k < 2) fail(ErrorKind::BadParameters, "k must be at least 2");
  const auto r = d.regular_degree();
  if (!r || d.order() == 0) fail(ErrorKind::NotRegular, "the digraph is not regular");
  const double threshold = regular_degree_threshold(k);
  if (*r < threshold && !options.force) {
    fail(ErrorKind::DegreeTooLow, "degree " + std::to_string(*r) + " below " +
                                      std::to_string(threshold) + " (force to run anyway)");
  }
  const double kk = k;
  const int q = static_cast<int>(std::floor(std::cbrt(kk * kk) * std::cbrt(std::log(kk))));
  const double kp = k + q;
  const double s = kp * (kp + 1) / 2.0;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (int j = 1; j <= k; ++j) {
    acc += (j + q) / s;
    cumulative.push_back(acc);
  }
  std::vector<int> demands(k);
  for (int j = 0; j < k; ++j) demands[j] = j + 1;
  return las_vegas(d, demands, options, [&](Rng& rng) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return it == cumulative.end() ? -1 : static_cast<int>(it - cumulative.begin());
  });
}

ProbabilisticResult uniform_partition_finder(const Digraph& d, int k,
                                             const ProbabilisticOptions& options) {
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  if (d.order() == 0 || d.min_out_degree() < 2 * k * k) {
    fail(ErrorKind::DegreeTooLow, "min out-degree " + std::to_string(d.min_out_degree()) +
                                      " < " + std::to_string(2 * k * k));
  }
  return las_vegas(d, std::vector<int>(k, k), options, [&](Rng& rng) {
    return static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
  });
}

}  // namespace dcycles
