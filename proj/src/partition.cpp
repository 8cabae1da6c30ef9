#include "dcycles/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "dcycles/error.hpp"
#include "dcycles/random.hpp"

namespace dcycles {

std::vector<int> VertexPartition::class_of(int n) const {
  std::vector<int> cls(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : classes[i]) {
      if (v >= 0 && v < n) cls[v] = static_cast<int>(i);
    }
  }
  return cls;
}

bool verify_partition(const Graph& g, const VertexPartition& p, bool allow_uncovered) {
  const int n = g.order();
  if (p.guarantees.size() != p.classes.size()) return false;
  std::vector<int> cls(n, -1);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (p.classes[i].empty()) return false;
    for (Vertex v : p.classes[i]) {
      if (v < 0 || v >= n || cls[v] != -1) return false;
      cls[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] == -1) {
      if (!allow_uncovered) return false;
      continue;
    }
    int count = 0;
    for (Vertex w : g.neighbors(v)) {
      const bool same = cls[w] == cls[v];
      if (p.kind == DegreeKind::Induced ? same : (!same && cls[w] != -1)) ++count;
    }
    if (count < p.guarantees[cls[v]]) return false;
  }
  return true;
}

std::string_view to_string(PartitionMode mode) {
  switch (mode) {
    case PartitionMode::Auto: return "auto";
    case PartitionMode::Stiebitz: return "stiebitz";
    case PartitionMode::Kaneko: return "kaneko";
    case PartitionMode::Diwan: return "diwan";
  }
  return "?";
}

namespace {

std::string why_not(const Graph& g, int s, int t, PartitionMode mode) {
  const int delta = g.min_degree();
  const auto need = [&](int d) {
    return "min degree " + std::to_string(delta) + " < " + std::to_string(d);
  };
  switch (mode) {
    case PartitionMode::Stiebitz:
      if (delta < s + t + 1) return need(s + t + 1);
      return {};
    case PartitionMode::Kaneko:
      if (!is_triangle_free(g)) return "graph has a triangle";
      if (delta < s + t) return need(s + t);
      return {};
    case PartitionMode::Diwan: {
      if (s < 2 || t < 2) return "needs s, t >= 2";
      const auto gi = girth(g);
      if (gi && *gi < 5) return "girth " + std::to_string(*gi) + " < 5";
      if (delta < s + t - 1) return need(s + t - 1);
      return {};
    }
    case PartitionMode::Auto: break;
  }
  return "unresolved mode";
}

// Peels `in` down to the vertices keeping >= k neighbors inside it.
std::vector<char> core(const Graph& g, std::vector<char> in, int k) {
  const int n = g.order();
  std::vector<int> deg(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(v)) deg[v] += in[w];
    if (deg[v] < k) {
      in[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && --deg[w] < k) {
        in[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return in;
}

bool any(const std::vector<char>& in) {
  return std::find(in.begin(), in.end(), 1) != in.end();
}

VertexPartition make_partition(const std::vector<char>& in_first, int s, int t) {
  VertexPartition p;
  p.kind = DegreeKind::Induced;
  p.guarantees = {s, t};
  p.classes.resize(2);
  for (Vertex v = 0; v < static_cast<int>(in_first.size()); ++v) {
    p.classes[in_first[v] ? 0 : 1].push_back(v);
  }
  return p;
}

class Solver {
public:
  Solver(const Graph& g, int s, int t, const PartitionOptions& options)
      : g_(g), n_(g.order()), dem_{s, t}, options_(options) {}

  VertexPartition solve() {
    if (auto p = from_seeds()) return *p;
    const long move_budget = 10L * n_ * (dem_[0] + dem_[1]);
    for (int restart = 1; restart <= options_.restarts; ++restart) {
      Rng rng(options_.seed, static_cast<std::uint64_t>(restart));
      side_.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v) side_[v] = rng.coin() ? 1 : 0;
      rebuild();
      for (long moves = 0; phi_ > 0 && moves < move_budget; ++moves) {
        if (!step()) break;
      }
      best_phi_ = std::min(best_phi_, phi_);
      if (phi_ == 0) {
        std::vector<char> first(n_);
        for (Vertex v = 0; v < n_; ++v) first[v] = side_[v] == 0;
        auto p = make_partition(first, dem_[0], dem_[1]);
        if (verify_partition(g_, p)) return p;
      }
      if (auto p = complete_from_cores()) return *p;
    }
    if (n_ <= options_.exhaustive_threshold) {
      if (auto p = exhaustive()) return *p;
    }
    throw Error(ErrorKind::SearchExhausted,
                "SearchExhausted: no (" + std::to_string(dem_[0]) + "," +
                    std::to_string(dem_[1]) + ") partition found; best potential " +
                    std::to_string(best_phi_));
  }

private:
  long deficiency(Vertex v) const {
    return std::max(0, dem_[side_[v]] - inside_[v]);
  }

  void rebuild() {
    inside_.assign(n_, 0);
    size_[0] = size_[1] = 0;
    for (Vertex v = 0; v < n_; ++v) {
      ++size_[side_[v]];
      for (Vertex w : g_.neighbors(v)) inside_[v] += side_[w] == side_[v];
    }
    phi_ = 0;
    for (Vertex v = 0; v < n_; ++v) phi_ += deficiency(v);
    for (int c = 0; c < 2; ++c) {
      if (size_[c] == 0) phi_ += dem_[c];
    }
  }

  long delta(Vertex v) const {
    const int a = side_[v];
    const int b = 1 - a;
    const int out = g_.degree(v) - inside_[v];
    long d = std::max(0, dem_[b] - out) - deficiency(v);
    for (Vertex w : g_.neighbors(v)) {
      if (side_[w] == a) {
        if (inside_[w] <= dem_[a]) ++d;
      } else if (inside_[w] < dem_[b]) {
        --d;
      }
    }
    if (size_[a] == 1) d += dem_[a];
    if (size_[b] == 0) d -= dem_[b];
    return d;
  }

  void apply(Vertex v, long d) {
    const int a = side_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (side_[w] == a) {
        --inside_[w];
      } else {
        ++inside_[w];
      }
    }
    inside_[v] = g_.degree(v) - inside_[v];
    side_[v] = 1 - a;
    --size_[a];
    ++size_[1 - a];
    phi_ += d;
  }

  // One strictly improving relocation of a deficient vertex.
  bool step() {
    Vertex best = -1;
    long best_d = 0;
    int best_gain = std::numeric_limits<int>::min();
    for (Vertex v = 0; v < n_; ++v) {
      if (deficiency(v) == 0) continue;
      const long d = delta(v);
      if (d >= 0) continue;
      const int gain = g_.degree(v) - 2 * inside_[v];
      if (best == -1 || d < best_d || (d == best_d && gain > best_gain)) {
        best = v;
        best_d = d;
        best_gain = gain;
      }
    }
    if (best == -1) return false;
    apply(best, best_d);
    return true;
  }

  // From any A0 inducing min degree >= s with a nonempty t-core in G - A0:
  // B = t-core(G - A0), A = V - B. A vertex peeled while computing B kept at
  // most t-1 neighbors in B, hence >= delta - t + 1 >= s neighbors in A under
  // each of the three hypotheses.
  std::optional<VertexPartition> split_from(const std::vector<char>& seed, int first) {
    const int other = 1 - first;
    std::vector<char> rest(n_);
    for (Vertex v = 0; v < n_; ++v) rest[v] = !seed[v];
    auto b = core(g_, rest, dem_[other]);
    if (!any(b)) return std::nullopt;
    std::vector<char> in_first(n_);
    for (Vertex v = 0; v < n_; ++v) in_first[v] = first == 0 ? !b[v] : b[v];
    auto p = make_partition(in_first, dem_[0], dem_[1]);
    if (!any(in_first) || !verify_partition(g_, p)) return std::nullopt;
    return p;
  }

  std::optional<VertexPartition> complete_from_cores() {
    for (int first = 0; first < 2; ++first) {
      std::vector<char> in(n_);
      for (Vertex v = 0; v < n_; ++v) in[v] = side_[v] == first;
      auto seed = core(g_, in, dem_[first]);
      if (!any(seed)) continue;
      if (auto p = split_from(seed, first)) return p;
    }
    return std::nullopt;
  }

  // Shrinks V to a small set still having a nonempty core, dropping vertices
  // far from `anchor` first.
  std::vector<char> small_core(Vertex anchor, int k) {
    std::vector<int> dist(n_, std::numeric_limits<int>::max());
    std::queue<Vertex> q;
    dist[anchor] = 0;
    q.push(anchor);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g_.neighbors(v)) {
        if (dist[w] == std::numeric_limits<int>::max()) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    auto x = core(g_, std::vector<char>(n_, 1), k);
    for (Vertex v : order) {
      if (!x[v] || v == anchor) continue;
      auto trial = x;
      trial[v] = 0;
      trial = core(g_, trial, k);
      if (trial[anchor]) x = std::move(trial);
    }
    return x;
  }

  std::optional<VertexPartition> from_seeds() {
    const int anchors = std::min(n_, 16);
    for (Vertex anchor = 0; anchor < anchors; ++anchor) {
      for (int first = 0; first < 2; ++first) {
        auto seed = small_core(anchor, dem_[first]);
        if (!any(seed)) continue;
        if (auto p = split_from(seed, first)) return p;
      }
    }
    return std::nullopt;
  }

  std::optional<VertexPartition> exhaustive() {
    side_.assign(n_, -1);
    same_.assign(n_, 0);
    open_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) open_[v] = g_.degree(v);
    size_[0] = size_[1] = 0;
    if (!assign_from(0)) return std::nullopt;
    std::vector<char> first(n_);
    for (Vertex v = 0; v < n_; ++v) first[v] = side_[v] == 0;
    return make_partition(first, dem_[0], dem_[1]);
  }

  bool feasible(Vertex v) const {
    return side_[v] < 0 || same_[v] + open_[v] >= dem_[side_[v]];
  }

  bool assign_from(Vertex v) {
    if (v == n_) return size_[0] > 0 && size_[1] > 0;
    // with equal demands the two classes are interchangeable
    const int sides = (v == 0 && dem_[0] == dem_[1]) ? 1 : 2;
    for (int c = 0; c < sides; ++c) {
      side_[v] = c;
      ++size_[c];
      for (Vertex w : g_.neighbors(v)) {
        --open_[w];
        if (side_[w] == c) {
          ++same_[w];
          ++same_[v];
        }
      }
      bool ok = feasible(v);
      for (Vertex w : g_.neighbors(v)) ok = ok && feasible(w);
      if (ok && assign_from(v + 1)) return true;
      for (Vertex w : g_.neighbors(v)) {
        ++open_[w];
        if (side_[w] == c) {
          --same_[w];
          --same_[v];
        }
      }
      --size_[c];
      side_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int dem_[2];
  PartitionOptions options_;
  std::vector<int> side_;
  std::vector<int> inside_;
  std::vector<int> same_;
  std::vector<int> open_;
  int size_[2] = {0, 0};
  long phi_ = 0;
  long best_phi_ = std::numeric_limits<long>::max();
};

}  // namespace

PartitionMode resolve_mode(const Graph& g, int s, int t, PartitionMode mode) {
  if (s < 1 || t < 1) fail(ErrorKind::BadParameters, "demands must be positive");
  if (g.order() == 0) fail(ErrorKind::PreconditionUnmet, "empty graph");
  if (mode != PartitionMode::Auto) {
    const auto reason = why_not(g, s, t, mode);
    if (!reason.empty()) {
      fail(ErrorKind::PreconditionUnmet, std::string(to_string(mode)) + ": " + reason);
    }
    return mode;
  }
  std::string reasons;
  for (auto m : {PartitionMode::Diwan, PartitionMode::Kaneko, PartitionMode::Stiebitz}) {
    const auto reason = why_not(g, s, t, m);
    if (reason.empty()) return m;
    reasons += std::string(reasons.empty() ? "" : "; ") + std::string(to_string(m)) + ": " + reason;
  }
  fail(ErrorKind::PreconditionUnmet, reasons);
}

VertexPartition degree_partition(const Graph& g, int s, int t, PartitionMode mode,
                                 const PartitionOptions& options) {
  resolve_mode(g, s, t, mode);
  return Solver(g, s, t, options).solve();
}

VertexPartition multiway_degree_partition(const Graph& g, const std::vector<int>& demands,
                                          const PartitionOptions& options) {
  if (demands.empty()) fail(ErrorKind::BadParameters, "no demands given");
  for (int d : demands) {
    if (d < 1) fail(ErrorKind::BadParameters, "demands must be positive");
  }
  long needed = -1;
  for (int d : demands) needed += d + 1;
  if (g.order() == 0 || g.min_degree() < needed) {
    fail(ErrorKind::PreconditionUnmet, "min degree " + std::to_string(g.min_degree()) +
                                           " < " + std::to_string(needed));
  }

  VertexPartition result;
  result.kind = DegreeKind::Induced;
  result.guarantees = demands;

  // rest: the current remainder as an induced subgraph of g
  std::vector<Vertex> to_parent(g.order());
  std::iota(to_parent.begin(), to_parent.end(), 0);
  Graph rest = g;
  for (std::size_t i = 0; i + 1 < demands.size(); ++i) {
    int remaining = -1;
    for (std::size_t j = i + 1; j < demands.size(); ++j) remaining += demands[j] + 1;
    auto split = degree_partition(rest, demands[i], remaining, PartitionMode::Stiebitz, options);
    std::vector<Vertex> cls;
    for (Vertex v : split.classes[0]) cls.push_back(to_parent[v]);
    std::sort(cls.begin(), cls.end());
    result.classes.push_back(std::move(cls));
    auto sub = rest.induced(split.classes[1]);
    for (Vertex& v : sub.to_parent) v = to_parent[v];
    to_parent = std::move(sub.to_parent);
    rest = std::move(sub.graph);
  }
  std::sort(to_parent.begin(), to_parent.end());
  result.classes.push_back(std::move(to_parent));
  return result;
}

}  // namespace dcycles
