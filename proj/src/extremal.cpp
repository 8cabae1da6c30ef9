#include "dcycles/extremal.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "dcycles/dicycles.hpp"
#include "dcycles/error.hpp"
#include "dcycles/packing.hpp"
#include "dcycles/random.hpp"

namespace dcycles {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;
constexpr std::uint64_t kMaxEdges = 50'000'000;

struct Arity {
  std::size_t count;
  bool last_is_seed;
};

const std::map<std::string, Arity>& families() {
  static const std::map<std::string, Arity> table{
      {"complete", {1, false}},
      {"complete_bipartite", {2, false}},
      {"heawood", {0, false}},
      {"petersen", {0, false}},
      {"random_cubic", {2, true}},
      {"random_regular", {3, true}},
      {"regular_tournament", {1, false}},
      {"random_tournament", {2, true}},
      {"random_regular_digraph", {3, true}},
      {"bidirected_complete", {1, false}},
      {"directed_cycle", {1, false}},
  };
  return table;
}

int checked_order(std::uint64_t n, const std::string& what) {
  if (n > kMaxOrder) fail(ErrorKind::BadParameters, what + " is too large");
  return static_cast<int>(n);
}

void check_edges(std::uint64_t m) {
  if (m > kMaxEdges) fail(ErrorKind::BadParameters, "too many edges requested");
}

bool has(const std::vector<Vertex>& list, Vertex v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  const auto it = families().find(spec.name);
  if (it == families().end()) fail(ErrorKind::BadParameters, "unknown family '" + spec.name + "'");
  if (colon != std::string::npos) {
    const std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
      const auto comma = rest.find(',', pos);
      const auto field = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        fail(ErrorKind::BadParameters, "bad parameter '" + field + "' in '" + text + "'");
      }
      spec.args.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (spec.args.size() != it->second.count) {
    fail(ErrorKind::BadParameters, "family '" + spec.name + "' takes " +
                                       std::to_string(it->second.count) + " parameter(s)");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = name;
  for (std::size_t i = 0; i < args.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(args[i]);
  }
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrorKind::BadParameters, "complete graph needs n >= 1");
  check_edges(static_cast<std::uint64_t>(n) * (n - 1) / 2);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) fail(ErrorKind::BadParameters, "both parts need at least one vertex");
  checked_order(static_cast<std::uint64_t>(a) + b, "order");
  check_edges(static_cast<std::uint64_t>(a) * b);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph::from_edges(a + b, edges);
}

Graph heawood_graph() {
  std::vector<Edge> edges;
  for (Vertex line = 0; line < 7; ++line) {
    for (int off : {0, 1, 3}) edges.push_back({(line + off) % 7, 7 + line});
  }
  return Graph::from_edges(14, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, edges);
}

Graph random_regular_graph(int d, int n, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) fail(ErrorKind::BadParameters, "random regular graph needs 0 <= d < n");
  if ((static_cast<std::uint64_t>(d) * n) % 2 != 0) {
    fail(ErrorKind::BadParameters, "d * n must be even");
  }
  check_edges(static_cast<std::uint64_t>(d) * n / 2);
  for (int restart = 0; restart < 1000; ++restart) {
    Rng rng(seed, restart);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Edge> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      // uniform among suitable pairs, by rejection
      stuck = true;
      for (std::size_t tries = 0; tries < 50 * points.size(); ++tries) {
        auto i = rng.below(points.size());
        auto j = rng.below(points.size());
        const Vertex u = points[i];
        const Vertex v = points[j];
        if (u == v || has(adj[u], v)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.push_back({std::min(u, v), std::max(u, v)});
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        stuck = false;
        break;
      }
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  fail(ErrorKind::GenerationFailed, "pairing model: 1000 restarts without a simple graph");
}

Graph random_cubic_graph(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) fail(ErrorKind::BadParameters, "cubic graphs need an even n >= 4");
  return random_regular_graph(3, n, seed);
}

Digraph regular_tournament(int n) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::BadParameters, "regular tournaments need an odd order");
  check_edges(static_cast<std::uint64_t>(n) * (n - 1) / 2);
  std::vector<Edge> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) arcs.push_back({i, (i + j) % n});
  return Digraph::from_arcs(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::BadParameters, "tournament needs n >= 1");
  check_edges(static_cast<std::uint64_t>(n) * (n - 1) / 2);
  Rng rng(seed);
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back(rng.coin() ? Edge{u, v} : Edge{v, u});
  return Digraph::from_arcs(n, arcs);
}

Digraph random_regular_digraph(int r, int n, std::uint64_t seed) {
  if (n < 1 || r < 0 || r >= n) fail(ErrorKind::BadParameters, "regular digraph needs 0 <= r < n");
  check_edges(static_cast<std::uint64_t>(r) * n);
  Rng rng(seed);
  std::vector<std::vector<Vertex>> out(n);
  std::vector<Vertex> p(n);
  for (int layer = 0; layer < r; ++layer) {
    auto bad = [&](Vertex v) { return p[v] == v || has(out[v], p[v]); };
    bool done = false;
    for (int restart = 0; restart < 1000 && !done; ++restart) {
      std::iota(p.begin(), p.end(), 0);
      rng.shuffle(std::span<Vertex>(p));
      std::uint64_t swaps = 0;
      const std::uint64_t swap_budget = 100ull * n;
      done = true;
      for (Vertex v = 0; v < n && done; ++v) {
        while (bad(v)) {
          if (++swaps > swap_budget) {
            done = false;
            break;
          }
          const auto w = static_cast<Vertex>(rng.below(n));
          if (w == v) continue;
          std::swap(p[v], p[w]);
          // w may only become bad if it was scanned already
          if (w < v && bad(w)) std::swap(p[v], p[w]);
        }
      }
    }
    if (!done) fail(ErrorKind::GenerationFailed, "permutation repair did not converge");
    for (Vertex v = 0; v < n; ++v) out[v].push_back(p[v]);
  }
  std::vector<Edge> arcs;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : out[v]) arcs.push_back({v, w});
  return Digraph::from_arcs(n, arcs);
}

Digraph bidirected_complete(int n) {
  if (n < 1) fail(ErrorKind::BadParameters, "bidirected complete digraph needs n >= 1");
  check_edges(static_cast<std::uint64_t>(n) * (n - 1));
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph::from_arcs(n, arcs);
}

Digraph directed_cycle(int n) {
  if (n < 2) fail(ErrorKind::BadParameters, "directed cycle needs n >= 2");
  checked_order(n, "order");
  std::vector<Edge> arcs;
  for (Vertex i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph::from_arcs(n, arcs);
}

AnyGraph generate(const FamilySpec& spec) {
  const auto it = families().find(spec.name);
  if (it == families().end() || spec.args.size() != it->second.count) {
    fail(ErrorKind::BadParameters, "invalid family spec '" + spec.to_string() + "'");
  }
  const auto& a = spec.args;
  auto num = [&](std::size_t i) { return checked_order(a[i], "parameter"); };
  const std::string& f = spec.name;
  if (f == "complete") return complete_graph(num(0));
  if (f == "complete_bipartite") return complete_bipartite_graph(num(0), num(1));
  if (f == "heawood") return heawood_graph();
  if (f == "petersen") return petersen_graph();
  if (f == "random_cubic") return random_cubic_graph(num(0), a[1]);
  if (f == "random_regular") return random_regular_graph(num(0), num(1), a[2]);
  if (f == "regular_tournament") return regular_tournament(num(0));
  if (f == "random_tournament") return random_tournament(num(0), a[1]);
  if (f == "random_regular_digraph") return random_regular_digraph(num(0), num(1), a[2]);
  if (f == "bidirected_complete") return bidirected_complete(num(0));
  return directed_cycle(num(0));
}

// ---- claims ----

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::FTight: return "F_TIGHT";
    case ClaimId::GTight: return "G_TIGHT";
    case ClaimId::HTight: return "H_TIGHT";
    case ClaimId::LargeOrderSharp: return "LARGEORDER_SHARP";
    case ClaimId::HeawoodSharp: return "HEAWOOD_SHARP";
    case ClaimId::TournamentLb: return "TOURNAMENT_LB";
  }
  return "?";
}

std::vector<ClaimId> all_claims() {
  return {ClaimId::FTight,       ClaimId::GTight,       ClaimId::HTight,
          ClaimId::LargeOrderSharp, ClaimId::HeawoodSharp, ClaimId::TournamentLb};
}

ClaimId parse_claim(const std::string& text) {
  for (auto id : all_claims()) {
    if (to_string(id) == text) return id;
  }
  fail(ErrorKind::BadParameters, "unknown claim '" + text + "'");
}

namespace {

template <typename G>
bool valid_packing(const G& g, const CyclePacking& p) {
  std::set<Vertex> seen;
  std::set<std::size_t> lengths;
  for (const auto& c : p.cycles) {
    if (!c.valid_in(g) || !lengths.insert(c.length()).second) return false;
    for (Vertex v : c.vertices()) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::vector<int> arithmetic(int first, int step, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(first + i * step);
  return out;
}

class Transcript {
public:
  explicit Transcript(ClaimReport& report) : r_(report) {}

  template <typename G>
  void absent(const std::string& what, const G& g, int k, const Profile& profile) {
    const auto res = exact_packing_oracle(g, k, profile);
    const bool ok = !res.found && res.exhaustive;
    line(ok, "oracle(" + what + ", k=" + std::to_string(k) + ", " + profile.to_string() + ") = " +
                 (res.found ? "Found " + join(res.packing->lengths()) : std::string("ProvedAbsent")) +
                 ", explored " + std::to_string(res.explored) +
                 (res.exhaustive ? ", exhaustive" : "") + "; expected ProvedAbsent");
  }

  // `expected` empty: any valid packing of k cycles will do
  template <typename G, typename Fn>
  void found(const std::string& what, const G& g, int k, const std::vector<int>& expected, Fn&& finder) {
    std::string verdict;
    bool ok = false;
    try {
      const auto p = finder();
      verdict = "Found " + join(p.lengths()) + " via " + dcycles::to_string(p.finder);
      ok = static_cast<int>(p.cycles.size()) == k && valid_packing(g, p) &&
           (expected.empty() || p.lengths() == expected);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      verdict = "NotFound";
    }
    line(ok, what + " = " + verdict + "; expected " +
                 (expected.empty() ? std::string("a valid packing") : "Found " + join(expected)));
  }

private:
  void line(bool ok, const std::string& text) {
    r_.transcript.push_back((ok ? "ok   " : "FAIL ") + text);
    if (!ok) r_.pass = false;
  }

  ClaimReport& r_;
};

}  // namespace

ClaimReport tightness_check(ClaimId id, const ClaimOptions& options) {
  const int k = options.k;
  if (k < 1 || k > 6) fail(ErrorKind::BadParameters, "claims are checked for 1 <= k <= 6");
  ClaimReport report;
  report.id = id;
  report.k = k;
  report.pass = true;
  Transcript t(report);
  const auto K = [](int n) { return "K" + std::to_string(n); };
  const auto Kab = [](int a, int b) {
    return "K(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  switch (id) {
    case ClaimId::FTight: {
      const int f = f_bound(k);
      t.absent(K(f), complete_graph(f), k, Profile::plain());
      const auto g = complete_graph(f + 1);
      t.found("find(" + K(f + 1) + ", k=" + std::to_string(k) + ")", g, k, arithmetic(3, 1, k),
              [&] { return find_disjoint_distinct(g, k); });
      break;
    }
    case ClaimId::GTight: {
      const int gk = g_bound(k);
      t.absent(Kab(gk - 1, gk - 1), complete_bipartite_graph(gk - 1, gk - 1), k, Profile::plain());
      const auto g = complete_bipartite_graph(gk, gk);
      t.found("find_trianglefree(" + Kab(gk, gk) + ", k=" + std::to_string(k) + ")", g, k,
              arithmetic(4, 2, k), [&] { return find_disjoint_distinct_trianglefree(g, k); });
      break;
    }
    case ClaimId::HTight: {
      const int h = h_bound(k);
      t.absent(K(h), complete_graph(h), k, Profile::even());
      const auto g = complete_graph(h + 1);
      t.found("find_even(" + K(h + 1) + ", k=" + std::to_string(k) + ")", g, k, arithmetic(4, 2, k),
              [&] { return find_disjoint_even_distinct(g, k); });
      break;
    }
    case ClaimId::LargeOrderSharp: {
      // the small side has g(k)-1 vertices; k bipartite cycles of distinct
      // lengths use at least 2+3+...+(k+1) = g(k) of them
      const int small = g_bound(k) - 1;
      const int n = options.n.value_or(small + 10);
      if (n < 2 * small) fail(ErrorKind::BadParameters, "n must be at least 2(g(k)-1)");
      const auto g = complete_bipartite_graph(small, n - small);
      report.transcript.push_back("     instance " + Kab(small, n - small) + ", min degree " +
                                  std::to_string(g.min_degree()));
      t.absent(Kab(small, n - small), g, k, Profile::plain());
      break;
    }
    case ClaimId::HeawoodSharp: {
      report.k = 2;
      t.absent("heawood", heawood_graph(), 2, Profile::plain());
      break;
    }
    case ClaimId::TournamentLb: {
      // a regular tournament on 2d+1 < 3+4+...+(k+2) vertices has no packing
      const int total = (k + 2) * (k + 3) / 2 - 3;
      const int d = (total - 2) / 2;
      const int n_small = 2 * d + 1;
      t.absent("RT" + std::to_string(n_small), regular_tournament(n_small), k, Profile::plain());
      const int n_big = 2 * tournament_degree_bound(k) + 1;
      const auto big = regular_tournament(n_big);
      t.found("tournament_disjoint_distinct(RT" + std::to_string(n_big) + ", k=" + std::to_string(k) + ")",
              big, k, {}, [&] { return tournament_disjoint_distinct(big, k); });
      break;
    }
  }
  return report;
}

}  // namespace dcycles
