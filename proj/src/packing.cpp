#include "dcycles/packing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "cycle_search.hpp"
#include "dcycles/error.hpp"
#include "dcycles/partition.hpp"

namespace dcycles {

std::string Profile::to_string() const {
  switch (kind) {
    case ProfileKind::Plain: return "plain";
    case ProfileKind::EvenOnly: return "even";
    case ProfileKind::DivisibleBy: return "div:" + std::to_string(r);
    case ProfileKind::ResidueSystem: return "residues:" + std::to_string(r);
  }
  return "?";
}

Profile Profile::parse(const std::string& text) {
  if (text == "plain") return plain();
  if (text == "even") return even();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    const bool digits = !tail.empty() && tail.size() <= 6 &&
                        std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits && head == "div") return divisible(std::stoi(tail));
    if (digits && head == "residues") return residues(std::stoi(tail));
  }
  fail(ErrorKind::BadParameters, "unknown profile '" + text + "'");
}

std::string to_string(Finder finder) {
  switch (finder) {
    case Finder::Constructive: return "constructive";
    case Finder::Oracle: return "oracle";
    case Finder::Search: return "search";
  }
  return "?";
}

std::vector<int> CyclePacking::lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.length()));
  return out;
}

int f_bound(int k) { return (k * k + 5 * k - 2) / 2; }
int g_bound(int k) { return k * (k + 3) / 2; }
int h_bound(int k) { return k * k + 3 * k - 1; }

int divisible_packing_bound(int k, int r) {
  if (r % 2 == 0) return k * (k + 1) * r - 1;
  if (k % 2 == 1) return (k * k + 2 * k - 1) * r - 1;
  return k * (k + 2) * r - 1;
}

int residue_system_bound(int r) { return 2 * r * r - 1; }

namespace {

using Menu = std::function<std::vector<Cycle>(const Graph&, int)>;

struct Recursion {
  std::function<int(int)> threshold;  // min degree that admits k cycles
  std::function<int(int)> leaf_degree;
  PartitionMode mode;
  Menu menu;  // at least k cycles of pairwise distinct lengths
};

void sort_by_length(std::vector<Cycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
}

// Split off a class that holds k-1 cycles, read a menu of k lengths from the
// other class and keep its shortest length not used yet.
std::vector<Cycle> build(const Graph& g, int k, const Recursion& rec, const FinderOptions& opt) {
  if (k == 1) {
    auto menu = rec.menu(g, 1);
    sort_by_length(menu);
    return {menu.front()};
  }
  PartitionOptions popt;
  popt.seed = opt.seed;
  const auto split = degree_partition(g, rec.threshold(k - 1), rec.leaf_degree(k), rec.mode, popt);

  std::vector<Cycle> cycles;
  const auto first = g.induced(split.classes[0]);
  for (const auto& c : build(first.graph, k - 1, rec, opt)) {
    cycles.push_back(c.relabeled(first.to_parent));
  }
  std::set<std::size_t> used;
  for (const auto& c : cycles) used.insert(c.length());

  const auto second = g.induced(split.classes[1]);
  auto menu = rec.menu(second.graph, k);
  sort_by_length(menu);
  for (const auto& c : menu) {
    if (!used.count(c.length())) {
      cycles.push_back(c.relabeled(second.to_parent));
      sort_by_length(cycles);
      return cycles;
    }
  }
  throw std::logic_error("menu without a fresh length");
}

[[noreturn]] void not_found(const OracleResult& r, const std::string& what) {
  throw Error(ErrorKind::NotFound, "NotFound: the oracle proved that " + what + " does not exist")
      .with_search(r.explored, r.exhaustive);
}

CyclePacking run_finder(const Graph& g, int k, const Profile& profile, const Recursion& rec,
                        const FinderOptions& opt) {
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  const int need = rec.threshold(k);
  if (g.order() > 0 && g.min_degree() >= need) {
    CyclePacking p;
    p.cycles = build(g, k, rec, opt);
    p.profile = profile;
    p.finder = Finder::Constructive;
    return p;
  }
  if (g.order() > kOracleMaxOrder) {
    fail(ErrorKind::DegreeTooLow, "min degree " + std::to_string(g.min_degree()) + " < " +
                                      std::to_string(need) + " and the graph is too large for the oracle");
  }
  auto r = exact_packing_oracle(g, k, profile, opt.oracle);
  if (!r.found) not_found(r, "a " + profile.to_string() + " packing of " + std::to_string(k) + " cycles");
  return std::move(*r.packing);
}

}  // namespace

CyclePacking find_disjoint_distinct(const Graph& g, int k, const FinderOptions& options) {
  const Recursion rec{f_bound, [](int j) { return j + 1; }, PartitionMode::Stiebitz,
                      [](const Graph& h, int j) { return maximal_path_cycles(h, j).cycles; }};
  return run_finder(g, k, Profile::plain(), rec, options);
}

CyclePacking find_disjoint_distinct_trianglefree(const Graph& g, int k,
                                                 const FinderOptions& options) {
  if (!is_triangle_free(g)) fail(ErrorKind::NotTriangleFree, "the graph contains a triangle");
  const Recursion rec{g_bound, [](int j) { return j + 1; }, PartitionMode::Kaneko,
                      [](const Graph& h, int j) { return maximal_path_cycles(h, j).cycles; }};
  return run_finder(g, k, Profile::plain(), rec, options);
}

CyclePacking find_disjoint_even_distinct(const Graph& g, int k, const FinderOptions& options) {
  const Recursion rec{h_bound, [](int j) { return 2 * j + 1; }, PartitionMode::Stiebitz,
                      [](const Graph& h, int j) { return even_distinct_cycles(h, j).cycles; }};
  return run_finder(g, k, Profile::even(), rec, options);
}

CyclePacking find_disjoint_divisible(const Graph& g, int k, int r, const FinderOptions& options) {
  if (r < 2) fail(ErrorKind::BadParameters, "r must be at least 2");
  const auto budget = options.residue_budget;
  const Recursion rec{[r](int j) { return divisible_packing_bound(j, r); },
                      [r](int j) { return divisible_degree_bound(j, r); }, PartitionMode::Stiebitz,
                      [r, budget](const Graph& h, int j) {
                        return divisible_distinct_cycles(h, j, r, budget);
                      }};
  return run_finder(g, k, Profile::divisible(r), rec, options);
}

CyclePacking find_residue_system(const Graph& g, int r, const FinderOptions& options) {
  if (r < 3 || r % 2 == 0) fail(ErrorKind::BadParameters, "r must be odd and at least 3");
  const auto profile = Profile::residues(r);
  const int need = residue_system_bound(r);
  if (g.order() > 0 && g.min_degree() >= need) {
    PartitionOptions popt;
    popt.seed = options.seed;
    const auto parts = multiway_degree_partition(g, std::vector<int>(r, 2 * r - 1), popt);
    CyclePacking p;
    p.profile = profile;
    for (int i = 0; i < r; ++i) {
      const auto sub = g.induced(parts.classes[i]);
      auto search = residue_cycle(sub.graph, i, r, options.residue_budget);
      if (search.status != ResidueStatus::Found) {
        throw Error(ErrorKind::SearchExhausted, "SearchExhausted: no cycle of length " +
                                                    std::to_string(i) + " mod " + std::to_string(r) +
                                                    " in class " + std::to_string(i))
            .with_search(search.expansions, search.completed);
      }
      p.cycles.push_back(search.cycle->relabeled(sub.to_parent));
    }
    return p;
  }
  if (g.order() > kOracleMaxOrder) {
    fail(ErrorKind::DegreeTooLow, "min degree " + std::to_string(g.min_degree()) + " < " +
                                      std::to_string(need) + " and the graph is too large for the oracle");
  }
  auto res = exact_packing_oracle(g, r, profile, options.oracle);
  if (!res.found) not_found(res, "a residue system modulo " + std::to_string(r));
  return std::move(*res.packing);
}

CyclePacking find_two_distinct(const Graph& g, const FinderOptions& options) {
  using namespace detail;
  const int n = g.order();
  if (n <= kMaxMaskVertices) {
    const auto mg = MaskGraph::from(g);
    NodeCounter counter;
    counter.budget = 1'000'000;
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    try {
      const Mask all = cycle_core(mg, mg.all());
      // the shorter cycle has length <= (n-1)/2
      for (int len = 3; 2 * len + 1 <= n && second.empty(); ++len) {
        for_each_cycle_of_length(mg, all, len, counter, [&](std::span<const Vertex> c) {
          const Mask rest = cycle_core(mg, all & ~mask_of(c));
          const LengthFilter filter(mg, rest);
          for (int len2 = len + 1; len2 <= popcount(rest); ++len2) {
            if (!filter.may_contain(len2)) continue;
            const bool hit = for_each_cycle_of_length(mg, rest, len2, counter,
                                                      [&](std::span<const Vertex> c2) {
                                                        second.assign(c2.begin(), c2.end());
                                                        return true;
                                                      });
            if (hit) {
              first.assign(c.begin(), c.end());
              return true;
            }
          }
          return false;
        });
      }
      if (second.empty()) {
        throw Error(ErrorKind::NotFound,
                    "NotFound: no two disjoint cycles of different lengths")
            .with_search(counter.nodes, true);
      }
      CyclePacking p;
      p.cycles = {Cycle::undirected(first), Cycle::undirected(second)};
      p.finder = Finder::Search;
      return p;
    } catch (const BudgetHit&) {
      // fall through to the oracle
    }
  }
  auto r = exact_packing_oracle(g, 2, Profile::plain(), options.oracle);
  if (!r.found) not_found(r, "a pair of disjoint cycles of different lengths");
  return std::move(*r.packing);
}

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Acyclic: return "acyclic";
    case StructureKind::AllTriangles: return "all-triangles";
    case StructureKind::AllC4: return "all-c4";
    case StructureKind::OtherOrMixed: return "other-or-mixed";
  }
  return "?";
}

StructureClassification uniform_cycle_structure(const Graph& g) {
  bool cyclic = false;
  bool triangles = true;
  bool c4 = true;
  for (const auto& b : blocks(g)) {
    const auto nv = b.vertices.size();
    const auto ne = b.edges.size();
    if (nv == 2) continue;
    cyclic = true;
    if (!(nv == 3 && ne == 3)) triangles = false;
    bool k2s = false;
    if (nv == 4) {
      k2s = ne == 4;  // a 2-connected graph on 4 vertices with 4 edges is C4
    } else if (nv >= 5) {
      // K(2,s): two hubs, and every edge joins a hub to a non-hub
      const auto s = nv - 2;
      std::vector<int> deg(nv, 0);
      auto index = [&](Vertex v) {
        return std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin();
      };
      for (const auto& e : b.edges) {
        ++deg[index(e.u)];
        ++deg[index(e.v)];
      }
      std::vector<char> hub(nv, 0);
      for (std::size_t i = 0; i < nv; ++i) hub[i] = deg[i] == static_cast<int>(s);
      k2s = ne == 2 * s && std::count(hub.begin(), hub.end(), 1) == 2 &&
            std::all_of(b.edges.begin(), b.edges.end(),
                        [&](const Edge& e) { return hub[index(e.u)] != hub[index(e.v)]; });
    }
    if (!k2s) c4 = false;
  }

  StructureClassification out;
  out.n2 = g.count_of_degree(2);
  const double n = g.order();
  if (!cyclic) {
    out.kind = StructureKind::Acyclic;
  } else if (triangles) {
    out.kind = StructureKind::AllTriangles;
    out.bound = n / 3.0 + 2.0;
  } else if (c4) {
    out.kind = StructureKind::AllC4;
    out.bound = n / 5.0 + 2.0;
  } else {
    out.kind = StructureKind::OtherOrMixed;
  }
  out.applies = g.order() > 0 && g.min_degree() >= 2 &&
                (out.kind == StructureKind::AllTriangles || out.kind == StructureKind::AllC4);
  out.holds = !out.applies || out.n2 >= out.bound;
  return out;
}

}  // namespace dcycles
