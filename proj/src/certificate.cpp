#include "dcycles/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <nlohmann/json.hpp>

#include "dcycles/error.hpp"

namespace dcycles {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "dcycles-certificate/1";

std::vector<std::vector<Vertex>> vertex_lists(const std::vector<Cycle>& cycles) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cycles) out.emplace_back(c.vertices().begin(), c.vertices().end());
  return out;
}

Certificate base(const AnyGraph& g, const std::string& kind, int k) {
  Certificate c;
  c.graph_hash = content_hash(g);
  c.directed = std::holds_alternative<Digraph>(g);
  c.kind = kind;
  c.k = k;
  return c;
}

}  // namespace

std::string to_json(const Certificate& c, int indent) {
  json j;
  j["format"] = kFormat;
  j["graph_hash"] = c.graph_hash;
  j["directed"] = c.directed;
  j["kind"] = c.kind;
  j["result"] = c.kind == "absent" ? "absent" : "found";
  j["profile"] = c.profile;
  j["k"] = c.k;
  j["cycles"] = c.cycles;
  j["finder"] = c.finder;
  j["explored_nodes"] = c.explored_nodes;
  j["exhaustive"] = c.exhaustive;
  if (c.hub) j["hub"] = *c.hub;
  if (c.min_length) j["min_length"] = *c.min_length;
  if (!c.classes.empty() || c.kind == "partition") {
    j["classes"] = c.classes;
    j["demands"] = c.demands;
    j["degree_kind"] = c.degree_kind;
    j["allow_uncovered"] = c.allow_uncovered;
  }
  return j.dump(indent);
}

Certificate parse_certificate(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object() || j.value("format", "") != kFormat) {
      fail(ErrorKind::InvalidInput, "not a " + std::string(kFormat) + " document");
    }
    Certificate c;
    c.graph_hash = j.at("graph_hash").get<std::string>();
    c.directed = j.at("directed").get<bool>();
    c.kind = j.at("kind").get<std::string>();
    c.profile = j.at("profile").get<std::string>();
    c.k = j.at("k").get<int>();
    c.cycles = j.at("cycles").get<std::vector<std::vector<Vertex>>>();
    c.finder = j.at("finder").get<std::string>();
    c.explored_nodes = j.at("explored_nodes").get<std::uint64_t>();
    c.exhaustive = j.at("exhaustive").get<bool>();
    if (j.contains("hub")) c.hub = j.at("hub").get<Vertex>();
    if (j.contains("min_length")) c.min_length = j.at("min_length").get<int>();
    if (j.contains("classes")) {
      c.classes = j.at("classes").get<std::vector<std::vector<Vertex>>>();
      c.demands = j.at("demands").get<std::vector<int>>();
      c.degree_kind = j.at("degree_kind").get<std::string>();
      c.allow_uncovered = j.at("allow_uncovered").get<bool>();
    }
    return c;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed certificate: ") + e.what());
  }
}

Certificate packing_certificate(const AnyGraph& g, const CyclePacking& p, int k) {
  auto c = base(g, "packing", k);
  c.profile = p.profile.to_string();
  c.cycles = vertex_lists(p.cycles);
  c.finder = to_string(p.finder);
  return c;
}

Certificate absent_certificate(const AnyGraph& g, const Profile& profile, int k,
                               std::uint64_t explored, bool exhaustive) {
  auto c = base(g, "absent", k);
  c.profile = profile.to_string();
  c.finder = "oracle";
  c.explored_nodes = explored;
  c.exhaustive = exhaustive;
  return c;
}

Certificate family_certificate(const AnyGraph& g, const CycleFamily& f, int k) {
  auto c = base(g, "family", k);
  c.cycles = vertex_lists(f.cycles);
  c.finder = "constructive";
  c.hub = f.hub;
  return c;
}

Certificate partition_certificate(const AnyGraph& g, const VertexPartition& p) {
  auto c = base(g, "partition", static_cast<int>(p.classes.size()));
  c.finder = "search";
  c.classes = p.classes;
  c.demands = p.guarantees;
  c.degree_kind = p.kind == DegreeKind::Induced ? "induced" : "cross";
  return c;
}

// ---- checker: graph-core adjacency queries only ----

namespace {

struct ProfileRule {
  char kind = 'p';  // p plain, e even, d divisible, r residues
  int r = 0;
};

std::optional<ProfileRule> read_profile(const std::string& s) {
  if (s == "plain") return ProfileRule{'p', 0};
  if (s == "even") return ProfileRule{'e', 0};
  for (auto [prefix, kind] : {std::pair{"div:", 'd'}, std::pair{"residues:", 'r'}}) {
    const std::string pre = prefix;
    if (s.rfind(pre, 0) != 0) continue;
    int r = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pre.size(), s.data() + s.size(), r);
    if (ec == std::errc() && ptr == s.data() + s.size() && r >= 2) return ProfileRule{kind, r};
  }
  return std::nullopt;
}

class Checker {
public:
  Checker(const Certificate& c, const AnyGraph& g) : c_(c), g_(g) {
    n_ = std::visit([](const auto& x) { return x.order(); }, g);
  }

  std::vector<std::string> run() {
    const auto hash = content_hash(g_);
    if (hash != c_.graph_hash) {
      add("graph-hash", "certificate is for " + c_.graph_hash + ", graph hashes to " + hash);
      return out_;
    }
    if (c_.directed != std::holds_alternative<Digraph>(g_)) {
      add("directed", "certificate and graph disagree on directedness");
      return out_;
    }
    if (c_.kind == "packing") {
      packing();
    } else if (c_.kind == "family") {
      family();
    } else if (c_.kind == "partition") {
      partition();
    } else if (c_.kind == "absent") {
      if (!c_.cycles.empty()) add("absent", "an absence certificate lists cycles");
      if (!c_.exhaustive) add("exhaustive", "absence was not established exhaustively");
    } else {
      add("kind", "unknown certificate kind '" + c_.kind + "'");
    }
    return out_;
  }

private:
  void add(const std::string& invariant, const std::string& detail) {
    out_.push_back(invariant + ": " + detail);
  }

  bool linked(Vertex u, Vertex v) const {
    if (const auto* d = std::get_if<Digraph>(&g_)) return d->has_arc(u, v);
    return std::get<Graph>(g_).adjacent(u, v);
  }

  bool in_range(Vertex v) const { return v >= 0 && v < n_; }

  // vertices in range, pairwise distinct, consecutive ones linked
  bool cycle_ok(std::size_t i) {
    const auto& c = c_.cycles[i];
    const std::string name = "cycle " + std::to_string(i);
    const std::size_t shortest = c_.directed ? 2 : 3;
    if (c.size() < shortest) {
      add("cycle-length", name + " has " + std::to_string(c.size()) + " vertices");
      return false;
    }
    std::set<Vertex> seen;
    for (Vertex v : c) {
      if (!in_range(v)) {
        add("vertex-range", name + " uses vertex " + std::to_string(v));
        return false;
      }
      if (!seen.insert(v).second) {
        add("simple-cycle", name + " repeats vertex " + std::to_string(v));
        return false;
      }
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Vertex u = c[j];
      const Vertex v = c[(j + 1) % c.size()];
      if (!linked(u, v)) {
        add(c_.directed ? "arc" : "edge", name + " uses missing " + (c_.directed ? "arc " : "edge ") +
                                              std::to_string(u) + (c_.directed ? "->" : "-") +
                                              std::to_string(v));
        return false;
      }
    }
    return true;
  }

  bool all_cycles_ok() {
    bool ok = true;
    for (std::size_t i = 0; i < c_.cycles.size(); ++i) ok = cycle_ok(i) && ok;
    return ok;
  }

  void distinct_lengths() {
    std::set<std::size_t> lengths;
    for (std::size_t i = 0; i < c_.cycles.size(); ++i) {
      if (!lengths.insert(c_.cycles[i].size()).second) {
        add("distinct-lengths", "length " + std::to_string(c_.cycles[i].size()) + " repeats at cycle " +
                                    std::to_string(i));
      }
    }
  }

  void count() {
    if (static_cast<int>(c_.cycles.size()) != c_.k) {
      add("cycle-count", std::to_string(c_.cycles.size()) + " cycles, k = " + std::to_string(c_.k));
    }
  }

  void min_length() {
    if (!c_.min_length) return;
    for (std::size_t i = 0; i < c_.cycles.size(); ++i) {
      if (static_cast<int>(c_.cycles[i].size()) < *c_.min_length) {
        add("min-length", "cycle " + std::to_string(i) + " has length " +
                              std::to_string(c_.cycles[i].size()) + " < " +
                              std::to_string(*c_.min_length));
      }
    }
  }

  void packing() {
    count();
    const bool cycles_ok = all_cycles_ok();
    std::vector<int> owner(n_, -1);
    if (cycles_ok) {
      for (std::size_t i = 0; i < c_.cycles.size(); ++i) {
        for (Vertex v : c_.cycles[i]) {
          if (owner[v] >= 0) {
            add("disjoint", "vertex " + std::to_string(v) + " is on cycles " +
                                std::to_string(owner[v]) + " and " + std::to_string(i));
          }
          owner[v] = static_cast<int>(i);
        }
      }
    }
    distinct_lengths();
    min_length();
    const auto rule = read_profile(c_.profile);
    if (!rule) {
      add("profile", "unknown profile '" + c_.profile + "'");
    } else {
      for (std::size_t i = 0; i < c_.cycles.size(); ++i) {
        const int len = static_cast<int>(c_.cycles[i].size());
        const std::string at = "cycle " + std::to_string(i) + " has length " + std::to_string(len);
        if (rule->kind == 'e' && len % 2 != 0) add("profile", at + ", not even");
        if (rule->kind == 'd' && len % rule->r != 0) {
          add("profile", at + ", not divisible by " + std::to_string(rule->r));
        }
        if (rule->kind == 'r' && len % rule->r != static_cast<int>(i) % rule->r) {
          add("profile", at + ", not " + std::to_string(i) + " mod " + std::to_string(rule->r));
        }
      }
      if (rule->kind == 'r' && static_cast<int>(c_.cycles.size()) != rule->r) {
        add("profile", "a residue system modulo " + std::to_string(rule->r) + " has " +
                           std::to_string(rule->r) + " cycles");
      }
    }
    if (!c_.classes.empty()) partition();
  }

  void family() {
    count();
    all_cycles_ok();
    distinct_lengths();
    min_length();
    if (!c_.hub) {
      add("hub", "family certificate without a hub");
      return;
    }
    for (std::size_t i = 0; i < c_.cycles.size(); ++i) {
      const auto& c = c_.cycles[i];
      if (std::find(c.begin(), c.end(), *c_.hub) == c.end()) {
        add("hub", "cycle " + std::to_string(i) + " misses hub " + std::to_string(*c_.hub));
      }
    }
  }

  int inside_degree(Vertex v, const std::vector<int>& cls, int mine) const {
    int count = 0;
    if (const auto* d = std::get_if<Digraph>(&g_)) {
      for (Vertex w : d->out_neighbors(v)) count += cls[w] == mine;
    } else {
      for (Vertex w : std::get<Graph>(g_).neighbors(v)) count += cls[w] == mine;
    }
    return count;
  }

  int degree(Vertex v) const {
    if (const auto* d = std::get_if<Digraph>(&g_)) return static_cast<int>(d->out_neighbors(v).size());
    return std::get<Graph>(g_).degree(v);
  }

  void partition() {
    if (c_.classes.size() != c_.demands.size()) {
      add("demands", std::to_string(c_.classes.size()) + " classes but " +
                         std::to_string(c_.demands.size()) + " demands");
      return;
    }
    const bool cross = c_.degree_kind == "cross";
    if (!cross && c_.degree_kind != "induced" && c_.degree_kind != "induced-out") {
      add("degree-kind", "unknown degree kind '" + c_.degree_kind + "'");
      return;
    }
    std::vector<int> cls(n_, -1);
    for (std::size_t i = 0; i < c_.classes.size(); ++i) {
      if (c_.classes[i].empty()) add("nonempty", "class " + std::to_string(i) + " is empty");
      for (Vertex v : c_.classes[i]) {
        if (!in_range(v)) {
          add("vertex-range", "class " + std::to_string(i) + " uses vertex " + std::to_string(v));
          return;
        }
        if (cls[v] >= 0) {
          add("classes-disjoint", "vertex " + std::to_string(v) + " is in classes " +
                                      std::to_string(cls[v]) + " and " + std::to_string(i));
        }
        cls[v] = static_cast<int>(i);
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (cls[v] < 0) {
        if (!c_.allow_uncovered) add("cover", "vertex " + std::to_string(v) + " is in no class");
        continue;
      }
      const int inside = inside_degree(v, cls, cls[v]);
      const int have = cross ? degree(v) - inside : inside;
      if (have < c_.demands[cls[v]]) {
        add("degree", "vertex " + std::to_string(v) + " of class " + std::to_string(cls[v]) +
                          " has " + std::to_string(have) + (cross ? " outside" : " inside") +
                          " neighbors, demand " + std::to_string(c_.demands[cls[v]]));
      }
    }
  }

  const Certificate& c_;
  const AnyGraph& g_;
  int n_ = 0;
  std::vector<std::string> out_;
};

}  // namespace

std::vector<std::string> certificate_violations(const Certificate& c, const AnyGraph& g) {
  return Checker(c, g).run();
}

}  // namespace dcycles
