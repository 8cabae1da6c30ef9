#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dcycles/bounds.hpp"
#include "dcycles/certificate.hpp"
#include "dcycles/dicycles.hpp"
#include "dcycles/edge_list.hpp"
#include "dcycles/error.hpp"
#include "dcycles/extremal.hpp"
#include "dcycles/packing.hpp"
#include "dcycles/partition.hpp"
#include "dcycles/schema.hpp"

namespace dcycles::cli {

namespace {

using nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (classify(kind)) {
    case ErrorClass::Usage: return 2;
    case ErrorClass::Negative: return 1;
    case ErrorClass::Precondition: return 3;
    case ErrorClass::Budget: return 4;
  }
  return 2;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph undirected(const AnyGraph& g) {
  if (const auto* u = std::get_if<Graph>(&g)) return *u;
  fail(ErrorKind::InvalidInput, "this command needs an undirected graph ('U' header)");
}

Digraph directed(const AnyGraph& g) {
  if (const auto* d = std::get_if<Digraph>(&g)) return *d;
  fail(ErrorKind::InvalidInput, "this command needs a digraph ('D' header)");
}

PartitionMode parse_mode(const std::string& s) {
  for (auto m : {PartitionMode::Auto, PartitionMode::Stiebitz, PartitionMode::Kaneko, PartitionMode::Diwan}) {
    if (to_string(m) == s) return m;
  }
  fail(ErrorKind::BadParameters, "unknown mode '" + s + "'");
}

json verdicts(const std::vector<Verdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"name", v.name}, {"lhs", v.lhs}, {"relation", v.relation}, {"rhs", v.rhs},
                   {"holds", v.holds}});
  }
  return out;
}

struct Args {
  std::string file;
  std::string output;
  std::string profile = "plain";
  std::optional<int> k;
  std::uint64_t seed = 0;
  std::uint64_t budget = OracleOptions{}.budget;
  bool triangle_free = false;
  bool pair = false;
  std::string spec;
  std::vector<int> demands;
  std::string mode = "auto";
  int exact_threshold = kDefaultSchemaExactThreshold;
  std::string cmd;
  int retries = 1000;
  bool force = false;
  std::optional<double> r, n, c, d;
  std::optional<int> sweep;
  std::string cert;
  std::string claim;
};

int need_k(const Args& a) {
  if (!a.k) fail(ErrorKind::BadParameters, "--k is required");
  return *a.k;
}

int do_gen(const Args& a, std::ostream& out) {
  emit(to_edge_list(generate(FamilySpec::parse(a.spec))), a.output, out);
  return 0;
}

int do_find(const Args& a, std::ostream& out) {
  const AnyGraph any = read_edge_list(a.file);
  const Graph g = undirected(any);
  const Profile profile = Profile::parse(a.profile);
  FinderOptions opt;
  opt.seed = a.seed;
  opt.oracle.budget = a.budget;
  int k = 0;
  try {
    CyclePacking p;
    if (a.pair) {
      if (a.k && *a.k != 2) fail(ErrorKind::BadParameters, "--pair looks for k = 2");
      if (profile.kind != ProfileKind::Plain) fail(ErrorKind::BadParameters, "--pair needs --profile plain");
      k = 2;
      p = find_two_distinct(g, opt);
    } else if (profile.kind == ProfileKind::ResidueSystem) {
      k = profile.r;
      if (a.k && *a.k != k) fail(ErrorKind::BadParameters, "a residue system modulo r has k = r");
      p = find_residue_system(g, profile.r, opt);
    } else {
      k = need_k(a);
      if (a.triangle_free && profile.kind != ProfileKind::Plain) {
        fail(ErrorKind::BadParameters, "--triangle-free goes with --profile plain");
      }
      switch (profile.kind) {
        case ProfileKind::Plain:
          p = a.triangle_free ? find_disjoint_distinct_trianglefree(g, k, opt)
                              : find_disjoint_distinct(g, k, opt);
          break;
        case ProfileKind::EvenOnly: p = find_disjoint_even_distinct(g, k, opt); break;
        default: p = find_disjoint_divisible(g, k, profile.r, opt); break;
      }
    }
    emit(to_json(packing_certificate(any, p, k)) + "\n", a.output, out);
    return 0;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    emit(to_json(absent_certificate(any, profile, k, e.explored(), e.exhaustive())) + "\n", a.output, out);
    return 1;
  }
}

int do_oracle(const Args& a, std::ostream& out) {
  const AnyGraph any = read_edge_list(a.file);
  const Profile profile = Profile::parse(a.profile);
  const int k = profile.kind == ProfileKind::ResidueSystem && !a.k ? profile.r : need_k(a);
  OracleOptions opt;
  opt.budget = a.budget;
  const auto res = std::visit([&](const auto& g) { return exact_packing_oracle(g, k, profile, opt); }, any);
  if (res.found) {
    auto cert = packing_certificate(any, *res.packing, k);
    cert.explored_nodes = res.explored;
    cert.exhaustive = res.exhaustive;
    emit(to_json(cert) + "\n", a.output, out);
    return 0;
  }
  emit(to_json(absent_certificate(any, profile, k, res.explored, res.exhaustive)) + "\n", a.output, out);
  return 1;
}

int do_partition(const Args& a, std::ostream& out) {
  const AnyGraph any = read_edge_list(a.file);
  const Graph g = undirected(any);
  PartitionOptions opt;
  opt.seed = a.seed;
  const auto mode = parse_mode(a.mode);
  VertexPartition p;
  if (a.demands.size() == 2) {
    p = degree_partition(g, a.demands[0], a.demands[1], mode, opt);
  } else if (a.demands.size() > 2) {
    if (mode != PartitionMode::Auto && mode != PartitionMode::Stiebitz) {
      fail(ErrorKind::BadParameters, "more than two classes use stiebitz splits only");
    }
    p = multiway_degree_partition(g, a.demands, opt);
  } else {
    fail(ErrorKind::BadParameters, "--demands needs at least two values");
  }
  emit(to_json(partition_certificate(any, p)) + "\n", a.output, out);
  return 0;
}

int do_schema(const Args& a, std::ostream& out) {
  const Graph g = undirected(read_edge_list(a.file));
  const int k = need_k(a);
  const auto best = optimize_schema(g, k, a.exact_threshold);
  json j;
  j["apex"] = best.schema.apex;
  j["path"] = best.schema.path;
  j["k"] = k;
  j["cardinality"] = best.schema.cardinality();
  j["exactness"] = best.exactness == Exactness::Exact ? "exact" : "best-found";
  j["explored"] = best.explored;
  json cycles = json::array();
  for (const auto& c : schema_cycles(g, best.schema)) {
    cycles.push_back(std::vector<Vertex>(c.vertices().begin(), c.vertices().end()));
  }
  j["cycles"] = cycles;
  if (best.exactness == Exactness::Exact) {
    const auto rep = schema_external_report(g, best);
    j["external"] = {{"max_count", rep.max_count},
                     {"counts_within_bound", rep.counts_within_bound},
                     {"attaining", rep.attaining},
                     {"attaining_adjacent_to_apex", rep.attaining_adjacent_to_apex},
                     {"path_inside_apex_neighborhood", rep.path_inside_apex_neighborhood},
                     {"cardinality_is_minimum", rep.cardinality_is_minimum},
                     {"consistent", rep.consistent}};
  }
  emit(j.dump(2) + "\n", a.output, out);
  return 0;
}

int do_tournament(const Args& a, std::ostream& out) {
  const AnyGraph any = read_edge_list(a.file);
  const Digraph t = directed(any);
  CyclePacking p;
  int k = 1;
  std::optional<int> min_length;
  if (a.cmd == "hamiltonian") {
    p.cycles = {camion_hamiltonian(t)};
    min_length = t.order();
  } else if (a.cmd == "longcycle") {
    p.cycles = {tournament_long_cycle(t)};
    min_length = 2 * t.min_out_degree() + 1;
  } else if (a.cmd == "distinct") {
    k = need_k(a);
    p = tournament_disjoint_distinct(t, k);
  } else {
    fail(ErrorKind::BadParameters, "unknown --cmd '" + a.cmd + "'");
  }
  auto cert = packing_certificate(any, p, k);
  cert.min_length = min_length;
  emit(to_json(cert) + "\n", a.output, out);
  return 0;
}

int do_digraph(const Args& a, std::ostream& out) {
  const AnyGraph any = read_edge_list(a.file);
  const Digraph d = directed(any);
  const int k = need_k(a);
  if (a.cmd == "maxpath") {
    emit(to_json(family_certificate(any, dipath_distinct_cycles(d, k), k)) + "\n", a.output, out);
    return 0;
  }
  ProbabilisticOptions opt;
  opt.seed = a.seed;
  opt.retries = a.retries;
  opt.force = a.force;
  ProbabilisticResult res;
  if (a.cmd == "regular-find") {
    res = regular_partition_finder(d, k, opt);
  } else if (a.cmd == "uniform-find") {
    res = uniform_partition_finder(d, k, opt);
  } else {
    fail(ErrorKind::BadParameters, "unknown --cmd '" + a.cmd + "'");
  }
  auto cert = packing_certificate(any, res.packing, k);
  cert.classes = res.classes;
  cert.demands = res.demands;
  cert.degree_kind = "induced-out";
  cert.allow_uncovered = a.cmd == "regular-find";
  emit(to_json(cert) + "\n", a.output, out);
  return 0;
}

int do_bounds(const Args& a, std::ostream& out) {
  json j;
  if (a.sweep) {
    const auto K = smallest_k_all_regular_verdicts(*a.sweep);
    j["sweep_k_max"] = *a.sweep;
    j["smallest_k_all_regular_verdicts"] = K ? json(*K) : json(nullptr);
  } else {
    ProbabilisticBudget b;
    b.k = need_k(a);
    b.r = a.r;
    b.n = a.n;
    if (a.c) b.c = *a.c;
    if (a.d) b.d = *a.d;
    const auto rep = probabilistic_bounds_report(b);
    j = {{"k", rep.k},
         {"r", rep.r},
         {"threshold", rep.threshold},
         {"q", rep.q},
         {"k_prime", rep.k_prime},
         {"s", rep.s},
         {"p", rep.p},
         {"p_sum", rep.p_sum},
         {"regular", verdicts(rep.regular)},
         {"regular_all_hold", rep.regular_all_hold()},
         {"small_r", rep.small_r},
         {"c0", rep.c0},
         {"required_r", rep.required_r},
         {"small", verdicts(rep.small)},
         {"small_all_hold", rep.small_all_hold()}};
  }
  emit(j.dump(2) + "\n", a.output, out);
  return 0;
}

int do_verify(const Args& a, std::ostream& out) {
  const auto cert = parse_certificate(read_file(a.cert));
  const auto problems = certificate_violations(cert, read_edge_list(a.file));
  if (problems.empty()) {
    out << "valid";
    if (cert.kind == "absent") out << " (absence is the oracle's exhaustive verdict, not re-derived)";
    out << "\n";
    return 0;
  }
  out << "invalid\n";
  for (const auto& p : problems) out << "  " << p << "\n";
  return 1;
}

int do_tightness(const Args& a, std::ostream& out) {
  std::vector<ClaimId> ids;
  if (a.claim == "all") {
    ids = all_claims();
  } else {
    ids = {parse_claim(a.claim)};
  }
  ClaimOptions opt;
  if (a.k) opt.k = *a.k;
  if (a.n) opt.n = static_cast<int>(*a.n);
  bool pass = true;
  for (auto id : ids) {
    const auto rep = tightness_check(id, opt);
    out << to_string(id) << " k=" << rep.k << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& line : rep.transcript) out << "  " << line << "\n";
    pass = pass && rep.pass;
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-disjoint cycles of distinct lengths: finders, oracles and certificates", "dcycles"};
  app.require_subcommand(1);
  Args a;

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("spec", a.spec, "family, e.g. complete:7 or random_cubic:16,3")->required();
  gen->add_option("-o,--output", a.output, "output file (default stdout)");

  auto* find = app.add_subcommand("find", "run the packing finder for a profile");
  find->add_option("--profile", a.profile, "plain | even | div:R | residues:R");
  find->add_option("--k", a.k, "number of cycles");
  find->add_flag("--triangle-free", a.triangle_free, "use the triangle-free recursion");
  find->add_flag("--pair", a.pair, "two cycles of different lengths by direct search");
  find->add_option("--seed", a.seed);
  find->add_option("--budget", a.budget, "oracle node budget");
  find->add_option("-o,--output", a.output);
  find->add_option("file", a.file)->required();

  auto* oracle = app.add_subcommand("oracle", "exact decision by branch and bound");
  oracle->add_option("--profile", a.profile);
  oracle->add_option("--k", a.k);
  oracle->add_option("--budget", a.budget, "search node budget");
  oracle->add_option("-o,--output", a.output);
  oracle->add_option("file", a.file)->required();

  auto* part = app.add_subcommand("partition", "degree-constrained vertex partition");
  part->add_option("--demands", a.demands, "D1,D2[,...]")->delimiter(',')->required();
  part->add_option("--mode", a.mode, "auto | stiebitz | kaneko | diwan");
  part->add_option("--seed", a.seed);
  part->add_option("-o,--output", a.output);
  part->add_option("file", a.file)->required();

  auto* schema = app.add_subcommand("schema", "minimum path-vertex schema");
  schema->add_option("--k", a.k)->required();
  schema->add_option("--exact-threshold", a.exact_threshold);
  schema->add_option("-o,--output", a.output);
  schema->add_option("file", a.file)->required();

  auto* tour = app.add_subcommand("tournament", "tournament cycles");
  tour->add_option("--cmd", a.cmd, "hamiltonian | longcycle | distinct")->required();
  tour->add_option("--k", a.k);
  tour->add_option("-o,--output", a.output);
  tour->add_option("file", a.file)->required();

  auto* dig = app.add_subcommand("digraph", "digraph finders");
  dig->add_option("--cmd", a.cmd, "regular-find | uniform-find | maxpath")->required();
  dig->add_option("--k", a.k)->required();
  dig->add_option("--seed", a.seed);
  dig->add_option("--retries", a.retries);
  dig->add_flag("--force", a.force, "run the regular finder below its degree threshold");
  dig->add_option("-o,--output", a.output);
  dig->add_option("file", a.file)->required();

  auto* bounds = app.add_subcommand("bounds", "numeric report for the probabilistic finders");
  bounds->add_option("--k", a.k);
  bounds->add_option("--r", a.r);
  bounds->add_option("--n", a.n);
  bounds->add_option("--c", a.c);
  bounds->add_option("--d", a.d);
  bounds->add_option("--sweep", a.sweep, "smallest k from which every regular verdict holds, up to K");
  bounds->add_option("-o,--output", a.output);

  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("cert", a.cert)->required();
  verify->add_option("file", a.file)->required();

  auto* tight = app.add_subcommand("tightness", "re-check an extremal claim");
  tight->add_option("--claim", a.claim, "claim id or 'all'")->required();
  tight->add_option("--k", a.k);
  tight->add_option("--n", a.n, "order of the LARGEORDER_SHARP instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return do_gen(a, out);
    if (*find) return do_find(a, out);
    if (*oracle) return do_oracle(a, out);
    if (*part) return do_partition(a, out);
    if (*schema) return do_schema(a, out);
    if (*tour) return do_tournament(a, out);
    if (*dig) return do_digraph(a, out);
    if (*bounds) return do_bounds(a, out);
    if (*verify) return do_verify(a, out);
    if (*tight) return do_tightness(a, out);
  } catch (const Error& e) {
    err << "dcycles: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace dcycles::cli
