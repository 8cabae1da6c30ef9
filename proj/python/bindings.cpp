#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcycles/bounds.hpp"
#include "dcycles/certificate.hpp"
#include "dcycles/dicycles.hpp"
#include "dcycles/edge_list.hpp"
#include "dcycles/error.hpp"
#include "dcycles/extremal.hpp"
#include "dcycles/packing.hpp"
#include "dcycles/partition.hpp"
#include "dcycles/schema.hpp"

namespace py = pybind11;
using namespace dcycles;

namespace {

using VertexLists = std::vector<std::vector<Vertex>>;

VertexLists lists(const std::vector<Cycle>& cycles) {
  VertexLists out;
  for (const auto& c : cycles) out.emplace_back(c.vertices().begin(), c.vertices().end());
  return out;
}

py::dict packing_dict(const CyclePacking& p) {
  py::dict d;
  d["cycles"] = lists(p.cycles);
  d["lengths"] = p.lengths();
  d["profile"] = p.profile.to_string();
  d["finder"] = to_string(p.finder);
  return d;
}

CyclePacking packing_from(const py::dict& d, bool directed) {
  CyclePacking p;
  for (auto& vs : d["cycles"].cast<VertexLists>()) {
    p.cycles.push_back(directed ? Cycle::directed(vs) : Cycle::undirected(vs));
  }
  p.profile = Profile::parse(d["profile"].cast<std::string>());
  const auto finder = d["finder"].cast<std::string>();
  p.finder = finder == "oracle" ? Finder::Oracle : finder == "search" ? Finder::Search : Finder::Constructive;
  return p;
}

FinderOptions finder_options(std::uint64_t seed, std::uint64_t budget) {
  FinderOptions o;
  o.seed = seed;
  o.oracle.budget = budget;
  return o;
}

PartitionMode mode_of(const std::string& s) {
  for (auto m : {PartitionMode::Auto, PartitionMode::Stiebitz, PartitionMode::Kaneko, PartitionMode::Diwan}) {
    if (to_string(m) == s) return m;
  }
  fail(ErrorKind::BadParameters, "unknown mode '" + s + "'");
}

py::list verdict_list(const std::vector<Verdict>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::dict d;
    d["name"] = v.name;
    d["lhs"] = v.lhs;
    d["relation"] = v.relation;
    d["rhs"] = v.rhs;
    d["holds"] = v.holds;
    out.append(d);
  }
  return out;
}

py::dict probabilistic_dict(const ProbabilisticResult& r) {
  auto d = packing_dict(r.packing);
  d["classes"] = r.classes;
  d["demands"] = r.demands;
  d["attempts"] = r.attempts;
  return d;
}

constexpr std::uint64_t kBudget = OracleOptions{}.budget;

}  // namespace

PYBIND11_MODULE(_dcycles, m) {
  m.doc() = "Vertex-disjoint cycles of distinct lengths";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      inst.attr("explored") = e.explored();
      inst.attr("exhaustive") = e.exhaustive();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph::from_edges(n, es);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("min_degree", &Graph::min_degree)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (auto e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
             std::vector<Edge> as;
             for (auto [u, v] : arcs) as.push_back({u, v});
             return Digraph::from_arcs(n, as);
           }),
           py::arg("n"), py::arg("arcs"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def("has_arc", &Digraph::has_arc)
      .def("min_out_degree", &Digraph::min_out_degree)
      .def("arcs", [](const Digraph& d) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (auto a : d.arcs()) out.emplace_back(a.u, a.v);
        return out;
      })
      .def("__repr__", [](const Digraph& d) {
        return "<Digraph n=" + std::to_string(d.order()) + " m=" + std::to_string(d.size()) + ">";
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("to_edge_list", py::overload_cast<const AnyGraph&>(&to_edge_list), py::arg("graph"));
  m.def("content_hash", &content_hash, py::arg("graph"));
  m.def("generate", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); },
        py::arg("spec"), "Graph or Digraph for a family spec such as 'complete:7' or 'heawood'.");

  m.def("f_bound", &f_bound);
  m.def("g_bound", &g_bound);
  m.def("h_bound", &h_bound);

  m.def(
      "find_disjoint_distinct",
      [](const Graph& g, int k, std::uint64_t seed, std::uint64_t budget) {
        return packing_dict(find_disjoint_distinct(g, k, finder_options(seed, budget)));
      },
      py::arg("g"), py::arg("k"), py::arg("seed") = 0, py::arg("budget") = kBudget);
  m.def(
      "find_disjoint_distinct_trianglefree",
      [](const Graph& g, int k, std::uint64_t seed, std::uint64_t budget) {
        return packing_dict(find_disjoint_distinct_trianglefree(g, k, finder_options(seed, budget)));
      },
      py::arg("g"), py::arg("k"), py::arg("seed") = 0, py::arg("budget") = kBudget);
  m.def(
      "find_disjoint_even_distinct",
      [](const Graph& g, int k, std::uint64_t seed, std::uint64_t budget) {
        return packing_dict(find_disjoint_even_distinct(g, k, finder_options(seed, budget)));
      },
      py::arg("g"), py::arg("k"), py::arg("seed") = 0, py::arg("budget") = kBudget);
  m.def(
      "find_disjoint_divisible",
      [](const Graph& g, int k, int r, std::uint64_t seed, std::uint64_t budget) {
        return packing_dict(find_disjoint_divisible(g, k, r, finder_options(seed, budget)));
      },
      py::arg("g"), py::arg("k"), py::arg("r"), py::arg("seed") = 0, py::arg("budget") = kBudget);
  m.def(
      "find_residue_system",
      [](const Graph& g, int r, std::uint64_t seed, std::uint64_t budget) {
        return packing_dict(find_residue_system(g, r, finder_options(seed, budget)));
      },
      py::arg("g"), py::arg("r"), py::arg("seed") = 0, py::arg("budget") = kBudget);
  m.def(
      "find_two_distinct",
      [](const Graph& g, std::uint64_t budget) {
        return packing_dict(find_two_distinct(g, finder_options(0, budget)));
      },
      py::arg("g"), py::arg("budget") = kBudget);

  m.def(
      "exact_packing_oracle",
      [](const AnyGraph& g, int k, const std::string& profile, std::uint64_t budget) {
        OracleOptions o;
        o.budget = budget;
        const auto p = Profile::parse(profile);
        const auto r = std::visit([&](const auto& x) { return exact_packing_oracle(x, k, p, o); }, g);
        py::dict d;
        d["found"] = r.found;
        d["packing"] = r.packing ? py::object(packing_dict(*r.packing)) : py::none();
        d["explored"] = r.explored;
        d["exhaustive"] = r.exhaustive;
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("profile") = "plain", py::arg("budget") = kBudget);

  m.def(
      "uniform_cycle_structure",
      [](const Graph& g) {
        const auto s = uniform_cycle_structure(g);
        py::dict d;
        d["kind"] = to_string(s.kind);
        d["n2"] = s.n2;
        d["bound"] = s.bound;
        d["applies"] = s.applies;
        d["holds"] = s.holds;
        return d;
      },
      py::arg("g"));

  m.def(
      "degree_partition",
      [](const Graph& g, int s, int t, const std::string& mode, std::uint64_t seed) {
        PartitionOptions o;
        o.seed = seed;
        return degree_partition(g, s, t, mode_of(mode), o).classes;
      },
      py::arg("g"), py::arg("s"), py::arg("t"), py::arg("mode") = "auto", py::arg("seed") = 0);
  m.def(
      "multiway_degree_partition",
      [](const Graph& g, const std::vector<int>& demands, std::uint64_t seed) {
        PartitionOptions o;
        o.seed = seed;
        return multiway_degree_partition(g, demands, o).classes;
      },
      py::arg("g"), py::arg("demands"), py::arg("seed") = 0);

  m.def(
      "optimize_schema",
      [](const Graph& g, int k, int exact_threshold) {
        const auto s = optimize_schema(g, k, exact_threshold);
        py::dict d;
        d["apex"] = s.schema.apex;
        d["path"] = s.schema.path;
        d["cardinality"] = s.schema.cardinality();
        d["exact"] = s.exactness == Exactness::Exact;
        d["cycles"] = lists(schema_cycles(g, s.schema));
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("exact_threshold") = kDefaultSchemaExactThreshold);

  m.def("camion_hamiltonian", [](const Digraph& t) {
    const auto c = camion_hamiltonian(t);
    return std::vector<Vertex>(c.vertices().begin(), c.vertices().end());
  });
  m.def("tournament_long_cycle", [](const Digraph& t) {
    const auto c = tournament_long_cycle(t);
    return std::vector<Vertex>(c.vertices().begin(), c.vertices().end());
  });
  m.def(
      "tournament_disjoint_distinct",
      [](const Digraph& t, int k) { return packing_dict(tournament_disjoint_distinct(t, k)); },
      py::arg("t"), py::arg("k"));
  m.def(
      "dipath_distinct_cycles",
      [](const Digraph& d, int k) {
        const auto f = dipath_distinct_cycles(d, k);
        py::dict out;
        out["cycles"] = lists(f.cycles);
        out["hub"] = f.hub;
        return out;
      },
      py::arg("d"), py::arg("k"));
  m.def("regular_degree_threshold", &regular_degree_threshold, py::arg("k"));
  m.def(
      "regular_partition_finder",
      [](const Digraph& d, int k, std::uint64_t seed, int retries, bool force) {
        return probabilistic_dict(regular_partition_finder(d, k, {seed, retries, force}));
      },
      py::arg("d"), py::arg("k"), py::arg("seed") = 0, py::arg("retries") = 1000, py::arg("force") = false);
  m.def(
      "uniform_partition_finder",
      [](const Digraph& d, int k, std::uint64_t seed, int retries) {
        return probabilistic_dict(uniform_partition_finder(d, k, {seed, retries, false}));
      },
      py::arg("d"), py::arg("k"), py::arg("seed") = 0, py::arg("retries") = 1000);

  m.def(
      "probabilistic_bounds_report",
      [](int k, std::optional<double> r, std::optional<double> n, double c, double dd) {
        const auto rep = probabilistic_bounds_report({k, r, n, c, dd});
        py::dict d;
        d["k"] = rep.k;
        d["r"] = rep.r;
        d["threshold"] = rep.threshold;
        d["q"] = rep.q;
        d["p"] = rep.p;
        d["p_sum"] = rep.p_sum;
        d["regular"] = verdict_list(rep.regular);
        d["regular_all_hold"] = rep.regular_all_hold();
        d["c0"] = rep.c0;
        d["required_r"] = rep.required_r;
        d["small"] = verdict_list(rep.small);
        d["small_all_hold"] = rep.small_all_hold();
        return d;
      },
      py::arg("k"), py::arg("r") = py::none(), py::arg("n") = py::none(), py::arg("c") = 2.0,
      py::arg("d") = 0.5);
  m.def("smallest_k_all_regular_verdicts", &smallest_k_all_regular_verdicts, py::arg("k_max"));

  m.def(
      "tightness_check",
      [](const std::string& claim, int k, std::optional<int> n) {
        const auto rep = tightness_check(parse_claim(claim), {k, n});
        return py::make_tuple(rep.pass, rep.transcript);
      },
      py::arg("claim"), py::arg("k") = 2, py::arg("n") = py::none());
  m.def("claims", [] {
    std::vector<std::string> out;
    for (auto id : all_claims()) out.push_back(to_string(id));
    return out;
  });

  m.def(
      "packing_certificate",
      [](const AnyGraph& g, const py::dict& packing, int k) {
        return to_json(packing_certificate(g, packing_from(packing, std::holds_alternative<Digraph>(g)), k));
      },
      py::arg("g"), py::arg("packing"), py::arg("k"), "Certificate JSON for a packing dict.");
  m.def(
      "certificate_violations",
      [](const std::string& cert, const AnyGraph& g) {
        return certificate_violations(parse_certificate(cert), g);
      },
      py::arg("certificate"), py::arg("g"));
}
