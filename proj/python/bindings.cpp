#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "paretoapx/bi_engine.hpp"
#include "paretoapx/bsp.hpp"
#include "paretoapx/cli.hpp"
#include "paretoapx/dual_k.hpp"
#include "paretoapx/errors.hpp"
#include "paretoapx/generators.hpp"
#include "paretoapx/multi_grid.hpp"

namespace py = pybind11;
using namespace paretoapx;

namespace {

// Rationals cross the boundary as "a/b" strings; the Python layer maps them to Fraction.
using RawPoint = std::vector<std::string>;
using RawPoints = std::vector<RawPoint>;
using RawEdge = std::tuple<std::size_t, std::size_t, std::string, std::string>;

PointSet to_points(const RawPoints& raw, std::size_t dim) {
  PointSet P(dim);
  for (const auto& r : raw) {
    std::vector<Rat> c;
    for (const auto& s : r) c.push_back(Rat::parse(s));
    P.push_back(Point(std::move(c)));
  }
  return P;
}

RawPoints from_points(const PointSet& P) {
  RawPoints out;
  for (const auto& p : P) {
    RawPoint r;
    for (const auto& c : p.coords()) r.push_back(c.str());
    out.push_back(std::move(r));
  }
  return out;
}

BiGraph to_graph(std::size_t n, std::size_t s, std::size_t t, const std::vector<RawEdge>& edges) {
  BiGraph G;
  G.node_count = n;
  G.source = s;
  G.sink = t;
  for (const auto& [u, v, c, d] : edges) G.edges.push_back({u, v, Rat::parse(c), Rat::parse(d)});
  G.validate();
  return G;
}

py::tuple from_graph(const BiGraph& G) {
  std::vector<RawEdge> edges;
  for (const auto& e : G.edges) edges.emplace_back(e.from, e.to, e.cost.str(), e.delay.str());
  return py::make_tuple(G.node_count, G.source, G.sink, edges);
}

py::dict engine_dict(EngineReport& rep, const PointSet& solutions, const Rat& eps) {
  certify(rep, solutions, eps);
  py::dict d;
  d["points"] = from_points(rep.result);
  d["witnesses"] = rep.witnesses;
  d["certified"] = rep.certificate.has_value();
  d["calls"] = rep.oracle_calls.total();
  return d;
}

}  // namespace

PYBIND11_MODULE(_paretoapx, m) {
  m.doc() = "Exact-rational approximate Pareto sets";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded");
  py::register_exception<ContractViolation>(m, "ContractViolation");
  py::register_exception<Unsupported>(m, "Unsupported");

  m.def("pareto_filter", [](const RawPoints& P, std::size_t dim) { return from_points(pareto_filter(to_points(P, dim))); });

  m.def("is_eps_pareto", [](const RawPoints& Q, const RawPoints& P, const std::string& eps, std::size_t dim) {
    return is_eps_pareto(to_points(Q, dim), to_points(P, dim), Rat::parse(eps)).has_value();
  });

  m.def("opt_eps", [](const RawPoints& P, const std::string& eps, std::size_t dim) {
    return opt_eps_exact(to_points(P, dim), Rat::parse(eps));
  });

  m.def("two_approx", [](const RawPoints& raw, const std::string& eps_s) {
    const PointSet P = to_points(raw, 2);
    const Rat eps = Rat::parse(eps_s);
    auto o = exact_oracle_from_points(P);
    auto rep = two_approx(*o.restrict_y, *o.dual, eps);
    return engine_dict(rep, P, eps);
  });

  m.def("greedy_exact", [](const RawPoints& raw, const std::string& eps_s) {
    const PointSet P = to_points(raw, 2);
    const Rat eps = Rat::parse(eps_s);
    auto o = exact_oracle_from_points(P);
    auto rep = greedy_exact(*o.restrict_y, *o.dual, eps);
    return engine_dict(rep, P, eps);
  });

  m.def("eps_prime_pareto", [](const RawPoints& raw, std::size_t dim, const std::string& eps, const std::string& eps_prime) {
    const PointSet P = to_points(raw, dim);
    ExplicitOracle g(P);
    const auto rep = eps_prime_pareto(g, Rat::parse(eps), Rat::parse(eps_prime));
    py::dict d;
    d["points"] = from_points(rep.result);
    d["grid_set_size"] = rep.grid_set.size();
    d["calls"] = rep.oracle_calls.total();
    d["certified"] = is_eps_pareto(rep.result, P, Rat::parse(eps_prime)).has_value();
    return d;
  });

  m.def("dual_k", [](const RawPoints& raw, std::size_t dim, std::size_t k) {
    const auto r = dual_k_explicit(to_points(raw, dim), k);
    py::dict d;
    d["points"] = from_points(r.chosen);
    d["indices"] = r.chosen_indices;
    d["ratio"] = r.achieved_ratio.str();
    d["honest_exponent"] = r.honest_exponent;
    return d;
  });

  m.def("bsp_two_approx", [](std::size_t n, std::size_t s, std::size_t t, const std::vector<RawEdge>& edges,
                             const std::string& eps_s, bool exact) {
    const BiGraph G = to_graph(n, s, t, edges);
    const Rat eps = Rat::parse(eps_s);
    auto rep = bsp_two_approx(G, eps, exact ? BspMode::kExact : BspMode::kFptas);
    return engine_dict(rep, enumerate_paths(G).points, eps);
  });

  m.def("enumerate_paths", [](std::size_t n, std::size_t s, std::size_t t, const std::vector<RawEdge>& edges) {
    return from_points(enumerate_paths(to_graph(n, s, t, edges)).points);
  });

  m.def("chain_instance", [](const std::vector<long>& A, const std::string& eps, std::size_t k) {
    return from_graph(chain_instance({A, Rat::parse(eps), k}));
  });
  m.def("cluster_instance", [](const std::vector<long>& A, const std::string& eps, std::size_t k) {
    return from_graph(cluster_instance({A, Rat::parse(eps), k}));
  });
  m.def("random_points", [](std::size_t n, std::size_t d, std::uint64_t seed, int bits) {
    return from_points(random_points(n, d, seed, bits));
  });

  m.def("run_cli", [](const std::string& command, const py::dict& opts) {
    static const std::vector<std::pair<std::string, Command>> names{
        {"pareto2", Command::kPareto2}, {"greedy", Command::kGreedy}, {"multi", Command::kMulti},
        {"dual", Command::kDual},       {"gen", Command::kGen},       {"verify", Command::kVerify},
        {"plotdata", Command::kPlotdata}};
    RunConfig c;
    bool known = false;
    for (const auto& [n, cmd] : names) {
      if (n == command) {
        c.command = cmd;
        known = true;
      }
    }
    if (!known) throw std::invalid_argument("unknown command '" + command + "'");
    for (const auto& [key, value] : opts) {
      const std::string k = py::str(key);
      if (k == "instance") c.instance = py::str(value);
      else if (k == "eps") c.eps = Rat::parse(std::string(py::str(value)));
      else if (k == "eps_prime") c.eps_prime = Rat::parse(std::string(py::str(value)));
      else if (k == "delta") c.delta = Rat::parse(std::string(py::str(value)));
      else if (k == "k") c.k = value.cast<std::size_t>();
      else if (k == "family") c.family = py::str(value);
      else if (k == "A") c.A = value.cast<std::vector<long>>();
      else if (k == "against_bruteforce") c.against_bruteforce = value.cast<bool>();
      else if (k == "seed") c.seed = value.cast<std::uint64_t>();
      else throw std::invalid_argument("unknown option '" + k + "'");
    }
    std::ostringstream out, err;
    const int code = run(c, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
