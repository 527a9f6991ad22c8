#include "paretoapx/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "paretoapx/bi_engine.hpp"
#include "paretoapx/bsp.hpp"
#include "paretoapx/dual_k.hpp"
#include "paretoapx/errors.hpp"
#include "paretoapx/generators.hpp"
#include "paretoapx/multi_grid.hpp"
#include "paretoapx/text_io.hpp"

namespace paretoapx {

namespace {

using Json = nlohmann::ordered_json;

struct Instance {
  bool graph = false;
  BiGraph G;
  PointSet P;
};

// Every solution point of an instance: the point set itself, or all simple paths.
struct Solutions {
  PointSet points;
  std::vector<Witness> witnesses;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::kPareto2: return "pareto2";
    case Command::kGreedy: return "greedy";
    case Command::kMulti: return "multi";
    case Command::kDual: return "dual";
    case Command::kGen: return "gen";
    case Command::kVerify: return "verify";
    case Command::kPlotdata: return "plotdata";
  }
  return "?";
}

const char* mode_name(OracleMode m) {
  switch (m) {
    case OracleMode::kExact: return "exact";
    case OracleMode::kFptas: return "fptas";
    case OracleMode::kAdversarial: return "adversarial";
  }
  return "?";
}

Rat need(const std::optional<Rat>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("--") + flag + " is required");
  return *v;
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("--") + flag + " is required");
  return *v;
}

Instance load(const RunConfig& c) {
  if (c.instance.empty()) throw std::invalid_argument("an instance path is required");
  Instance in;
  const std::string suffix = ".graph";
  in.graph = c.format == InstanceFormat::kGraph ||
             (c.format == InstanceFormat::kAuto && c.instance.size() >= suffix.size() &&
              c.instance.compare(c.instance.size() - suffix.size(), suffix.size(), suffix) == 0);
  if (in.graph) {
    in.G = read_graph_file(c.instance);
    in.G.validate();
  } else {
    in.P = read_points_file(c.instance);
  }
  return in;
}

std::size_t dim_of(const Instance& in) { return in.graph ? 2 : in.P.dim(); }

void require_2d(const Instance& in, const char* what) {
  if (dim_of(in) != 2) throw std::invalid_argument(std::string(what) + " needs a bi-objective instance");
}

Solutions solutions(const Instance& in) {
  Solutions s;
  if (!in.graph) {
    s.points = in.P;
    for (std::size_t i = 0; i < in.P.size(); ++i) s.witnesses.push_back({i});
    return s;
  }
  auto en = enumerate_paths(in.G);
  s.points = std::move(en.points);
  for (auto& p : en.paths) s.witnesses.push_back(std::move(p.edges));
  return s;
}

std::optional<Solutions> try_solutions(const Instance& in) {
  try {
    return solutions(in);
  } catch (const GuardExceeded&) {
    return std::nullopt;
  }
}

OracleMode resolve_mode(const RunConfig& c, const Instance& in) {
  const OracleMode m = c.oracle.value_or(in.graph ? OracleMode::kFptas : OracleMode::kExact);
  if (in.graph && m == OracleMode::kAdversarial) throw std::invalid_argument("adversarial mode needs a point instance");
  if (!in.graph && m == OracleMode::kFptas) throw std::invalid_argument("fptas mode needs a graph instance");
  return m;
}

OracleSet oracles_for(const Instance& in, OracleMode m, const Rat& adversary_delta) {
  if (in.graph) return bsp_oracles(in.G, m == OracleMode::kExact ? BspMode::kExact : BspMode::kFptas);
  if (m == OracleMode::kAdversarial) return adversarial_wrapper(in.P, adversary_delta, {});
  return exact_oracle_from_points(in.P);
}

// Solution ids of the given points: same witness and value first, then same value.
std::vector<std::size_t> ids_of(const Solutions& s, const PointSet& pts, const std::vector<Witness>& wit) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < s.points.size() && !hit; ++j) {
      if (i < wit.size() && s.witnesses[j] == wit[i] && s.points[j] == pts[i]) hit = j;
    }
    for (std::size_t j = 0; j < s.points.size() && !hit; ++j) {
      if (s.points[j] == pts[i]) hit = j;
    }
    if (hit) ids.push_back(*hit);
  }
  return ids;
}

Json rat(const Rat& r) { return r.str(); }

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(c.str());
  return a;
}

Json chosen_json(const PointSet& pts, const std::vector<Witness>& wit) {
  Json a = Json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Json e;
    e["point"] = point_json(pts[i]);
    e["witness"] = i < wit.size() ? Json(wit[i]) : Json(nullptr);
    a.push_back(e);
  }
  return a;
}

Json calls_json(const CallCounts& c) {
  return Json{{"restrict", c.restrict_calls}, {"dual", c.dual_calls}, {"gap", c.gap_calls}, {"total", c.total()}};
}

Json cert_json(const std::optional<CoverCertificate>& cert) {
  Json j;
  j["valid"] = cert.has_value();
  if (cert) {
    j["ratio"] = rat(cert->ratio);
    Json a = Json::array();
    for (const auto& [covered, by] : cert->assignments) a.push_back(Json::array({covered, by}));
    j["assignments"] = a;
  }
  return j;
}

Json skipped(const std::string& why) { return Json{{"skipped", why}}; }

Json instance_json(const RunConfig& c, const Instance& in, const std::optional<Solutions>& s) {
  Json j;
  j["path"] = c.instance;
  j["kind"] = in.graph ? "graph" : "points";
  if (in.graph) {
    j["nodes"] = in.G.node_count;
    j["edges"] = in.G.edges.size();
  }
  j["dimension"] = dim_of(in);
  j["solutions"] = s ? Json(s->points.size()) : Json(nullptr);
  return j;
}

template <class F>
void with_output(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write(f);
}

void emit(const RunConfig& c, std::ostream& out, const Json& j) {
  with_output(c.output, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
}

std::string approx(const Rat& r) {
  std::ostringstream s;
  s << std::setprecision(6) << r.to_double();
  return s.str();
}

// Rows are the solution points in enumeration order.
void write_plot(std::ostream& o, const Solutions& s, const std::vector<std::size_t>& chosen, const Rat& rho) {
  const std::size_t d = s.points.dim();
  o << "id";
  for (std::size_t j = 0; j < d; ++j) o << "\tc" << j + 1;
  o << "\tpareto\tchosen\tcovered_by\n";
  std::vector<std::size_t> order = chosen;
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Point& p = s.points[i];
    const bool pareto = std::none_of(s.points.begin(), s.points.end(),
                                     [&](const Point& q) { return dominates(q, p) && !(q == p); });
    const bool is_chosen = std::binary_search(order.begin(), order.end(), i);
    auto by = std::find_if(order.begin(), order.end(), [&](std::size_t c) { return covers(s.points[c], p, rho); });
    o << i;
    for (const auto& x : p.coords()) o << '\t' << x.str();
    o << '\t' << (pareto ? 1 : 0) << '\t' << (is_chosen ? 1 : 0) << '\t';
    if (by == order.end()) {
      o << '-';
    } else {
      o << *by;
    }
    o << '\n';
  }
}

void maybe_plot(const RunConfig& c, const std::optional<Solutions>& s, const std::vector<std::size_t>& chosen,
                const Rat& rho, std::ostream& err) {
  if (c.plot.empty()) return;
  if (!s) {
    err << "plot skipped: solution enumeration exceeds its guard\n";
    return;
  }
  with_output(c.plot, err, [&](std::ostream& o) { write_plot(o, *s, chosen, rho); });
}

enum class BiBound { kTwoApprox, kExact, kNone };

int finish_bi(const RunConfig& c, const Instance& in, EngineReport rep, const Rat& eps, OracleMode mode,
              std::optional<Rat> delta, BiBound bound, std::ostream& out, std::ostream& err) {
  const auto sol = try_solutions(in);
  Json j;
  j["command"] = command_name(c.command);
  j["instance"] = instance_json(c, in, sol);
  j["params"] = {{"eps", rat(eps)}, {"delta", delta ? rat(*delta) : Json(nullptr)}, {"oracle", mode_name(mode)},
                 {"prune", c.prune}};
  j["result"] = chosen_json(rep.result, rep.witnesses);
  bool failed = false;
  if (sol) {
    certify(rep, sol->points, eps);
    j["certificate"] = cert_json(rep.certificate);
    failed = !rep.certificate;
  } else {
    j["certificate"] = skipped("solution enumeration exceeds its guard");
  }
  j["oracle_calls"] = calls_json(rep.oracle_calls);
  j["iterations"] = rep.iterations;
  Json bf = skipped("solution enumeration exceeds its guard");
  if (sol) {
    try {
      const std::size_t opt = opt_eps_exact(sol->points, eps);
      const std::size_t size = rep.result.size();
      bf = Json{{"opt_eps", opt}, {"size", size}};
      if (bound == BiBound::kTwoApprox) {
        bf["size_le_2opt"] = size <= 2 * opt;
        bf["calls_le_4opt_plus_4"] = rep.oracle_calls.total() <= 4 * opt + 4;
      } else if (bound == BiBound::kExact) {
        bf["size_eq_opt"] = size == opt;
      }
    } catch (const GuardExceeded&) {
      bf = skipped("exact cover search exceeds its guard");
    }
  }
  j["bruteforce"] = bf;
  emit(c, out, j);
  if (sol) maybe_plot(c, sol, ids_of(*sol, rep.result, rep.witnesses), Rat(1) + eps, err);
  err << command_name(c.command) << ": " << rep.result.size() << " points, " << rep.oracle_calls.total()
      << " oracle calls, certificate ";
  if (!sol) {
    err << "skipped\n";
  } else if (rep.certificate) {
    err << "valid (ratio ~" << approx(rep.certificate->ratio) << ", decimal approximation)\n";
  } else {
    err << "FAILED\n";
  }
  return failed ? kExitCertificate : kExitOk;
}

int run_pareto2(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Rat eps = need(c.eps, "eps");
  const Instance in = load(c);
  require_2d(in, "pareto2");
  const OracleMode mode = resolve_mode(c, in);
  const auto o = oracles_for(in, mode, c.delta.value_or(delta_from_eps(eps)));
  EngineReport rep = two_approx(*o.restrict_y, *o.dual, eps, {c.delta});
  if (c.prune) rep = prune_redundant(rep, rep.state);
  const Rat delta = rep.state.delta;
  return finish_bi(c, in, std::move(rep), eps, mode, delta, BiBound::kTwoApprox, out, err);
}

int run_greedy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Rat eps = need(c.eps, "eps");
  const Instance in = load(c);
  require_2d(in, "greedy");
  const OracleMode mode = resolve_mode(c, in);
  if (mode == OracleMode::kExact) {
    const auto o = oracles_for(in, mode, Rat(0));
    return finish_bi(c, in, greedy_exact(*o.restrict_y, *o.dual, eps), eps, mode, Rat(0), BiBound::kExact, out, err);
  }
  const Rat delta = c.delta.value_or(delta_from_eps(eps));
  const auto o = oracles_for(in, mode, delta);
  return finish_bi(c, in, greedy_approx(*o.restrict_y, *o.restrict_x, eps, delta), eps, mode, delta, BiBound::kNone,
                   out, err);
}

void require_explicit_mode(const RunConfig& c, const char* what) {
  if (c.oracle && *c.oracle != OracleMode::kExact) {
    throw std::invalid_argument(std::string(what) + " runs on exact explicit oracles only");
  }
}

int run_multi(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Rat eps = need(c.eps, "eps");
  const Rat eps_prime = need(c.eps_prime, "eps-prime");
  require_explicit_mode(c, "multi");
  const Instance in = load(c);
  const Solutions sol = solutions(in);
  ExplicitOracle g(sol.points);
  MultiReport rep = eps_prime_pareto(g, eps, eps_prime);
  std::vector<Witness> wit;
  for (const auto& w : rep.witnesses) wit.push_back(sol.witnesses.at(w.at(0)));
  rep.certificate = is_eps_pareto(rep.result, sol.points, eps_prime);

  Json j;
  j["command"] = command_name(c.command);
  j["instance"] = instance_json(c, in, sol);
  j["params"] = {{"eps", rat(eps)}, {"eps_prime", rat(eps_prime)}, {"delta", rat(rep.delta)},
                 {"cover_ratio", rat(rep.cover_ratio)}};
  j["result"] = chosen_json(rep.result, wit);
  j["grid_set_size"] = rep.grid_set.size();
  j["certificate"] = cert_json(rep.certificate);
  j["oracle_calls"] = calls_json(rep.oracle_calls);
  try {
    const std::size_t opt = opt_eps_exact(sol.points, eps);
    const Rat bound = harmonic(Rat(static_cast<long>(rep.grid_set.size()))) * Rat(static_cast<long>(opt));
    j["bruteforce"] = {{"opt_eps", opt},
                       {"size", rep.result.size()},
                       {"size_bound", rat(bound)},
                       {"size_le_bound", Rat(static_cast<long>(rep.result.size())) <= bound}};
  } catch (const GuardExceeded&) {
    j["bruteforce"] = skipped("exact cover search exceeds its guard");
  }
  emit(c, out, j);
  maybe_plot(c, sol, ids_of(sol, rep.result, wit), Rat(1) + eps_prime, err);
  err << "multi: " << rep.result.size() << " points from a grid set of " << rep.grid_set.size() << ", "
      << rep.oracle_calls.total() << " GAP calls, certificate " << (rep.certificate ? "valid" : "FAILED") << '\n';
  return rep.certificate ? kExitOk : kExitCertificate;
}

// Worst ratio at which Q covers every point of P.
Rat cover_ratio(const PointSet& Q, const PointSet& P) {
  Rat worst(1);
  for (const auto& p : P) {
    std::optional<Rat> best;
    for (const auto& q : Q) {
      const Rat r = ratio_distance(q, p);
      if (!best || r < *best) best = r;
    }
    if (!best) throw ContractViolation("empty cover");
    worst = max(worst, *best);
  }
  return worst;
}

int run_dual(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t k = need(c.k, "k");
  require_explicit_mode(c, "dual");
  const Instance in = load(c);
  const Solutions sol = solutions(in);
  DualResult dual;
  Json grid = nullptr;
  if (c.delta) {
    ExplicitOracle g(sol.points);
    DualGapResult r = dual_k_gap(g, k, *c.delta);
    grid = {{"delta", rat(r.grid_delta)}, {"grid_set_size", r.grid_set.size()}, {"calls", calls_json(r.calls)}};
    dual = std::move(r.dual);
  } else {
    dual = dual_k_explicit(sol.points, k);
  }
  const auto ids = ids_of(sol, dual.chosen, {});
  std::vector<Witness> wit;
  for (auto id : ids) wit.push_back(sol.witnesses[id]);
  const Rat ratio = sol.points.empty() ? Rat(1) : cover_ratio(dual.chosen, sol.points);
  const auto cert = find_cover(dual.chosen, sol.points, ratio);

  Json j;
  j["command"] = command_name(c.command);
  j["instance"] = instance_json(c, in, sol);
  j["params"] = {{"k", k}, {"grid", grid}};
  j["result"] = chosen_json(dual.chosen, wit);
  j["achieved_ratio"] = rat(ratio);
  j["optimal_ratio_guess"] = rat(dual.optimal_ratio_guess);
  j["certificate"] = cert_json(cert);
  j["exponents"] = {{"nominal", dual.nominal_exponent}, {"honest", dual.honest_exponent}};
  j["rounds"] = dual.rounds;
  j["ccv_count"] = dual.ccv_count;
  j["final_cover_within_budget"] = dual.final_cover_within_budget;
  try {
    const DualResult b = brute_force_dual(sol.points, std::min(k, std::max<std::size_t>(sol.points.size(), 1)));
    j["bruteforce"] = {{"optimal_ratio", rat(b.achieved_ratio)},
                       {"ratio_le_opt_pow_nominal", ratio <= pow(b.achieved_ratio, dual.nominal_exponent)}};
  } catch (const GuardExceeded&) {
    j["bruteforce"] = skipped("subset enumeration exceeds its guard");
  }
  emit(c, out, j);
  maybe_plot(c, sol, ids, ratio, err);
  const bool ok = cert && dual.chosen.size() <= k;
  err << "dual: " << dual.chosen.size() << " points, ratio ~" << approx(ratio) << " (decimal approximation), "
      << (ok ? "certified" : "FAILED") << '\n';
  return ok ? kExitOk : kExitCertificate;
}

int run_gen(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string& f = c.family;
  if (f.empty()) throw std::invalid_argument("a generator family is required");
  std::optional<BiGraph> G;
  std::optional<PointSet> P;
  if (f == "chain" || f == "cluster") {
    if (c.A.empty()) throw std::invalid_argument("--A is required");
    PartitionSpec spec{c.A, need(c.eps, "eps"), c.k.value_or(1)};
    G = f == "chain" ? chain_instance(spec) : cluster_instance(spec);
  } else if (f == "prop31") {
    auto [p, pp] = prop31_points(need(c.M, "M"), need(c.eps, "eps"));
    P = c.prime ? pp : p;
  } else if (f == "shatter") {
    P = shatter_construction(static_cast<int>(c.d), need(c.eps, "eps"));
  } else if (f == "claim34") {
    P = claim34_stage(c.k.value_or(1), need(c.eps, "eps"), need(c.delta, "delta")).points;
  } else if (f == "random-points") {
    P = random_points(c.n, c.d, c.seed, c.bits);
  } else if (f == "random-graph") {
    G = random_bigraph(c.n, c.density, c.seed, c.bits, !c.cyclic);
  } else {
    throw std::invalid_argument("unknown generator family '" + f + "'");
  }
  with_output(c.output, out, [&](std::ostream& o) {
    if (G) {
      write_graph(o, *G);
    } else {
      write_points(o, *P);
    }
  });
  if (G) {
    err << "gen " << f << ": " << G->node_count << " nodes, " << G->edges.size() << " edges\n";
  } else {
    err << "gen " << f << ": " << P->size() << " points in dimension " << P->dim() << '\n';
  }
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::string count_detail(const char* a, std::size_t x, const char* b, std::size_t y) {
  return std::string(a) + " = " + std::to_string(x) + ", " + b + " = " + std::to_string(y);
}

bool witnesses_valid(const Instance& in, const PointSet& pts, const std::vector<Witness>& wit) {
  if (wit.size() != pts.size()) return false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (in.graph) {
      if (!is_valid_path(in.G, PathWitness{wit[i], pts[i].x(), pts[i].y()})) return false;
    } else if (wit[i].size() != 1 || wit[i][0] >= in.P.size() || !(in.P[wit[i][0]] == pts[i])) {
      return false;
    }
  }
  return true;
}

void verify_bi(const RunConfig& c, const Instance& in, const Solutions& sol, const Rat& eps, std::vector<Check>& out) {
  const OracleMode mode = resolve_mode(c, in);
  const auto o = oracles_for(in, mode, c.delta.value_or(delta_from_eps(eps)));
  const EngineReport rep = two_approx(*o.restrict_y, *o.dual, eps, {c.delta});
  const auto cert = is_eps_pareto(rep.result, sol.points, eps);
  out.push_back({"two_approx certificate", cert.has_value(), std::to_string(rep.result.size()) + " points"});
  out.push_back({"two_approx witnesses", witnesses_valid(in, rep.result, rep.witnesses), ""});
  const EngineReport pruned = prune_redundant(rep, rep.state);
  out.push_back({"pruned certificate", is_eps_pareto(pruned.result, sol.points, eps).has_value(),
                 std::to_string(pruned.result.size()) + " points"});
  if (!c.against_bruteforce) return;
  const std::size_t opt = opt_eps_exact(sol.points, eps);
  const std::size_t size = rep.result.size();
  const std::size_t calls = rep.oracle_calls.total();
  out.push_back({"two_approx size <= 2 OPT", size <= 2 * opt, count_detail("|Q|", size, "OPT", opt)});
  out.push_back({"two_approx calls <= 4 OPT + 4", calls <= 4 * opt + 4, count_detail("calls", calls, "OPT", opt)});
  const auto ex = in.graph ? bsp_oracles(in.G, BspMode::kExact) : exact_oracle_from_points(in.P);
  const EngineReport g = greedy_exact(*ex.restrict_y, *ex.dual, eps);
  out.push_back({"greedy_exact size = OPT", g.result.size() == opt, count_detail("|Q|", g.result.size(), "OPT", opt)});
  out.push_back({"greedy_exact certificate", is_eps_pareto(g.result, sol.points, eps).has_value(), ""});
  if (in.graph) {
    const Rat delta = c.delta.value_or(Rat(1, 4));
    std::vector<Rat> bounds;
    for (const auto& p : sol.points) bounds.push_back(p.x());
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    bool ok = true;
    for (const auto& C : bounds) {
      const auto e = rsp_exact(in.G, C);
      const auto a = rsp_fptas(in.G, C, delta);
      if (e.has_value() != a.has_value()) {
        ok = false;
      } else if (a && (C < a->total_cost || (Rat(1) + delta) * e->total_delay < a->total_delay)) {
        ok = false;
      }
    }
    out.push_back({"rsp_fptas contract", ok, std::to_string(bounds.size()) + " cost bounds, delta = " + delta.str()});
  }
}

void verify_multi(const RunConfig& c, const Solutions& sol, const Rat& eps, std::vector<Check>& out) {
  const Rat eps_prime = need(c.eps_prime, "eps-prime");
  ExplicitOracle g(sol.points);
  const MultiReport rep = eps_prime_pareto(g, eps, eps_prime);
  out.push_back({"eps_prime_pareto certificate", is_eps_pareto(rep.result, sol.points, eps_prime).has_value(),
                 std::to_string(rep.result.size()) + " points"});
  if (!c.against_bruteforce) return;
  const std::size_t opt = opt_eps_exact(sol.points, eps);
  const Rat bound = harmonic(Rat(static_cast<long>(rep.grid_set.size()))) * Rat(static_cast<long>(opt));
  out.push_back({"eps_prime_pareto size <= H(|R|) OPT", Rat(static_cast<long>(rep.result.size())) <= bound,
                 count_detail("|Q|", rep.result.size(), "OPT", opt) + ", bound = " + bound.str()});
}

void verify_dual(const RunConfig& c, const Solutions& sol, std::vector<Check>& out) {
  const std::size_t k = *c.k;
  const DualResult d = dual_k_explicit(sol.points, k);
  out.push_back({"dual_k size <= k", d.chosen.size() <= k, count_detail("|Q|", d.chosen.size(), "k", k)});
  const bool cert = d.certificate && check_certificate(*d.certificate, d.chosen, sol.points) &&
                    d.certificate->ratio <= d.achieved_ratio;
  out.push_back({"dual_k certificate", cert, "ratio = " + d.achieved_ratio.str()});
  if (!c.against_bruteforce) return;
  const DualResult b = brute_force_dual(sol.points, k);
  const Rat bound = pow(b.achieved_ratio, d.nominal_exponent);
  out.push_back({"dual_k ratio <= OPT^9", d.achieved_ratio <= bound, "OPT = " + b.achieved_ratio.str()});
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Rat eps = need(c.eps, "eps");
  const Instance in = load(c);
  const Solutions sol = solutions(in);
  std::vector<Check> checks;
  if (dim_of(in) == 2) verify_bi(c, in, sol, eps, checks);
  if (dim_of(in) != 2 || c.eps_prime) verify_multi(c, sol, eps, checks);
  if (c.k && !sol.points.empty()) verify_dual(c, sol, checks);
  std::size_t failed = 0;
  with_output(c.output, out, [&](std::ostream& o) {
    for (const auto& ch : checks) {
      o << (ch.pass ? "PASS " : "FAIL ") << ch.name;
      if (!ch.detail.empty()) o << ": " << ch.detail;
      o << '\n';
      failed += ch.pass ? 0 : 1;
    }
  });
  err << "verify: " << checks.size() - failed << "/" << checks.size() << " invariants hold\n";
  return failed ? kExitCertificate : kExitOk;
}

int run_plotdata(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Instance in = load(c);
  const Solutions sol = solutions(in);
  std::vector<std::size_t> chosen;
  Rat rho;
  if (c.k) {
    const DualResult d = dual_k_explicit(sol.points, *c.k);
    chosen = ids_of(sol, d.chosen, {});
    rho = d.achieved_ratio;
  } else if (dim_of(in) == 2 && !c.eps_prime) {
    const Rat eps = need(c.eps, "eps");
    const OracleMode mode = resolve_mode(c, in);
    const auto o = oracles_for(in, mode, c.delta.value_or(delta_from_eps(eps)));
    const EngineReport rep = two_approx(*o.restrict_y, *o.dual, eps, {c.delta});
    chosen = ids_of(sol, rep.result, rep.witnesses);
    rho = Rat(1) + eps;
  } else {
    const Rat eps = need(c.eps, "eps");
    const Rat eps_prime = need(c.eps_prime, "eps-prime");
    ExplicitOracle g(sol.points);
    const MultiReport rep = eps_prime_pareto(g, eps, eps_prime);
    chosen = ids_of(sol, rep.result, {});
    rho = Rat(1) + eps_prime;
  }
  with_output(c.output, out, [&](std::ostream& o) { write_plot(o, sol, chosen, rho); });
  err << "plotdata: " << sol.points.size() << " rows, " << chosen.size() << " chosen\n";
  return kExitOk;
}

}  // namespace

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kPareto2: return run_pareto2(config, out, err);
      case Command::kGreedy: return run_greedy(config, out, err);
      case Command::kMulti: return run_multi(config, out, err);
      case Command::kDual: return run_dual(config, out, err);
      case Command::kGen: return run_gen(config, out, err);
      case Command::kVerify: return run_verify(config, out, err);
      case Command::kPlotdata: return run_plotdata(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << " (raise PARETO_GUARD_MAX)\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace paretoapx
