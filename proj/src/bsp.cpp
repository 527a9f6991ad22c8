#include "paretoapx/bsp.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "paretoapx/errors.hpp"
#include "paretoapx/text_io.hpp"

namespace paretoapx {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Label {
  Rat cost;
  Rat delay;
  std::size_t pred;  // label index, kNone at the source
  std::size_t edge;
};

std::size_t effective_hops(const BiGraph& G, std::size_t hop_limit) {
  if (hop_limit != 0) return hop_limit;
  return G.node_count > 1 ? G.node_count - 1 : 1;
}

std::vector<std::vector<std::size_t>> out_edges(const BiGraph& G) {
  std::vector<std::vector<std::size_t>> out(G.node_count);
  for (std::size_t i = 0; i < G.edges.size(); ++i) out[G.edges[i].from].push_back(i);
  return out;
}

PathWitness make_witness(const BiGraph& G, std::vector<std::size_t> edges) {
  PathWitness w;
  w.edges = std::move(edges);
  for (auto e : w.edges) {
    w.total_cost += G.edges[e].cost;
    w.total_delay += G.edges[e].delay;
  }
  return w;
}

// Drops closed sub-walks so the result is a simple path.
std::vector<std::size_t> remove_cycles(const BiGraph& G, const std::vector<std::size_t>& walk) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> pos(G.node_count, kNone);
  pos[G.source] = 0;
  for (auto e : walk) {
    out.push_back(e);
    const std::size_t v = G.edges[e].to;
    if (pos[v] != kNone) {
      while (out.size() > pos[v]) {
        pos[G.edges[out.back()].to] = kNone;
        out.pop_back();
      }
      pos[G.source] = 0;
    }
    pos[v] = out.size();
  }
  return out;
}

// Pareto labels (cost <= C) over walks of at most `hops` edges; best label at the sink
// minimizes (delay, cost).
std::optional<PathWitness> label_setting(const BiGraph& G, const Rat& C, std::size_t hops) {
  G.validate();
  if (G.source == G.sink) return std::nullopt;
  const auto out = out_edges(G);
  const std::size_t guard = effective_guard(1000000);
  std::vector<Label> arena;
  std::vector<std::vector<std::size_t>> alive(G.node_count);
  arena.push_back({Rat(0), Rat(0), kNone, kNone});
  alive[G.source].push_back(0);
  std::vector<std::size_t> frontier{0};
  std::vector<std::size_t> at_node{G.source};

  for (std::size_t h = 0; h < hops && !frontier.empty(); ++h) {
    std::vector<std::size_t> next;
    std::vector<std::size_t> next_node;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const std::size_t li = frontier[f];
      const std::size_t u = at_node[f];
      // Skip labels pruned after they were queued.
      if (std::find(alive[u].begin(), alive[u].end(), li) == alive[u].end()) continue;
      for (auto ei : out[u]) {
        const Edge& e = G.edges[ei];
        Rat c = arena[li].cost + e.cost;
        if (C < c) continue;
        Rat d = arena[li].delay + e.delay;
        auto& bucket = alive[e.to];
        bool dominated = false;
        for (auto o : bucket) {
          if (arena[o].cost <= c && arena[o].delay <= d) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        std::erase_if(bucket, [&](std::size_t o) { return c <= arena[o].cost && d <= arena[o].delay; });
        arena.push_back({std::move(c), std::move(d), li, ei});
        if (arena.size() > guard) throw GuardExceeded("label-setting DP exceeded its label guard");
        bucket.push_back(arena.size() - 1);
        if (e.to != G.sink) {
          next.push_back(arena.size() - 1);
          next_node.push_back(e.to);
        }
      }
    }
    frontier = std::move(next);
    at_node = std::move(next_node);
  }

  std::size_t best = kNone;
  for (auto o : alive[G.sink]) {
    if (best == kNone || arena[o].delay < arena[best].delay ||
        (arena[o].delay == arena[best].delay && arena[o].cost < arena[best].cost)) {
      best = o;
    }
  }
  if (best == kNone) return std::nullopt;
  std::vector<std::size_t> edges;
  for (std::size_t l = best; arena[l].pred != kNone; l = arena[l].pred) edges.push_back(arena[l].edge);
  std::reverse(edges.begin(), edges.end());
  return make_witness(G, remove_cycles(G, edges));
}

PathWitness swap_back(PathWitness w) {
  std::swap(w.total_cost, w.total_delay);
  return w;
}

// Min cost over walks whose scaled delay sum is at most `budget`; scaled delays are
// ceil(delay * scale). With C, returns the smallest budget t whose min cost is <= C;
// without, the cheapest walk within the full budget.
std::optional<PathWitness> scaled_dp(const BiGraph& G, const Rat& scale, const mpz_class& budget_z,
                                     const std::optional<Rat>& C) {
  if (!budget_z.fits_ulong_p()) throw GuardExceeded("scaled DP budget too large");
  const std::size_t T = budget_z.get_ui();
  if (T > effective_guard(1000000)) throw GuardExceeded("scaled DP budget too large");
  std::vector<std::size_t> w(G.edges.size());
  for (std::size_t i = 0; i < G.edges.size(); ++i) {
    const mpz_class s = (G.edges[i].delay * scale).ceil();
    w[i] = s > T ? T + 1 : s.get_ui();
  }
  const std::size_t n = G.node_count;
  // cost[t][v]; nullopt = unreachable.
  std::vector<std::vector<std::optional<Rat>>> cost(T + 1, std::vector<std::optional<Rat>>(n));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pred(
      T + 1, std::vector<std::pair<std::size_t, std::size_t>>(n, {kNone, kNone}));
  for (std::size_t t = 0; t <= T; ++t) {
    cost[t][G.source] = Rat(0);
    if (t > 0) {
      for (std::size_t v = 0; v < n; ++v) {
        if (v != G.source && cost[t - 1][v]) {
          cost[t][v] = cost[t - 1][v];
          pred[t][v] = {kNone, t - 1};
        }
      }
    }
    for (std::size_t ei = 0; ei < G.edges.size(); ++ei) {
      const Edge& e = G.edges[ei];
      if (w[ei] > t || e.to == G.source) continue;
      const auto& base = cost[t - w[ei]][e.from];
      if (!base) continue;
      Rat c = *base + e.cost;
      if (!cost[t][e.to] || c < *cost[t][e.to]) {
        cost[t][e.to] = std::move(c);
        pred[t][e.to] = {ei, t - w[ei]};
      }
    }
  }
  for (std::size_t t = C ? 0 : T; t <= T; ++t) {
    const auto& c = cost[t][G.sink];
    if (!c || (C && *C < *c)) continue;
    std::vector<std::size_t> edges;
    std::size_t v = G.sink;
    std::size_t tt = t;
    while (!(v == G.source && pred[tt][v].first == kNone)) {
      const auto [ei, from_t] = pred[tt][v];
      if (ei != kNone) {
        edges.push_back(ei);
        v = G.edges[ei].from;
      }
      tt = from_t;
    }
    std::reverse(edges.begin(), edges.end());
    return make_witness(G, remove_cycles(G, edges));
  }
  return std::nullopt;
}

std::optional<PathWitness> min_cost_path(const BiGraph& G) {
  // Exact min cost ignoring delay: label setting with an unbounded budget keeps only
  // the cheapest path per node when delays are swapped out.
  BiGraph H = G;
  for (auto& e : H.edges) e.delay = e.cost;
  Rat total(0);
  for (const auto& e : G.edges) total += e.cost;
  auto w = label_setting(H, total, effective_hops(G, 0));
  if (!w) return std::nullopt;
  return make_witness(G, w->edges);
}

class BspRestrict : public RestrictOracle {
 public:
  BspRestrict(BiGraph G, BspMode mode) : G_(std::move(G)), mode_(mode), m_(path_value_bits(G_)) {}
  int value_bits() const override { return m_; }

 protected:
  OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const override {
    Rat C = bound;
    // Path costs are m-bit rationals, so x < C is x <= C - 2^-2m when C is m-bit.
    if (kind == Bound::kStrict) {
      if (C.num_bits() <= static_cast<std::size_t>(m_) && C.den_bits() <= static_cast<std::size_t>(m_)) {
        C -= Rat::pow2(-2 * m_);
      }
      if (C.sign() <= 0) return std::nullopt;
    }
    auto w = mode_ == BspMode::kExact ? rsp_exact(G_, C) : rsp_fptas(G_, C, delta);
    if (!w) return std::nullopt;
    if (kind == Bound::kStrict && !(w->total_cost < bound)) return std::nullopt;
    return Solution{w->point(), w->edges};
  }

 private:
  BiGraph G_;
  BspMode mode_;
  int m_;
};

class BspDualRestrict : public DualRestrictOracle {
 public:
  BspDualRestrict(BiGraph G, BspMode mode) : G_(std::move(G)), mode_(mode), m_(path_value_bits(G_)) {}
  int value_bits() const override { return m_; }

 protected:
  OracleAnswer do_dual_restrict(const Rat& delta, const Rat& bound) const override {
    auto w = mode_ == BspMode::kExact ? rsp_exact_dual(G_, bound) : dual_fptas(G_, bound, delta);
    if (!w) return std::nullopt;
    return Solution{w->point(), w->edges};
  }

 private:
  BiGraph G_;
  BspMode mode_;
  int m_;
};

}  // namespace

void BiGraph::validate() const {
  if (node_count == 0) throw std::invalid_argument("graph has no nodes");
  if (source >= node_count || sink >= node_count) throw std::invalid_argument("source/sink out of range");
  for (const auto& e : edges) {
    if (e.from >= node_count || e.to >= node_count) throw std::invalid_argument("edge endpoint out of range");
    if (e.cost.sign() <= 0 || e.delay.sign() <= 0) throw std::invalid_argument("edge weights must be positive");
  }
}

BiGraph read_graph(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(1, "missing header line 'n s t'");
  auto node = [](const std::string& tok, std::size_t line) -> std::size_t {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(line, "expected a node id, got '" + tok + "'");
    }
    return std::stoull(tok);
  };
  const auto& head = lines.front();
  if (head.tokens.size() != 3) throw ParseError(head.number, "header must be 'n s t'");
  BiGraph G;
  G.node_count = node(head.tokens[0], head.number);
  G.source = node(head.tokens[1], head.number);
  G.sink = node(head.tokens[2], head.number);
  if (G.node_count == 0 || G.source >= G.node_count || G.sink >= G.node_count) {
    throw ParseError(head.number, "source/sink out of range");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 4) throw ParseError(l.number, "edge line must be 'u v cost delay'");
    Edge e{node(l.tokens[0], l.number), node(l.tokens[1], l.number), parse_rat(l.tokens[2], l.number),
           parse_rat(l.tokens[3], l.number)};
    if (e.from >= G.node_count || e.to >= G.node_count) throw ParseError(l.number, "node id out of range");
    if (e.cost.sign() <= 0 || e.delay.sign() <= 0) throw ParseError(l.number, "edge weights must be positive");
    G.edges.push_back(std::move(e));
  }
  return G;
}

BiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const BiGraph& G) {
  out << G.node_count << ' ' << G.source << ' ' << G.sink << '\n';
  for (const auto& e : G.edges) out << e.from << ' ' << e.to << ' ' << e.cost << ' ' << e.delay << '\n';
}

BiGraph swap_objectives(const BiGraph& G) {
  BiGraph H = G;
  for (auto& e : H.edges) std::swap(e.cost, e.delay);
  return H;
}

int path_value_bits(const BiGraph& G) {
  mpz_class L = 1;
  Rat tc(0), td(0);
  for (const auto& e : G.edges) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.cost.raw().get_den_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.delay.raw().get_den_mpz_t());
    tc += e.cost;
    td += e.delay;
  }
  std::size_t m = mpz_sizeinbase(L.get_mpz_t(), 2);
  for (const Rat* t : {&tc, &td}) {
    const mpz_class n = (*t * Rat(L)).floor();
    if (n > 0) m = std::max(m, mpz_sizeinbase(n.get_mpz_t(), 2));
  }
  return static_cast<int>(m);
}

bool is_valid_path(const BiGraph& G, const PathWitness& w) {
  std::size_t at = G.source;
  Rat c(0), d(0);
  for (auto e : w.edges) {
    if (e >= G.edges.size() || G.edges[e].from != at) return false;
    at = G.edges[e].to;
    c += G.edges[e].cost;
    d += G.edges[e].delay;
  }
  return at == G.sink && !w.edges.empty() && c == w.total_cost && d == w.total_delay;
}

std::optional<PathWitness> rsp_exact(const BiGraph& G, const Rat& C, std::size_t hop_limit) {
  return label_setting(G, C, effective_hops(G, hop_limit));
}

std::optional<PathWitness> rsp_exact_dual(const BiGraph& G, const Rat& D, std::size_t hop_limit) {
  auto w = label_setting(swap_objectives(G), D, effective_hops(G, hop_limit));
  if (!w) return std::nullopt;
  return swap_back(std::move(*w));
}

std::optional<PathWitness> rsp_fptas(const BiGraph& G, const Rat& C, const Rat& delta) {
  if (delta.sign() < 0) throw std::invalid_argument("delta must be >= 0");
  if (delta.sign() == 0) return rsp_exact(G, C);
  G.validate();
  if (G.source == G.sink || G.edges.empty()) return std::nullopt;
  auto cheapest = min_cost_path(G);
  if (!cheapest || C < cheapest->total_cost) return std::nullopt;
  const Rat h(static_cast<long>(effective_hops(G, 0)));
  Rat B = G.edges.front().delay;
  for (const auto& e : G.edges) B = min(B, e.delay);
  // ceil(2h/delta) + h scaled units cover every path of delay <= 2B.
  const mpz_class budget = (Rat(2) * h / delta).ceil() + h.floor();
  for (;;) {
    if (auto w = scaled_dp(G, h / (delta * B), budget, C)) return w;
    B *= Rat(2);
    if (cheapest->total_delay <= B / Rat(2)) {
      throw ContractViolation("delay scaling failed to find a path that is known to exist");
    }
  }
}

std::optional<PathWitness> dual_fptas(const BiGraph& G, const Rat& D, const Rat& delta) {
  if (delta.sign() < 0) throw std::invalid_argument("delta must be >= 0");
  if (delta.sign() == 0) return rsp_exact_dual(G, D);
  G.validate();
  if (G.source == G.sink || D.sign() <= 0) return std::nullopt;
  const Rat h(static_cast<long>(effective_hops(G, 0)));
  // Any path with delay <= D scales to at most h/delta + h units.
  const mpz_class budget = (h / delta).floor() + h.floor();
  return scaled_dp(G, h / (delta * D), budget, std::nullopt);
}

PathEnumeration enumerate_paths(const BiGraph& G, std::size_t cap) {
  G.validate();
  const std::size_t guard = effective_guard(cap);
  PathEnumeration out;
  if (G.source == G.sink) return out;
  const auto adj = out_edges(G);
  std::vector<bool> on_path(G.node_count, false);
  std::vector<std::size_t> stack;
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    if (u == G.sink) {
      if (out.paths.size() >= guard) throw GuardExceeded("path enumeration exceeded its guard");
      auto w = make_witness(G, stack);
      out.points.push_back(w.point());
      out.paths.push_back(std::move(w));
      return;
    }
    on_path[u] = true;
    for (auto ei : adj[u]) {
      const std::size_t v = G.edges[ei].to;
      if (on_path[v]) continue;
      stack.push_back(ei);
      self(self, v);
      stack.pop_back();
    }
    on_path[u] = false;
  };
  dfs(dfs, G.source);
  return out;
}

OracleSet bsp_oracles(const BiGraph& G, BspMode mode, BspDualMode dual_mode) {
  G.validate();
  OracleSet s;
  auto r = std::make_shared<BspRestrict>(G, mode);
  s.restrict_y = r;
  if (dual_mode == BspDualMode::kDirect) {
    s.dual = std::make_shared<BspDualRestrict>(G, mode);
  } else {
    s.dual = std::make_shared<DualRestrictViaRestrict>(r);
  }
  s.restrict_x = std::make_shared<SwappedRestrict>(std::make_shared<BspRestrict>(swap_objectives(G), mode));
  return s;
}

EngineReport bsp_two_approx(const BiGraph& G, const Rat& eps, BspMode mode) {
  const auto o = bsp_oracles(G, mode);
  return two_approx(*o.restrict_y, *o.dual, eps);
}

}  // namespace paretoapx
