#include "paretoapx/generators.hpp"

#include <random>
#include <stdexcept>

namespace paretoapx {

namespace {

void check_spec(const PartitionSpec& spec) {
  if (spec.A.empty()) throw std::invalid_argument("partition set must be nonempty");
  for (long a : spec.A) {
    if (a <= 0) throw std::invalid_argument("partition elements must be positive");
  }
  if (spec.eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (spec.k < 1) throw std::invalid_argument("replication count must be >= 1");
}

// Appends one chain copy between `from` and `to`, allocating fresh interior nodes.
void add_chain(BiGraph& G, const PartitionSpec& spec, std::size_t from, std::size_t to, const Rat& cscale,
               const Rat& dscale) {
  const long n = static_cast<long>(spec.A.size());
  Rat S(0);
  for (long a : spec.A) S += Rat(a);
  std::size_t prev = from;
  for (long i = 0; i < n; ++i) {
    const std::size_t next = i + 1 == n ? to : G.node_count++;
    const std::size_t mid = G.node_count++;
    const Rat heavy = S + Rat(2) * spec.eps * Rat(spec.A[i] * n);
    G.edges.push_back({prev, next, heavy * cscale, S * dscale});
    G.edges.push_back({prev, mid, S * cscale / Rat(2), heavy * dscale / Rat(2)});
    G.edges.push_back({mid, next, S * cscale / Rat(2), heavy * dscale / Rat(2)});
    prev = next;
  }
}

Rat random_value(std::mt19937_64& rng, int value_bits) {
  if (value_bits < 1) throw std::invalid_argument("value_bits must be >= 1");
  const std::uint64_t hi = value_bits >= 63 ? (std::uint64_t{1} << 62) : (std::uint64_t{1} << value_bits) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(1, hi);
  const auto num = dist(rng);
  const auto den = dist(rng);
  return Rat(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
}

}  // namespace

BiGraph chain_instance(const PartitionSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.A.size();
  BiGraph G;
  G.source = 0;
  G.sink = n;
  // v_0..v_n first so the sink id is n; midpoints follow.
  G.node_count = n + 1;
  std::size_t prev = 0;
  Rat S(0);
  for (long a : spec.A) S += Rat(a);
  const long nl = static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = i + 1;
    const std::size_t mid = G.node_count++;
    const Rat heavy = S + Rat(2) * spec.eps * Rat(spec.A[i] * nl);
    G.edges.push_back({prev, next, heavy, S});
    G.edges.push_back({prev, mid, S / Rat(2), heavy / Rat(2)});
    G.edges.push_back({mid, next, S / Rat(2), heavy / Rat(2)});
    prev = next;
  }
  return G;
}

Rat cluster_stub_weight(const PartitionSpec& spec) {
  check_spec(spec);
  BiGraph probe;
  probe.node_count = 2;
  probe.source = 0;
  probe.sink = 1;
  const Rat base = Rat(1) + Rat(2) * spec.eps;
  for (std::size_t j = 0; j < spec.k; ++j) {
    const Rat s = pow(base, 2 * j);
    add_chain(probe, spec, 0, 1, Rat(1) / s, s);
  }
  int m = 1;
  for (const auto& e : probe.edges) {
    m = std::max({m, static_cast<int>(e.cost.num_bits()), static_cast<int>(e.cost.den_bits()),
                  static_cast<int>(e.delay.num_bits()), static_cast<int>(e.delay.den_bits())});
  }
  return Rat::pow2(-(2 * m + 4));
}

BiGraph cluster_instance(const PartitionSpec& spec) {
  check_spec(spec);
  const Rat eta = cluster_stub_weight(spec);
  const Rat base = Rat(1) + Rat(2) * spec.eps;
  BiGraph G;
  G.source = 0;
  G.sink = 1;
  G.node_count = 2;
  for (std::size_t j = 0; j < spec.k; ++j) {
    const Rat s = pow(base, 2 * j);
    const std::size_t first = G.node_count++;
    const std::size_t last = G.node_count++;
    G.edges.push_back({G.source, first, eta, eta});
    add_chain(G, spec, first, last, Rat(1) / s, s);
    G.edges.push_back({last, G.sink, eta, eta});
  }
  return G;
}

std::pair<PointSet, PointSet> prop31_points(const Rat& M, const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (!(Rat(1) + Rat(1) / eps < M)) throw std::invalid_argument("M must exceed 1 + 1/eps");
  const Rat one(1);
  const Rat hi = M * (one + Rat(2) * eps) / (one + eps);
  const Rat lo = M / (one + eps);
  PointSet P(2);
  P.push_back(Point{M, M});
  P.push_back(Point{hi, lo});
  P.push_back(Point{lo, hi});
  P.push_back(Point{M + one, M - one});
  P.push_back(Point{M - one, M + one});
  PointSet Pp(2);
  for (std::size_t i = 1; i < P.size(); ++i) Pp.push_back(P[i]);
  return {P, Pp};
}

PointSet shatter_construction(int d, const Rat& eps) {
  if (d < 2 || d > 6) throw std::invalid_argument("shatter construction needs 2 <= d <= 6");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  const Rat one(1);
  const Rat mid = one + eps;
  const Rat far = one + Rat(2) * eps;
  PointSet P(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> c(d, far);
    c[i] = one;
    P.push_back(Point(std::move(c)));
  }
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Rat> c(d, far);
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) c[i] = mid;
    }
    P.push_back(Point(std::move(c)));
  }
  return P;
}

Claim34Stage claim34_stage(std::size_t k, const Rat& eps, const Rat& delta) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (delta.sign() <= 0 || !(delta < eps)) throw std::invalid_argument("need 0 < delta < eps");
  const Rat a = Rat(1) + eps;
  const Rat b = Rat(1) + delta;
  if (!(b * b < a)) throw std::invalid_argument("stage needs (1+delta)^2 < 1+eps");
  // Coordinates are a^i * b^j, written as exponent pairs {i, j}.
  struct Exp {
    long i, j;
  };
  auto val = [&](Exp e) {
    Rat v(1);
    v *= e.i >= 0 ? pow(a, e.i) : Rat(1) / pow(a, -e.i);
    v *= e.j >= 0 ? pow(b, e.j) : Rat(1) / pow(b, -e.j);
    return v;
  };
  const std::vector<std::pair<Exp, Exp>> head = {
      {{1, 0}, {1, 0}}, {{2, 0}, {0, 0}}, {{2, -1}, {0, 1}}, {{1, 1}, {1, -1}}, {{0, 0}, {2, -1}}};
  // One repeating block of five points per further optimal point, shifted by
  // a^-3 b^-2 in x and a^3 b^2 in y.
  const std::vector<std::pair<Exp, Exp>> block = {{{-1, -2}, {3, 0}},
                                                  {{-1, -1}, {4, -1}},
                                                  {{-2, -2}, {4, 0}},
                                                  {{-2, -1}, {4, 1}},
                                                  {{-3, -2}, {5, 2}}};
  Claim34Stage stage;
  stage.points = PointSet(2);
  for (const auto& [x, y] : head) stage.points.push_back(Point{val(x), val(y)});
  for (long r = 0; r + 1 < static_cast<long>(k); ++r) {
    for (const auto& [x, y] : block) {
      stage.points.push_back(Point{val({x.i - 3 * r, x.j - 2 * r}), val({y.i + 3 * r, y.j + 2 * r})});
    }
  }
  stage.policy.kind = AdversaryPolicy::Kind::kWorstObjective;
  return stage;
}

PointSet random_points(std::size_t n, std::size_t d, std::uint64_t seed, int value_bits) {
  if (d < 2) throw std::invalid_argument("points need d >= 2");
  std::mt19937_64 rng(seed);
  PointSet P(d);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> c;
    for (std::size_t j = 0; j < d; ++j) c.push_back(random_value(rng, value_bits));
    P.push_back(Point(std::move(c)));
  }
  return P;
}

BiGraph random_bigraph(std::size_t n, double density, std::uint64_t seed, int value_bits, bool acyclic) {
  if (n < 2) throw std::invalid_argument("graphs need at least 2 nodes");
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BiGraph G;
  G.node_count = n;
  G.source = 0;
  G.sink = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        Rat c = random_value(rng, value_bits);
        Rat d = random_value(rng, value_bits);
        G.edges.push_back({i, j, std::move(c), std::move(d)});
      }
      if (!acyclic && coin(rng)) {
        Rat c = random_value(rng, value_bits);
        Rat d = random_value(rng, value_bits);
        G.edges.push_back({j, i, std::move(c), std::move(d)});
      }
    }
  }
  return G;
}

}  // namespace paretoapx
