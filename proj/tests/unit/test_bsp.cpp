#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "../support/brute.hpp"
#include "paretoapx/bsp.hpp"
#include "paretoapx/errors.hpp"
#include "paretoapx/generators.hpp"

using namespace paretoapx;

namespace {

BiGraph parallel_pair() {
  BiGraph G;
  G.node_count = 2;
  G.source = 0;
  G.sink = 1;
  G.edges.push_back({0, 1, Rat(1), Rat(5)});
  G.edges.push_back({0, 1, Rat(3), Rat(1)});
  return G;
}

std::optional<Rat> naive_min_delay(const PathEnumeration& en, const Rat& C) {
  std::optional<Rat> best;
  for (const auto& p : en.points) {
    if (C < p.x()) continue;
    if (!best || p.y() < *best) best = p.y();
  }
  return best;
}

}  // namespace

TEST_CASE("rsp_exact on parallel edges") {
  const auto G = parallel_pair();
  auto a = rsp_exact(G, Rat(2));
  REQUIRE(a);
  CHECK(a->edges == std::vector<std::size_t>{0});
  auto b = rsp_exact(G, Rat(3));
  REQUIRE(b);
  CHECK(b->edges == std::vector<std::size_t>{1});
  CHECK_FALSE(rsp_exact(G, Rat(1, 2)));
}

TEST_CASE("rsp_exact on the chain") {
  PartitionSpec spec{{1, 2, 3}, Rat(1, 2), 1};
  const auto G = chain_instance(spec);
  auto w = rsp_exact(G, Rat(27));
  REQUIRE(w);
  CHECK(w->point() == Point{27, 27});
  CHECK(is_valid_path(G, *w));
}

TEST_CASE("rsp_exact matches enumeration") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto G = random_bigraph(2 + seed % 7, 0.6, seed, 3, seed % 3 != 0);
    const auto en = enumerate_paths(G);
    for (const auto& p : en.points) {
      for (const Rat& C : {p.x(), p.x() * Rat(99, 100)}) {
        auto w = rsp_exact(G, C);
        auto want = naive_min_delay(en, C);
        REQUIRE(w.has_value() == want.has_value());
        if (w) {
          CHECK(w->total_delay == *want);
          CHECK(is_valid_path(G, *w));
        }
      }
    }
  }
}

TEST_CASE("rsp_fptas contract") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto G = random_bigraph(2 + seed % 7, 0.6, 500 + seed, 3);
    const auto en = enumerate_paths(G);
    if (en.points.empty()) {
      CHECK_FALSE(rsp_fptas(G, Rat(100), Rat(1, 2)));
      continue;
    }
    const Rat C = en.points[seed % en.points.size()].x();
    const Rat delta = seed % 2 ? Rat(1, 10) : Rat(1, 2);
    auto ex = rsp_exact(G, C);
    auto ap = rsp_fptas(G, C, delta);
    REQUIRE(ex);
    REQUIRE(ap);
    CHECK(ap->total_cost <= C);
    CHECK(ap->total_delay <= (Rat(1) + delta) * ex->total_delay);
    CHECK(is_valid_path(G, *ap));
    CHECK_FALSE(rsp_fptas(G, C / Rat(1000), delta).has_value() != rsp_exact(G, C / Rat(1000)).has_value());
  }
}

TEST_CASE("rsp_fptas lossless regime") {
  auto G = parallel_pair();
  // Integer delays, delta = h / (B0 * 2^J): scaling never rounds.
  const Rat delta = Rat(1) / (Rat(1) * Rat::pow2(5));
  for (const Rat& C : {Rat(1), Rat(2), Rat(3), Rat(10)}) {
    auto a = rsp_fptas(G, C, delta);
    auto b = rsp_exact(G, C);
    REQUIRE(a);
    CHECK(a->total_delay == b->total_delay);
  }
}

TEST_CASE("dual_fptas contract") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto G = random_bigraph(2 + seed % 7, 0.6, 900 + seed, 3);
    const auto en = enumerate_paths(G);
    if (en.points.empty()) continue;
    const Rat D = en.points[seed % en.points.size()].y();
    const Rat delta(1, 4);
    auto ex = rsp_exact_dual(G, D);
    auto ap = dual_fptas(G, D, delta);
    REQUIRE(ex);
    REQUIRE(ap);
    CHECK(ap->total_delay <= (Rat(1) + delta) * D);
    CHECK(ap->total_cost <= ex->total_cost);
    CHECK(is_valid_path(G, *ap));
  }
}

TEST_CASE("bsp oracles") {
  PartitionSpec spec{{1, 2, 3}, Rat(1, 2), 1};
  const auto G = chain_instance(spec);
  auto o = bsp_oracles(G, BspMode::kExact);
  auto a = o.restrict_y->restrict(Rat(0), Rat(36));
  REQUIRE(a);
  CHECK(a->point.y() == Rat(18));
  CHECK_FALSE(o.restrict_y->restrict(Rat(0), Rat(1)));
  CHECK_FALSE(o.dual->dual_restrict(Rat(0), Rat(1)));
}

TEST_CASE("reduction dual mode equals direct dual mode") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto G = random_bigraph(2 + seed % 6, 0.6, 1500 + seed, 3);
    const auto en = enumerate_paths(G);
    auto direct = bsp_oracles(G, BspMode::kExact, BspDualMode::kDirect);
    auto red = bsp_oracles(G, BspMode::kExact, BspDualMode::kReduction);
    for (const auto& p : en.points) {
      auto a = direct.dual->dual_restrict(Rat(0), p.y());
      auto b = red.dual->dual_restrict(Rat(0), p.y());
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->point.x() == b->point.x());
    }
  }
}

TEST_CASE("bsp_two_approx") {
  const Rat eps(1, 2);
  for (const auto& [A, opt] : std::vector<std::pair<std::vector<long>, std::size_t>>{{{1, 2, 3}, 1}, {{1, 1, 3}, 2}}) {
    const auto G = chain_instance({A, eps, 1});
    const auto en = enumerate_paths(G);
    auto rep = bsp_two_approx(G, eps);
    CHECK(certify(rep, en.points, eps));
    CHECK(brute::opt_eps(en.points, eps) == opt);
    CHECK(rep.result.size() <= 2 * opt);
  }
}

TEST_CASE("bsp_two_approx on random graphs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto G = random_bigraph(2 + seed % 7, 0.6, 3000 + seed, 3);
    const auto en = enumerate_paths(G);
    const Rat eps(1, 3);
    auto rep = bsp_two_approx(G, eps);
    if (en.points.empty()) {
      CHECK(rep.empty_feasible_set);
      continue;
    }
    CHECK(certify(rep, en.points, eps));
    CHECK(rep.result.size() <= 2 * brute::opt_eps(en.points, eps));
    for (std::size_t i = 0; i < rep.result.size(); ++i) {
      CHECK(is_valid_path(G, {rep.witnesses[i], rep.result[i].x(), rep.result[i].y()}));
    }
  }
}

TEST_CASE("enumerate_paths") {
  CHECK(enumerate_paths(parallel_pair()).points.size() == 2);
  BiGraph cut;
  cut.node_count = 3;
  cut.source = 0;
  cut.sink = 2;
  cut.edges.push_back({0, 1, Rat(1), Rat(1)});
  CHECK(enumerate_paths(cut).points.empty());
  const auto G = chain_instance({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, Rat(1, 2), 1});
  CHECK_THROWS_AS(enumerate_paths(G, 100), GuardExceeded);
}

TEST_CASE("graph text format") {
  const auto G = random_bigraph(6, 0.5, 42, 5);
  std::stringstream ss;
  write_graph(ss, G);
  const auto H = read_graph(ss);
  CHECK(H.node_count == G.node_count);
  CHECK(H.source == G.source);
  CHECK(H.sink == G.sink);
  REQUIRE(H.edges.size() == G.edges.size());
  for (std::size_t i = 0; i < G.edges.size(); ++i) {
    CHECK(H.edges[i].from == G.edges[i].from);
    CHECK(H.edges[i].to == G.edges[i].to);
    CHECK(H.edges[i].cost == G.edges[i].cost);
    CHECK(H.edges[i].delay == G.edges[i].delay);
  }
  std::istringstream bad("3 0 2\n0 1 1 1\n1 2 1 zero\n");
  try {
    read_graph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream neg("2 0 1\n0 1 -1 1\n");
  CHECK_THROWS_AS(read_graph(neg), ParseError);
}

TEST_CASE("cycles do not break the exact solver") {
  BiGraph G;
  G.node_count = 3;
  G.source = 0;
  G.sink = 2;
  G.edges.push_back({0, 1, Rat(1), Rat(1)});
  G.edges.push_back({1, 0, Rat(1), Rat(1)});
  G.edges.push_back({1, 2, Rat(1), Rat(1)});
  G.edges.push_back({0, 2, Rat(5), Rat(5)});
  auto w = rsp_exact(G, Rat(10));
  REQUIRE(w);
  CHECK(w->point() == Point{2, 2});
}
