#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "../support/brute.hpp"
#include "paretoapx/errors.hpp"
#include "paretoapx/generators.hpp"
#include "paretoapx/point.hpp"
#include "paretoapx/rational.hpp"
#include "paretoapx/text_io.hpp"

using namespace paretoapx;

TEST_CASE("rational parsing and printing") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK(Rat::parse("7").str() == "7");
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational helpers") {
  CHECK(Rat::pow2(-3) == Rat(1, 8));
  CHECK(Rat::pow2(4) == Rat(16));
  CHECK(pow(Rat(11, 10), 3) == Rat(1331, 1000));
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(7, 2).ceil() == 4);
  Rat r;
  CHECK(exact_root(Rat(1331, 1000), 3, r));
  CHECK(r == Rat(11, 10));
  CHECK_FALSE(exact_root(Rat(2), 2, r));
  const Rat s = simplest_between(Rat(1, 3), Rat(1, 2));
  CHECK(Rat(1, 3) < s);
  CHECK(s < Rat(1, 2));
  CHECK(s == Rat(2, 5));
  CHECK(simplest_between(Rat(1, 2), Rat(5, 2)) == Rat(1));
}

TEST_CASE("dominates") {
  CHECK(dominates(Point{1, 1}, Point{1, 1}));
  CHECK_FALSE(dominates(Point{1, 2}, Point{2, 1}));
  CHECK(dominates(Point{1, 1}, Point{2, 3}));
}

TEST_CASE("covers") {
  CHECK(covers(Point{1, 1}, Point{1, 1}, Rat(1)));
  CHECK_FALSE(covers(Point{2, 1}, Point{1, 1}, Rat(3, 2)));
  const Rat M(4), eps(1, 2);
  const auto [P, Pp] = prop31_points(M, eps);
  // p (1+eps)-covers q and r.
  CHECK(covers(P[0], P[1], Rat(1) + eps));
  CHECK(covers(P[0], P[2], Rat(1) + eps));
  CHECK_THROWS_AS(covers(Point{1, 1}, Point{1, 1}, Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("pareto_filter") {
  PointSet P({Point{1, 2}, Point{2, 1}, Point{2, 2}});
  CHECK(pareto_filter(P) == PointSet({Point{1, 2}, Point{2, 1}}));
  CHECK(pareto_filter(PointSet({Point{1, 1}})) == PointSet({Point{1, 1}}));
  const auto paths = [] {
    PartitionSpec spec{{1, 2, 3}, Rat(1, 2), 1};
    return enumerate_paths(chain_instance(spec)).points;
  }();
  // Duplicate path values collapse to one; every distinct value stays.
  CHECK(pareto_filter(paths).size() == brute::undominated(paths).size());
  CHECK(pareto_filter(paths).size() == 7);
}

TEST_CASE("pareto_filter matches the naive filter") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto P = random_points(1 + seed % 20, 2 + seed % 3, seed, 3);
    CHECK(pareto_filter(P) == brute::undominated(P));
  }
}

TEST_CASE("ratio and additive distance") {
  const Point p{3, 5};
  CHECK(ratio_distance(p, p) == Rat(1));
  CHECK(ratio_distance(Point{2, 1}, Point{1, 1}) == Rat(2));
  CHECK(ratio_distance(Point{1, 3}, Point{2, 1}) == Rat(3));
  CHECK(additive_distance(p, p) == Rat(0));
  CHECK(additive_distance(Point{3, 1}, Point{1, 1}) == Rat(2));
  CHECK(additive_distance(Point{1, 1}, Point{5, 5}) == Rat(0));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto P = random_points(2, 3, seed, 4);
    const Rat r = ratio_distance(P[0], P[1]);
    CHECK(covers(P[0], P[1], r));
    if (Rat(1) < r) CHECK_FALSE(covers(P[0], P[1], (Rat(1) + r) / Rat(2)));
  }
}

TEST_CASE("is_eps_pareto") {
  const PointSet P({Point{1, 1}, Point{Rat(21, 20), Rat(21, 20)}});
  auto cert = is_eps_pareto(PointSet({Point{1, 1}}), P, Rat(1, 10));
  REQUIRE(cert);
  CHECK(check_certificate(*cert, PointSet({Point{1, 1}}), P));

  const auto [Q5, Qp] = prop31_points(Rat(4), Rat(1, 2));
  const PointSet qr({Q5[1], Q5[2]});
  auto c2 = is_eps_pareto(qr, Q5, Rat(1, 2));
  REQUIRE(c2);
  CHECK(check_certificate(*c2, qr, Q5));

  CHECK_FALSE(is_eps_pareto(PointSet(2), P, Rat(1, 10)));
}

TEST_CASE("check_certificate rejects a bad assignment") {
  const PointSet P({Point{1, 2}, Point{2, 1}});
  const PointSet Q({Point{1, 2}, Point{2, 1}});
  auto cert = is_eps_pareto(Q, P, Rat(1, 10));
  REQUIRE(cert);
  cert->assignments[0] = 1;
  CHECK_FALSE(check_certificate(*cert, Q, P));
}

TEST_CASE("bit_width") {
  CHECK(bit_width(PointSet({Point{1, 1}})) == 1);
  CHECK(bit_width(PointSet({Point{Rat(3, 2), Rat(1)}})) == 2);
  CHECK(bit_width(PointSet({Point{Rat(1024), Rat(1)}})) == 11);
}

TEST_CASE("point construction rejects bad input") {
  CHECK_THROWS_AS(Point{Rat(1)}, std::invalid_argument);
  CHECK_THROWS_AS((Point{Rat(0), Rat(1)}), std::invalid_argument);
  PointSet P(2);
  CHECK_THROWS_AS(P.push_back(Point{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("text point format round-trips") {
  const auto P = random_points(12, 3, 99, 6);
  std::stringstream ss;
  write_points(ss, P);
  const auto Q = read_points(ss);
  CHECK(P == Q);
}

TEST_CASE("text point parse errors carry the line") {
  std::istringstream bad("# header\n1 2\n\n3 x\n");
  try {
    read_points(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  std::istringstream ragged("1 2\n1 2 3\n");
  CHECK_THROWS_AS(read_points(ragged), ParseError);
}

TEST_CASE("guard override only raises") {
  setenv("PARETO_GUARD_MAX", "5", 1);
  CHECK(effective_guard(100) == 100);
  setenv("PARETO_GUARD_MAX", "500", 1);
  CHECK(effective_guard(100) == 500);
  unsetenv("PARETO_GUARD_MAX");
  CHECK(effective_guard(100) == 100);
}
