#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <optional>

#include "paretoapx/generators.hpp"
#include "paretoapx/oracle.hpp"

using namespace paretoapx;

namespace {

// Naive min y subject to x <= C.
std::optional<Point> naive_restrict(const PointSet& P, const Rat& C, bool strict) {
  std::optional<Point> best;
  for (const auto& p : P) {
    const bool ok = strict ? p.x() < C : p.x() <= C;
    if (!ok) continue;
    if (!best || p.y() < best->y() || (p.y() == best->y() && p.x() < best->x())) best = p;
  }
  return best;
}

// Naive min x subject to y <= D.
std::optional<Point> naive_dual(const PointSet& P, const Rat& D) {
  std::optional<Point> best;
  for (const auto& p : P) {
    if (D < p.y()) continue;
    if (!best || p.x() < best->x() || (p.x() == best->x() && p.y() < best->y())) best = p;
  }
  return best;
}

const PointSet kThree({Point{1, 4}, Point{2, 3}, Point{3, 1}});

}  // namespace

TEST_CASE("explicit restrict examples") {
  auto o = exact_oracle_from_points(kThree);
  // Restrict over the y bound is the swapped handle.
  auto a = o.restrict_x->restrict(Rat(0), Rat(3));
  REQUIRE(a);
  CHECK(a->point == Point{2, 3});
  CHECK_FALSE(o.restrict_x->restrict(Rat(0), Rat(1, 2)));
  auto one = exact_oracle_from_points(PointSet({Point{1, 1}}));
  auto s = one.restrict_x->restrict(Rat(0), Rat(1));
  REQUIRE(s);
  CHECK(s->point == Point{1, 1});
}

TEST_CASE("explicit dual restrict examples") {
  auto o = exact_oracle_from_points(kThree);
  // min y subject to x <= 2, through the dual handle over the swapped axes.
  auto a = o.restrict_y->restrict(Rat(0), Rat(2));
  REQUIRE(a);
  CHECK(a->point == Point{2, 3});
  CHECK_FALSE(o.restrict_y->restrict(Rat(0), Rat(1, 2)));
  auto d = o.dual->dual_restrict(Rat(0), Rat(3));
  REQUIRE(d);
  CHECK(d->point == Point{2, 3});
}

TEST_CASE("explicit oracle small examples") {
  const PointSet P({Point{1, 2}, Point{2, 1}});
  ExplicitOracle e(P);
  const RestrictOracle& r = e;
  const GapOracle& g = e;
  auto a = r.restrict(Rat(0), Rat(1));
  REQUIRE(a);
  CHECK(a->point == Point{1, 2});
  CHECK_FALSE(g.gap(Point{1, 1}, Rat(1, 2)));
  auto b = g.gap(Point{2, 2}, Rat(1, 2));
  REQUIRE(b);
  CHECK((b->point == Point{1, 2} || b->point == Point{2, 1}));
  CHECK_THROWS_AS(g.gap(Point{1, 1, 1}, Rat(1)), std::invalid_argument);
}

TEST_CASE("explicit oracles agree with naive scans") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto P = random_points(1 + seed % 12, 2, seed, 3);
    auto o = exact_oracle_from_points(P);
    for (const auto& q : P) {
      for (const Rat& C : {q.x(), q.x() * Rat(9, 10)}) {
        for (bool strict : {false, true}) {
          auto a = o.restrict_y->restrict(Rat(0), C, strict ? Bound::kStrict : Bound::kInclusive);
          auto b = naive_restrict(P, C, strict);
          REQUIRE(a.has_value() == b.has_value());
          if (a) CHECK(a->point == *b);
        }
      }
      auto d = o.dual->dual_restrict(Rat(0), q.y());
      auto nd = naive_dual(P, q.y());
      REQUIRE(d.has_value() == nd.has_value());
      if (d) CHECK(d->point == *nd);
    }
  }
}

TEST_CASE("restrict from dual restrict matches direct restrict") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto P = random_points(1 + seed % 10, 2, 500 + seed, 2 + seed % 6);
    auto e = std::make_shared<ExplicitOracle>(P);
    RestrictViaDualRestrict red(e);
    const RestrictOracle& direct = *e;
    for (const auto& q : P) {
      for (Bound kind : {Bound::kInclusive, Bound::kStrict}) {
        auto a = red.restrict(Rat(0), q.x(), kind);
        auto b = direct.restrict(Rat(0), q.x(), kind);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->point.y() == b->point.y());
      }
    }
  }
}

TEST_CASE("dual restrict from restrict matches direct") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto P = random_points(1 + seed % 10, 2, 900 + seed, 2 + seed % 6);
    auto e = std::make_shared<ExplicitOracle>(P);
    DualRestrictViaRestrict red(e);
    const DualRestrictOracle& direct = *e;
    for (const auto& q : P) {
      auto a = red.dual_restrict(Rat(0), q.y());
      auto b = direct.dual_restrict(Rat(0), q.y());
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->point.x() == b->point.x());
    }
    CHECK(red.dual_calls().dual_calls == P.size());
  }
}

TEST_CASE("reduction call count grows linearly in m") {
  for (int bits = 2; bits <= 12; bits += 2) {
    const auto P = random_points(6, 2, 77, bits);
    ExplicitOracle e(P);
    CallCounts cc;
    dual_restrict_via_restrict(e, P[0].y(), Rat(0), &cc);
    CHECK(cc.total() <= static_cast<std::size_t>(4 * e.value_bits() + 4));
  }
}

TEST_CASE("negative delta is rejected and calls are counted") {
  ExplicitOracle e(kThree);
  const RestrictOracle& r = e;
  CHECK_THROWS_AS(r.restrict(Rat(-1), Rat(1)), std::invalid_argument);
  r.restrict(Rat(0), Rat(1));
  r.restrict(Rat(0), Rat(2));
  CHECK(r.restrict_calls().restrict_calls == 2);
}

TEST_CASE("adversarial restrict can return p_q") {
  const Rat M(4), eps(1, 2);
  const auto [P, Pp] = prop31_points(M, eps);
  const Rat delta(1, 4);  // >= 1/M
  auto o = adversarial_wrapper(P, delta, {});
  // Minimize x subject to y <= C for C in [y(p), y(p_r)).
  for (const Rat& C : {M, M + Rat(1, 2)}) {
    auto a = o.restrict_x->restrict(delta, C);
    REQUIRE(a);
    CHECK(a->point == P[3]);
  }
}

TEST_CASE("adversary with zero slack behaves like the exact oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto P = random_points(2 + seed % 9, 2, 300 + seed, 3);
    auto adv = adversarial_wrapper(P, Rat(0), {});
    auto ex = exact_oracle_from_points(P);
    for (const auto& q : P) {
      auto a = adv.restrict_y->restrict(Rat(1, 2), q.x());
      auto b = ex.restrict_y->restrict(Rat(0), q.x());
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->point.y() == b->point.y());
      auto c = adv.dual->dual_restrict(Rat(1, 2), q.y());
      auto d = ex.dual->dual_restrict(Rat(0), q.y());
      REQUIRE(c.has_value() == d.has_value());
      if (c) CHECK(c->point.x() == d->point.x());
    }
  }
}

TEST_CASE("adversarial answers stay legal") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto P = random_points(2 + seed % 9, 2, 600 + seed, 3);
    const Rat delta(1, 3);
    for (auto kind : {AdversaryPolicy::Kind::kWorstObjective, AdversaryPolicy::Kind::kWorstBound}) {
      auto adv = adversarial_wrapper(P, delta, {kind, {}});
      for (const auto& q : P) {
        auto a = adv.restrict_y->restrict(delta, q.x());
        auto best = naive_restrict(P, q.x(), false);
        REQUIRE(a);
        CHECK(a->point.x() <= q.x());
        CHECK(a->point.y() <= (Rat(1) + delta) * best->y());
        auto d = adv.dual->dual_restrict(delta, q.y());
        auto nd = naive_dual(P, q.y());
        REQUIRE(d);
        CHECK(d->point.x() <= nd->x());
        CHECK(d->point.y() <= (Rat(1) + delta) * q.y());
      }
    }
  }
}
