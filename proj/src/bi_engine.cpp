#include "paretoapx/bi_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "paretoapx/errors.hpp"

namespace paretoapx {

namespace {

// Iteration cap: x drops by 1+eps per step inside [2^-m, 2^m].
std::size_t iteration_cap(int m, const Rat& eps) {
  const double per_step = std::log1p(eps.to_double());
  return static_cast<std::size_t>(std::ceil(2.0 * m * std::log(2.0) / per_step)) + 3;
}

void add(EngineReport& rep, const Solution& s) {
  rep.result.push_back(s.point);
  rep.witnesses.push_back(s.witness);
}

Solution must(const OracleAnswer& a, const char* what) {
  if (!a) throw ContractViolation(std::string("oracle answered NO where a solution must exist: ") + what);
  return *a;
}

}  // namespace

Rat root_slack(const Rat& base, unsigned long k) {
  if (base <= Rat(1)) throw std::invalid_argument("root base must exceed 1");
  Rat exact;
  if (exact_root(base, k, exact)) return exact - Rat(1);
  auto attempt = [&](unsigned long s) {
    // floor(base^(1/k) * 2^s) / 2^s - 1
    const Rat scaled = base * pow(Rat::pow2(static_cast<long>(s)), k);
    const mpz_class r = iroot_floor(scaled.floor(), k);
    return Rat(r, mpz_class(1) << s) - Rat(1);
  };
  unsigned long s = 1;
  while (attempt(s).sign() <= 0) ++s;
  return attempt(s + 3);
}

Rat delta_from_eps(const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  return root_slack(Rat(1) + eps, 3);
}

EngineReport two_approx(const RestrictOracle& r, const DualRestrictOracle& dr, const Rat& eps,
                        const TwoApproxOptions& opts) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  const Rat one(1);
  const Rat delta = opts.delta ? *opts.delta : delta_from_eps(eps);
  if (delta.sign() <= 0 || one + eps < pow(one + delta, 3)) {
    throw std::invalid_argument("delta must satisfy 0 < delta and (1+delta)^3 <= 1+eps");
  }
  const int m = std::max(r.value_bits(), dr.value_bits());
  const Rat top = Rat::pow2(m);

  EngineReport rep;
  rep.state.delta = delta;
  rep.state.eps = eps;
  auto R = [&](const Rat& d, const Rat& c, Bound k) {
    ++rep.oracle_calls.restrict_calls;
    return r.restrict(d, c, k);
  };
  auto DR = [&](const Rat& d, const Rat& c) {
    ++rep.oracle_calls.dual_calls;
    return dr.dual_restrict(d, c);
  };

  if (!R(one, top, Bound::kInclusive)) {
    rep.empty_feasible_set = true;
    return rep;
  }
  EngineState& st = rep.state;
  st.q_prime.push_back(must(R(delta, top, Bound::kInclusive), "q'_1"));
  st.x_min = must(DR(one, top), "q_left").point.x();
  st.y_bar.push_back(st.q_prime.back().point.y() * (one + delta));
  st.q.push_back(must(DR(delta, st.y_bar.back()), "q_1"));
  st.x_bar.push_back(st.q.back().point.x() / (one + eps));
  add(rep, st.q.back());
  rep.iterations = 1;

  const std::size_t cap = iteration_cap(m, eps);
  const Rat grow = (one + eps) / (one + delta);
  while (st.x_bar.back() > st.x_min) {
    if (rep.iterations > cap) throw ContractViolation("engine exceeded its iteration bound");
    st.q_prime.push_back(must(R(delta, st.x_bar.back(), Bound::kStrict), "q'_i"));
    st.y_bar.push_back(grow * max(st.y_bar.back(), st.q_prime.back().point.y() / (one + delta)));
    st.q.push_back(must(DR(delta, st.y_bar.back()), "q_i"));
    st.x_bar.push_back(st.q.back().point.x() / (one + eps));
    add(rep, st.q.back());
    ++rep.iterations;
  }
  return rep;
}

EngineReport greedy_exact(const RestrictOracle& r, const DualRestrictOracle& dr, const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (!r.honors_exact() || !dr.honors_exact()) throw Unsupported("exact greedy needs oracles that honor delta = 0");
  const Rat zero(0);
  const Rat f = Rat(1) + eps;
  const int m = std::max(r.value_bits(), dr.value_bits());

  EngineReport rep;
  rep.state.delta = zero;
  rep.state.eps = eps;
  EngineState& st = rep.state;
  auto step = [&](const OracleAnswer& probe) {
    ++rep.oracle_calls.dual_calls;
    st.q_prime.push_back(*probe);
    st.y_bar.push_back(f * probe->point.y());
    st.q.push_back(must(dr.dual_restrict(zero, st.y_bar.back()), "leftmost cover"));
    st.x_bar.push_back(st.q.back().point.x() / f);
    add(rep, st.q.back());
    ++rep.iterations;
  };

  ++rep.oracle_calls.restrict_calls;
  OracleAnswer probe = r.restrict(zero, Rat::pow2(m));
  if (!probe) {
    rep.empty_feasible_set = true;
    return rep;
  }
  step(probe);
  const std::size_t cap = iteration_cap(m, eps);
  for (;;) {
    ++rep.oracle_calls.restrict_calls;
    probe = r.restrict(zero, st.x_bar.back(), Bound::kStrict);
    if (!probe) break;
    if (rep.iterations > cap) throw ContractViolation("greedy exceeded its iteration bound");
    step(probe);
  }
  return rep;
}

EngineReport greedy_approx(const RestrictOracle& r_y, const RestrictOracle& r_x, const Rat& eps,
                           const Rat& delta) {
  if (delta.sign() <= 0 || !(delta < eps)) throw std::invalid_argument("greedy needs 0 < delta < eps");
  const Rat one(1);
  const Rat f = one + eps;
  const Rat g = one + delta;
  const int m = std::max(r_y.value_bits(), r_x.value_bits());
  const Rat top = Rat::pow2(m);

  EngineReport rep;
  EngineState& st = rep.state;
  st.delta = delta;
  st.eps = eps;
  auto RY = [&](const Rat& c, Bound k) {
    ++rep.oracle_calls.restrict_calls;
    return r_y.restrict(delta, c, k);
  };
  auto RX = [&](const Rat& c) {
    ++rep.oracle_calls.restrict_calls;
    return r_x.restrict(delta, c);
  };

  OracleAnswer first = RY(top, Bound::kInclusive);
  if (!first) {
    rep.empty_feasible_set = true;
    return rep;
  }
  // Lower bounds on y_min and x_min from the approximate answers.
  const Rat y_lo = first->point.y() / g;
  st.x_min = must(RX(top), "leftmost").point.x() / g;
  st.q_prime.push_back(*first);
  st.y_bar.push_back(f * y_lo);
  st.q.push_back(must(RX(st.y_bar.back()), "q_1"));
  st.x_bar.push_back(st.q.back().point.x() / f);
  add(rep, st.q.back());
  rep.iterations = 1;

  const std::size_t cap = iteration_cap(m, eps);
  while (st.x_min < st.x_bar.back()) {
    OracleAnswer probe = RY(st.x_bar.back(), Bound::kStrict);
    if (!probe) break;
    if (rep.iterations > cap) throw ContractViolation("greedy exceeded its iteration bound");
    st.q_prime.push_back(*probe);
    st.y_bar.push_back(f * max(st.y_bar.back(), probe->point.y() / g));
    st.q.push_back(must(RX(st.y_bar.back()), "q_i"));
    st.x_bar.push_back(st.q.back().point.x() / f);
    add(rep, st.q.back());
    ++rep.iterations;
  }
  return rep;
}

EngineReport prune_redundant(const EngineReport& report, const EngineState& state) {
  if (state.q.size() != report.result.size()) {
    throw std::invalid_argument("engine state does not match the report");
  }
  EngineReport out;
  out.oracle_calls = report.oracle_calls;
  out.iterations = report.iterations;
  out.empty_feasible_set = report.empty_feasible_set;
  out.state = state;
  const Rat g = Rat(1) + state.delta;
  const std::size_t r = state.q.size();
  for (std::size_t i = 0; i < r; ++i) {
    // 0-based even i is q_{2j-1}; its partner is i+1.
    const bool drop = i % 2 == 0 && i + 1 < r && state.q[i + 1].point.y() <= g * state.y_bar[i];
    if (!drop) add(out, state.q[i]);
  }
  return out;
}

bool certify(EngineReport& report, const PointSet& solutions, const Rat& eps) {
  report.certificate = is_eps_pareto(report.result, solutions, eps);
  return report.certificate.has_value();
}

}  // namespace paretoapx
