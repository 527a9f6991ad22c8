#include "paretoapx/multi_grid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

#include "paretoapx/bi_engine.hpp"
#include "paretoapx/errors.hpp"

namespace paretoapx {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> coverage_masks(const PointSet& P, const Rat& eps, bool dual) {
  if (P.size() > 64) throw std::invalid_argument("shatter search supports at most 64 points");
  const Rat rho = Rat(1) + eps;
  std::vector<Mask> sets;
  for (std::size_t q = 0; q < P.size(); ++q) {
    Mask s = 0;
    for (std::size_t p = 0; p < P.size(); ++p) {
      const bool in = dual ? covers(P[p], P[q], rho) : covers(P[q], P[p], rho);
      if (in) s |= Mask{1} << p;
    }
    sets.push_back(s);
  }
  return sets;
}

bool shattered(Mask X, int size, const std::vector<Mask>& sets) {
  std::set<Mask> traces{0};
  for (Mask s : sets) traces.insert(s & X);
  return traces.size() == (std::size_t{1} << size);
}

// Tries every subset of the given size; true if one is shattered.
bool any_shattered(std::size_t n, int size, const std::vector<Mask>& sets) {
  std::vector<std::size_t> idx(size);
  std::function<bool(std::size_t, int, Mask)> rec = [&](std::size_t from, int left, Mask X) {
    if (left == 0) return shattered(X, size, sets);
    for (std::size_t i = from; i + left <= n; ++i) {
      if (rec(i + 1, left - 1, X | (Mask{1} << i))) return true;
    }
    return false;
  };
  return rec(0, size, 0);
}

int vc_dim(const PointSet& P, const Rat& eps, int limit, bool dual) {
  if (eps.sign() < 0) throw std::invalid_argument("eps must be >= 0");
  const auto sets = coverage_masks(P, eps, dual);
  const int cap = std::min<int>(limit, static_cast<int>(P.size()));
  int best = 0;
  for (int s = 1; s <= cap; ++s) {
    if (!any_shattered(P.size(), s, sets)) break;
    best = s;
  }
  return best;
}

}  // namespace

GridSpec make_grid(int m, const Rat& delta, std::size_t d) {
  if (delta.sign() <= 0) throw std::invalid_argument("grid delta must be positive");
  GridSpec g;
  g.delta_prime = root_slack(Rat(1) + delta, 2);
  g.lo = Rat::pow2(-m);
  g.hi = Rat::pow2(m);
  g.d = d;
  const Rat step = Rat(1) + g.delta_prime;
  const Rat span = Rat::pow2(2 * m);
  // K = min{K : step^K >= 2^2m}; values j = 1..K+1.
  std::size_t K = 0;
  Rat acc(1);
  while (acc < span) {
    acc *= step;
    ++K;
  }
  Rat v = g.lo;
  for (std::size_t j = 1; j <= K + 1; ++j) {
    v *= step;
    g.values.push_back(v);
  }
  return g;
}

GridResult gap_grid_run(const GapOracle& g, const Rat& delta) {
  const std::size_t d = g.dimension();
  GridResult out;
  out.grid = make_grid(g.value_bits(), delta, d);
  const auto& vals = out.grid.values;
  PointSet found(d);
  std::vector<Witness> wit;
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<Rat> b;
    for (auto i : idx) b.push_back(vals[i]);
    ++out.calls.gap_calls;
    if (auto a = g.gap(Point(std::move(b)), out.grid.delta_prime)) {
      if (std::find(found.begin(), found.end(), a->point) == found.end()) {
        found.push_back(a->point);
        wit.push_back(a->witness);
      }
    }
    std::size_t pos = 0;
    while (pos < d && ++idx[pos] == vals.size()) idx[pos++] = 0;
    if (pos == d) break;
  }
  out.points = PointSet(d);
  for (auto i : pareto_indices(found)) {
    out.points.push_back(found[i]);
    out.witnesses.push_back(wit[i]);
  }
  return out;
}

PointSet gap_grid_pareto(const GapOracle& g, const Rat& delta) { return gap_grid_run(g, delta).points; }

Rat choose_delta_for(const Rat& eps, const Rat& eps_prime) {
  if (eps.sign() < 0) throw std::invalid_argument("eps must be >= 0");
  if (!(eps < eps_prime)) throw std::invalid_argument("eps_prime must exceed eps");
  return root_slack((Rat(1) + eps_prime) / (Rat(1) + eps), 2);
}

std::vector<std::size_t> greedy_cover_indices(const PointSet& targets, const PointSet& candidates, const Rat& rho) {
  const std::size_t n = targets.size();
  std::vector<std::vector<std::size_t>> covered(candidates.size());
  std::vector<bool> reachable(n, false);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t t = 0; t < n; ++t) {
      if (covers(candidates[c], targets[t], rho)) {
        covered[c].push_back(t);
        reachable[t] = true;
      }
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!reachable[t]) throw ContractViolation("greedy cover: a target has no candidate within the ratio");
  }
  std::vector<bool> done(n, false);
  std::size_t left = n;
  std::vector<std::size_t> chosen;
  while (left > 0) {
    std::size_t best = 0;
    std::size_t gain_best = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (auto t : covered[c]) gain += done[t] ? 0 : 1;
      if (gain > gain_best) {
        gain_best = gain;
        best = c;
      }
    }
    chosen.push_back(best);
    for (auto t : covered[best]) {
      if (!done[t]) {
        done[t] = true;
        --left;
      }
    }
  }
  return chosen;
}

PointSet greedy_cover(const std::vector<std::size_t>& A, const PointSet& P, const Rat& rho) {
  PointSet targets(P.dim());
  for (auto i : A) {
    if (i >= P.size()) throw std::invalid_argument("target index out of range");
    targets.push_back(P[i]);
  }
  PointSet out(P.dim());
  for (auto c : greedy_cover_indices(targets, P, rho)) out.push_back(P[c]);
  return out;
}

std::size_t exact_min_cover(const PointSet& targets, const PointSet& candidates, const Rat& rho, std::size_t guard) {
  if (targets.empty()) return 0;
  const std::size_t n = candidates.size();
  const std::size_t limit = effective_guard(guard);
  std::vector<std::vector<bool>> hit(n, std::vector<bool>(targets.size()));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t t = 0; t < targets.size(); ++t) hit[c][t] = covers(candidates[c], targets[t], rho);
  }
  std::size_t examined = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
      if (++examined > limit) throw GuardExceeded("exact cover search exceeds its guard");
      bool all = true;
      for (std::size_t t = 0; t < targets.size() && all; ++t) {
        all = std::any_of(cur.begin(), cur.end(), [&](std::size_t c) { return hit[c][t]; });
      }
      if (all) return k;
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  throw ContractViolation("candidates cannot cover every target");
}

std::size_t opt_eps_exact(const PointSet& P, const Rat& eps, std::size_t guard) {
  const PointSet par = pareto_filter(P);
  return exact_min_cover(par, par, Rat(1) + eps, guard);
}

MultiReport eps_prime_pareto(const GapOracle& g, const Rat& eps, const Rat& eps_prime) {
  MultiReport rep;
  rep.delta = choose_delta_for(eps, eps_prime);
  auto grid = gap_grid_run(g, rep.delta);
  rep.oracle_calls = grid.calls;
  rep.grid_set = grid.points;
  rep.cover_ratio = (Rat(1) + eps) * (Rat(1) + rep.delta);
  rep.result = PointSet(g.dimension());
  for (auto c : greedy_cover_indices(grid.points, grid.points, rep.cover_ratio)) {
    rep.result.push_back(grid.points[c]);
    rep.witnesses.push_back(grid.witnesses[c]);
  }
  return rep;
}

int vc_dim_primal(const PointSet& P, const Rat& eps, int limit) { return vc_dim(P, eps, limit, false); }

int vc_dim_dual(const PointSet& P, const Rat& eps, int limit) { return vc_dim(P, eps, limit, true); }

}  // namespace paretoapx
