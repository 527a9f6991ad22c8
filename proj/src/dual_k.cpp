#include "paretoapx/dual_k.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "paretoapx/errors.hpp"
#include "paretoapx/multi_grid.hpp"

namespace paretoapx {

namespace {

using Index = std::vector<std::size_t>;

bool covered_by_any(const PointSet& P, const Index& C, const Point& p, const Rat& rho) {
  for (auto c : C) {
    if (covers(P[c], p, rho)) return true;
  }
  return false;
}

Index without_covered(const PointSet& P, const Index& S, const Index& C, const Rat& rho) {
  Index out;
  for (auto s : S) {
    if (!covered_by_any(P, C, P[s], rho)) out.push_back(s);
  }
  return out;
}

PointSet gather(const PointSet& P, const Index& idx) {
  PointSet out(P.dim());
  for (auto i : idx) out.push_back(P[i]);
  return out;
}

Index cover_step(const PointSet& P, const Index& S, const Rat& rho) {
  return greedy_cover_indices(gather(P, S), P, rho);
}

std::size_t index_of(const PointSet& P, const Point& p) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i] == p) return i;
  }
  throw std::invalid_argument("point is not a member of P");
}

Rat worst_ratio(const PointSet& P, const Index& Q) {
  Rat worst(1);
  for (const auto& p : P) {
    std::optional<Rat> best;
    for (auto q : Q) {
      Rat r = ratio_distance(P[q], p);
      if (!best || r < *best) best = r;
    }
    worst = max(worst, *best);
  }
  return worst;
}

std::size_t closest(const PointSet& P, const Index& S, const Point& p) {
  std::size_t best = S.front();
  for (auto s : S) {
    if (ratio_distance(P[s], p) < ratio_distance(P[best], p)) best = s;
  }
  return best;
}

struct Attempt {
  Index C, S0, S0_hat, S1, S1_hat, S2;
  std::size_t a_size = 0;
  std::size_t k_left = 0;
  int rounds = 0;
};

std::optional<Attempt> attempt(const PointSet& P, std::size_t k, const Rat& rho) {
  Attempt at;
  const Rat rho2 = rho * rho;
  Index A(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) A[i] = i;
  std::size_t kl = k;
  while (kl > 0 && !A.empty()) {
    auto q = find_ccv(P, A, rho);
    if (!q) break;
    at.C.push_back(*q);
    Index rest;
    for (auto a : A) {
      if (!covers(P[*q], P[a], rho2)) rest.push_back(a);
    }
    A = std::move(rest);
    --kl;
  }
  at.a_size = A.size();
  at.k_left = kl;
  if (A.empty()) return at;
  if (kl == 0) return std::nullopt;

  Index cand;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!covered_by_any(P, at.C, P[i], rho)) cand.push_back(i);
  }
  try {
    for (auto c : greedy_cover_indices(gather(P, A), gather(P, cand), rho)) at.S0.push_back(cand[c]);
    at.S0_hat = without_covered(P, at.S0, at.C, rho2);
    at.S1 = rec_cover(at.S0_hat, A, P, rho, kl, &at.rounds);
    at.S1_hat = without_covered(P, at.S1, at.C, rho2 * rho2);
    at.S2 = cover_step(P, at.S1_hat, rho2 * rho);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
  return at;
}

}  // namespace

Rat harmonic(const Rat& a) {
  if (a.sign() < 0) throw std::invalid_argument("harmonic needs a >= 0");
  const long fl = a.floor().get_si();
  Rat h(0);
  for (long i = 1; i <= fl; ++i) h += Rat(1, i);
  const Rat frac = a - Rat(fl);
  if (frac.sign() > 0) h += frac / Rat(fl + 1);
  return h;
}

int h_star(const Rat& b, const Rat& a) {
  if (!(Rat(1) < b)) throw std::invalid_argument("h_star needs b > 1");
  int i = 0;
  Rat x = a;
  while (b < x) {
    x = harmonic(x);
    ++i;
  }
  return i;
}

std::optional<std::size_t> find_ccv(const PointSet& P, const std::vector<std::size_t>& active, const Rat& rho) {
  for (auto q : active) {
    bool ok = true;
    for (std::size_t p = 0; p < P.size() && ok; ++p) {
      if (covers(P[p], P[q], rho) && !covers(P[q], P[p], rho)) ok = false;
    }
    if (ok) return q;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_ccv(const PointSet& A, const Rat& rho) {
  Index all(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) all[i] = i;
  return find_ccv(A, all, rho);
}

std::vector<std::size_t> rec_cover(const std::vector<std::size_t>& S, const std::vector<std::size_t>& A,
                                   const PointSet& P, const Rat& rho, std::size_t l, int* rounds) {
  const std::set<std::size_t> in_a(A.begin(), A.end());
  Index cur = S;
  int r = 0;
  while (3 * cur.size() > 4 * l) {
    Index next;
    for (auto c : cover_step(P, cur, rho)) {
      if (in_a.count(c)) next.push_back(c);
    }
    ++r;
    if (next.size() >= cur.size()) throw ContractViolation("recursive cover stopped shrinking");
    cur = std::move(next);
  }
  if (rounds) *rounds = r;
  return cur;
}

PointSet rec_cover(const PointSet& S, const PointSet& A, const PointSet& P, const Rat& rho, std::size_t l) {
  Index s, a;
  for (const auto& p : S) s.push_back(index_of(P, p));
  for (const auto& p : A) a.push_back(index_of(P, p));
  return gather(P, rec_cover(s, a, P, rho, l));
}

DualResult dual_k_explicit(const PointSet& P, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  DualResult res;
  res.chosen = PointSet(P.dim());
  if (P.empty()) return res;

  std::set<Rat> cands{Rat(1)};
  for (const auto& q : P) {
    for (const auto& p : P) cands.insert(ratio_distance(q, p));
  }
  for (const auto& rho : cands) {
    auto at = attempt(P, k, rho);
    if (!at) continue;
    Index Q = at->C;
    for (auto s : at->S2) {
      if (std::find(Q.begin(), Q.end(), s) == Q.end()) Q.push_back(s);
    }
    if (Q.size() > k) continue;

    res.chosen_indices = Q;
    res.chosen = gather(P, Q);
    res.optimal_ratio_guess = rho;
    res.achieved_ratio = worst_ratio(P, Q);
    res.certificate = find_cover(res.chosen, P, res.achieved_ratio);
    res.rounds = at->rounds;
    res.ccv_count = at->C.size();
    res.final_cover_within_budget = at->S2.size() <= at->k_left;
    res.honest_exponent = at->a_size == 0 ? 2 : h_star(Rat(4, 3), harmonic(Rat(static_cast<long>(at->a_size)))) + 5;

    const Rat rho2 = rho * rho;
    for (const auto& p : P) {
      if (covered_by_any(P, at->C, p, rho2)) {
        res.cases.push_back(CoverCase::kByCcv);
        continue;
      }
      const auto p0 = closest(P, at->S0, p);
      if (std::find(at->S0_hat.begin(), at->S0_hat.end(), p0) == at->S0_hat.end()) {
        res.cases.push_back(CoverCase::kViaS0);
        continue;
      }
      const auto p1 = closest(P, at->S1, P[p0]);
      const bool kept = std::find(at->S1_hat.begin(), at->S1_hat.end(), p1) != at->S1_hat.end();
      res.cases.push_back(kept ? CoverCase::kViaS2 : CoverCase::kViaS1);
    }
    return res;
  }
  throw ContractViolation("no candidate ratio produced a solution");
}

DualResult brute_force_dual(const PointSet& P, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  DualResult res;
  res.chosen = PointSet(P.dim());
  if (P.empty()) return res;
  const std::size_t n = P.size();
  const std::size_t kk = std::min(k, n);
  const std::size_t guard = effective_guard(1000000);
  // C(n, kk) with early exit once past the guard.
  double subsets = 1;
  for (std::size_t i = 0; i < kk; ++i) subsets = subsets * double(n - i) / double(i + 1);
  if (subsets > double(guard)) throw GuardExceeded("brute-force dual search exceeds the subset guard");

  std::vector<std::vector<Rat>> rd(n, std::vector<Rat>(n));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) rd[q][p] = ratio_distance(P[q], P[p]);
  }
  Index cur(kk);
  for (std::size_t i = 0; i < kk; ++i) cur[i] = i;
  std::optional<Rat> best;
  Index best_set;
  for (;;) {
    Rat worst(1);
    for (std::size_t p = 0; p < n && (!best || worst < *best); ++p) {
      Rat m = rd[cur[0]][p];
      for (std::size_t j = 1; j < kk; ++j) m = min(m, rd[cur[j]][p]);
      worst = max(worst, m);
    }
    if (!best || worst < *best) {
      best = worst;
      best_set = cur;
    }
    std::size_t i = kk;
    while (i > 0 && cur[i - 1] == n - kk + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < kk; ++j) cur[j] = cur[j - 1] + 1;
  }
  res.chosen_indices = best_set;
  res.chosen = gather(P, best_set);
  res.achieved_ratio = *best;
  res.optimal_ratio_guess = *best;
  res.certificate = find_cover(res.chosen, P, *best);
  res.nominal_exponent = 1;
  res.honest_exponent = 1;
  return res;
}

DualGapResult dual_k_gap(const GapOracle& g, std::size_t k, const Rat& eps_grid) {
  DualGapResult out;
  auto grid = gap_grid_run(g, eps_grid);
  out.grid_set = grid.points;
  out.grid_delta = eps_grid;
  out.calls = grid.calls;
  if (grid.points.empty()) {
    out.dual.chosen = PointSet(g.dimension());
    return out;
  }
  out.dual = dual_k_explicit(grid.points, std::min(k, grid.points.size()));
  return out;
}

}  // namespace paretoapx
