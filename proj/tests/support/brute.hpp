#ifndef PARETOAPX_TESTS_BRUTE_HPP
#define PARETOAPX_TESTS_BRUTE_HPP

// Naive reference computations, deliberately independent of the library algorithms.

#include <cstdint>
#include <optional>
#include <vector>

#include "paretoapx/point.hpp"

namespace brute {

using paretoapx::Point;
using paretoapx::PointSet;
using paretoapx::Rat;

inline bool leq_scaled(const Point& u, const Point& v, const Rat& rho) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (rho * v[i] < u[i]) return false;
  }
  return true;
}

inline bool strictly_better(const Point& u, const Point& v) {
  bool strict = false;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (v[i] < u[i]) return false;
    if (u[i] < v[i]) strict = true;
  }
  return strict;
}

inline PointSet undominated(const PointSet& P) {
  PointSet out(P.dim());
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < P.size() && keep; ++j) {
      if (strictly_better(P[j], P[i])) keep = false;
      if (j < i && P[j] == P[i]) keep = false;
    }
    if (keep) out.push_back(P[i]);
  }
  return out;
}

// Calls f on every k-subset of {0..n-1} (as sorted indices) until f returns true.
template <class F>
bool each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    if (f(cur)) return true;
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

// Smallest number of candidates that rho-cover every target, by increasing subset size.
inline std::size_t min_cover(const PointSet& targets, const PointSet& cands, const Rat& rho) {
  if (targets.empty()) return 0;
  const std::size_t words = (targets.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(cands.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < cands.size(); ++c) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (leq_scaled(cands[c], targets[t], rho)) mask[c][t / 64] |= std::uint64_t{1} << (t % 64);
    }
  }
  for (std::size_t k = 1; k <= cands.size(); ++k) {
    const bool hit = each_subset(cands.size(), k, [&](const std::vector<std::size_t>& s) {
      std::size_t got = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t m = 0;
        for (auto c : s) m |= mask[c][w];
        got += static_cast<std::size_t>(__builtin_popcountll(m));
      }
      return got == targets.size();
    });
    if (hit) return k;
  }
  return cands.size() + 1;
}

// Size of the smallest eps-Pareto subset of P.
inline std::size_t opt_eps(const PointSet& P, const Rat& eps) {
  const PointSet par = undominated(P);
  return min_cover(par, par, Rat(1) + eps);
}

inline Rat rd(const Point& p, const Point& q) {
  Rat best(1);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const Rat r = p[i] / q[i];
    if (best < r) best = r;
  }
  return best;
}

// Optimal k-center ratio over subsets of P.
inline Rat rho_star(const PointSet& P, std::size_t k) {
  const std::size_t n = P.size();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < n; ++p) d[c][p] = rd(P[c], P[p]);
  }
  std::optional<Rat> best;
  each_subset(n, k < n ? k : n, [&](const std::vector<std::size_t>& s) {
    Rat worst(1);
    for (std::size_t p = 0; p < n; ++p) {
      Rat m = d[s[0]][p];
      for (auto c : s) {
        if (d[c][p] < m) m = d[c][p];
      }
      if (worst < m) worst = m;
    }
    if (!best || worst < *best) best = worst;
    return false;
  });
  return *best;
}

}  // namespace brute

#endif
