#ifndef PARETOAPX_MULTI_GRID_HPP
#define PARETOAPX_MULTI_GRID_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "paretoapx/oracle.hpp"

namespace paretoapx {

/// Geometric grid lo*(1+delta_prime)^j, j = 1..values.size(), per coordinate.
struct GridSpec {
  Rat delta_prime;
  Rat lo;
  Rat hi;
  std::size_t d = 0;
  std::vector<Rat> values;
};

/// Grid for value bits m with (1+delta_prime)^2 <= 1+delta. The top value is at
/// least (1+delta_prime) * 2^m.
GridSpec make_grid(int m, const Rat& delta, std::size_t d);

struct GridResult {
  PointSet points;
  std::vector<Witness> witnesses;
  CallCounts calls;
  GridSpec grid;
};

/// delta-Pareto set from GAP calls at every grid point (tolerance delta_prime).
GridResult gap_grid_run(const GapOracle& g, const Rat& delta);
PointSet gap_grid_pareto(const GapOracle& g, const Rat& delta);

/// Rational delta > 0 with (1+eps)(1+delta)^2 <= 1+eps_prime.
Rat choose_delta_for(const Rat& eps, const Rat& eps_prime);

/// Greedy max-coverage: indices into `candidates` whose rho-coverage includes every
/// target. Ties go to the lowest index. Throws ContractViolation if a target is uncoverable.
std::vector<std::size_t> greedy_cover_indices(const PointSet& targets, const PointSet& candidates, const Rat& rho);

/// Points of P that rho-cover the points P[A].
PointSet greedy_cover(const std::vector<std::size_t>& A, const PointSet& P, const Rat& rho);

/// Fewest candidates that rho-cover every target, by exhaustive search in increasing
/// size. Throws GuardExceeded once more than `guard` subsets would be examined.
std::size_t exact_min_cover(const PointSet& targets, const PointSet& candidates, const Rat& rho,
                            std::size_t guard = 1000000);
/// Size of the smallest eps-Pareto subset of P (exact_min_cover over the Pareto points).
std::size_t opt_eps_exact(const PointSet& P, const Rat& eps, std::size_t guard = 1000000);

struct MultiReport {
  PointSet result;
  std::vector<Witness> witnesses;
  std::optional<CoverCertificate> certificate;
  CallCounts oracle_calls;
  /// Phase-1 delta-Pareto set and its delta.
  PointSet grid_set;
  Rat delta;
  /// Ratio used to cover the grid set: (1+eps)(1+delta).
  Rat cover_ratio;
};

/// Two-phase eps_prime-Pareto set: grid at choose_delta_for, then greedy cover.
MultiReport eps_prime_pareto(const GapOracle& g, const Rat& eps, const Rat& eps_prime);

/// Largest subset size (<= limit) shattered by the (1+eps)-coverage sets of P.
/// The empty trace counts as realized. Needs |P| <= 64.
int vc_dim_primal(const PointSet& P, const Rat& eps, int limit);
/// Same over the dual sets {points that (1+eps)-cover q}.
int vc_dim_dual(const PointSet& P, const Rat& eps, int limit);

}  // namespace paretoapx

#endif
