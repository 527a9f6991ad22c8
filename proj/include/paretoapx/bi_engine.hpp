#ifndef PARETOAPX_BI_ENGINE_HPP
#define PARETOAPX_BI_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "paretoapx/oracle.hpp"

namespace paretoapx {

/// Running variables of the bi-objective engines; index i holds q_{i+1} etc.
struct EngineState {
  std::vector<Solution> q;
  std::vector<Solution> q_prime;
  std::vector<Rat> x_bar;
  std::vector<Rat> y_bar;
  Rat x_min;
  Rat delta;
  Rat eps;
};

struct EngineReport {
  PointSet result{2};
  std::vector<Witness> witnesses;
  /// Filled by certify() against a reference solution set.
  std::optional<CoverCertificate> certificate;
  CallCounts oracle_calls;
  std::size_t iterations = 0;
  bool empty_feasible_set = false;
  EngineState state;
};

/// Rational delta > 0 with (1+delta)^3 <= 1+eps; the exact cube root when rational.
Rat delta_from_eps(const Rat& eps);

/// Rational lower approximation r - 1 of the k-th root of `base` (> 1), exact when rational.
Rat root_slack(const Rat& base, unsigned long k);

struct TwoApproxOptions {
  /// Overrides delta_from_eps; must satisfy (1+delta)^3 <= 1+eps.
  std::optional<Rat> delta;
};

/// Restrict/DualRestrict 2-approximation of the smallest eps-Pareto set.
EngineReport two_approx(const RestrictOracle& r, const DualRestrictOracle& dr, const Rat& eps,
                        const TwoApproxOptions& opts = {});

/// Minimum-cardinality eps-Pareto set from exact (delta = 0) oracles.
EngineReport greedy_exact(const RestrictOracle& r, const DualRestrictOracle& dr, const Rat& eps);

/// The delta-tolerant greedy. r_y bounds x and minimizes y; r_x bounds y and minimizes x.
EngineReport greedy_approx(const RestrictOracle& r_y, const RestrictOracle& r_x, const Rat& eps,
                           const Rat& delta);

/// Drops q_{2i-1} whenever y(q_{2i}) <= (1+delta) * ybar_{2i-1}. The certificate is cleared.
EngineReport prune_redundant(const EngineReport& report, const EngineState& state);

/// Certifies report.result against all solution points of the instance at 1+eps.
bool certify(EngineReport& report, const PointSet& solutions, const Rat& eps);

}  // namespace paretoapx

#endif
