#ifndef PARETOAPX_DUAL_K_HPP
#define PARETOAPX_DUAL_K_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "paretoapx/oracle.hpp"

namespace paretoapx {

/// Interpolated harmonic number: H(floor a) + (a - floor a) / ceil a.
Rat harmonic(const Rat& a);
/// Number of times H must be applied to a before the value is at most b (b > 1).
int h_star(const Rat& b, const Rat& a);

/// Index in `active` of a point q with {p : p <= rho q} contained in {p : q <= rho p},
/// both taken over P. Lowest qualifying index.
std::optional<std::size_t> find_ccv(const PointSet& P, const std::vector<std::size_t>& active, const Rat& rho);
/// Same with P = A and every point active.
std::optional<std::size_t> find_ccv(const PointSet& A, const Rat& rho);

/// Repeated greedy rho-cover of S using P, intersected with A, until |S| <= 4l/3.
/// Indices are into P. `rounds` receives the number of cover steps.
std::vector<std::size_t> rec_cover(const std::vector<std::size_t>& S, const std::vector<std::size_t>& A,
                                   const PointSet& P, const Rat& rho, std::size_t l, int* rounds = nullptr);
PointSet rec_cover(const PointSet& S, const PointSet& A, const PointSet& P, const Rat& rho, std::size_t l);

enum class CoverCase { kByCcv, kViaS0, kViaS1, kViaS2 };

struct DualResult {
  PointSet chosen;
  std::vector<std::size_t> chosen_indices;
  Rat achieved_ratio{1};
  /// Candidate ratio at which the run succeeded; at most the optimum.
  Rat optimal_ratio_guess{1};
  std::optional<CoverCertificate> certificate;
  int nominal_exponent = 9;
  int honest_exponent = 0;
  int rounds = 0;
  std::vector<CoverCase> cases;
  /// The final greedy stage returned at most k' points.
  bool final_cover_within_budget = true;
  std::size_t ccv_count = 0;
};

/// At most k points of P that approximately minimize the worst cover ratio of P.
DualResult dual_k_explicit(const PointSet& P, std::size_t k);
/// Exact optimum by subset enumeration. Throws GuardExceeded past 10^6 subsets.
DualResult brute_force_dual(const PointSet& P, std::size_t k);

struct DualGapResult {
  DualResult dual;
  PointSet grid_set;
  Rat grid_delta;
  CallCounts calls;
};
/// dual_k_explicit over a grid delta-Pareto set; k is clamped to its size.
DualGapResult dual_k_gap(const GapOracle& g, std::size_t k, const Rat& eps_grid);

}  // namespace paretoapx

#endif
