#ifndef PARETOAPX_GENERATORS_HPP
#define PARETOAPX_GENERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "paretoapx/bsp.hpp"
#include "paretoapx/oracle.hpp"

namespace paretoapx {

/// Partition instance A with replication count k.
struct PartitionSpec {
  std::vector<long> A;
  Rat eps;
  std::size_t k = 1;
};

/// Chain graph over nodes v_0..v_n (ids 0..n): per element a_i a direct edge
/// (S + 2*eps*a_i*n, S) and a two-edge detour through a midpoint node (id n+i)
/// with halves of (S, S + 2*eps*a_i*n). Every path has cost + delay = 2(1+eps)nS.
BiGraph chain_instance(const PartitionSpec& spec);

/// k scaled chain copies between a shared source and sink. Copy j (0-based) scales
/// costs by (1+2eps)^-2j and delays by (1+2eps)^2j; stub edges carry eta = 2^-(2m+4).
BiGraph cluster_instance(const PartitionSpec& spec);

/// Weight placed on each source/sink stub edge of cluster_instance.
Rat cluster_stub_weight(const PartitionSpec& spec);

/// P = {p, q, r, p_q, p_r} with p = (M, M); P' = P without p. Needs M > 1 + 1/eps.
std::pair<PointSet, PointSet> prop31_points(const Rat& M, const Rat& eps);

/// d unit-direction points a_i followed by the 2^d points c_X (X as a bitmask over a_i).
PointSet shatter_construction(int d, const Rat& eps);

struct Claim34Stage {
  PointSet points;
  AdversaryPolicy policy;
};
/// Point set on which the tolerant greedy, fed worst legal answers, returns 3k - 1
/// points while k suffice. Needs k >= 1, delta > 0 and (1+delta)^2 < 1+eps.
Claim34Stage claim34_stage(std::size_t k, const Rat& eps, const Rat& delta);

/// n points with coordinates num/den, 1 <= num, den < 2^value_bits.
PointSet random_points(std::size_t n, std::size_t d, std::uint64_t seed, int value_bits);

/// Nodes 0..n-1, source 0, sink n-1. Each pair i < j gets edge i->j with probability
/// `density` (and j->i too when not acyclic). Weights as in random_points.
BiGraph random_bigraph(std::size_t n, double density, std::uint64_t seed, int value_bits, bool acyclic = true);

}  // namespace paretoapx

#endif
