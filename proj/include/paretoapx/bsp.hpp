#ifndef PARETOAPX_BSP_HPP
#define PARETOAPX_BSP_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "paretoapx/bi_engine.hpp"
#include "paretoapx/oracle.hpp"

namespace paretoapx {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rat cost;
  Rat delay;
};

/// Directed graph with positive (cost, delay) weights. Path value = (cost, delay).
struct BiGraph {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<Edge> edges;

  /// Throws std::invalid_argument on bad node ids or non-positive weights.
  void validate() const;
};

struct PathWitness {
  std::vector<std::size_t> edges;
  Rat total_cost;
  Rat total_delay;

  Point point() const { return Point{total_cost, total_delay}; }
};

/// "n s t" then one "u v cost delay" line per edge; '#' comment lines.
BiGraph read_graph(std::istream& in);
BiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const BiGraph& G);

/// Same graph with cost and delay exchanged.
BiGraph swap_objectives(const BiGraph& G);

/// m such that every simple-path value is an m-bit rational.
int path_value_bits(const BiGraph& G);

/// Checks that `edges` is a source-to-sink path and recomputes its totals.
bool is_valid_path(const BiGraph& G, const PathWitness& w);

/// Minimum delay among paths with cost <= C (ties: lower cost). Label-setting DP with
/// per-node dominance pruning; hop_limit 0 means node_count - 1.
std::optional<PathWitness> rsp_exact(const BiGraph& G, const Rat& C, std::size_t hop_limit = 0);
/// Minimum cost among paths with delay <= D (ties: lower delay).
std::optional<PathWitness> rsp_exact_dual(const BiGraph& G, const Rat& D, std::size_t hop_limit = 0);

/// cost <= C exactly and delay <= (1+delta) * optimum, by delay scaling with a doubling guess.
std::optional<PathWitness> rsp_fptas(const BiGraph& G, const Rat& C, const Rat& delta);
/// delay <= (1+delta) * D and cost <= min{cost : delay <= D}, by delay scaling at D.
std::optional<PathWitness> dual_fptas(const BiGraph& G, const Rat& D, const Rat& delta);

struct PathEnumeration {
  PointSet points{2};
  std::vector<PathWitness> paths;
};
/// All simple source-to-sink paths (DFS). Throws GuardExceeded beyond `cap` paths.
PathEnumeration enumerate_paths(const BiGraph& G, std::size_t cap = 1000000);

enum class BspMode { kExact, kFptas };
enum class BspDualMode { kDirect, kReduction };

/// Oracle handles over a graph: restrict_y bounds cost and minimizes delay.
/// Witnesses are edge index sequences.
OracleSet bsp_oracles(const BiGraph& G, BspMode mode = BspMode::kFptas,
                      BspDualMode dual_mode = BspDualMode::kDirect);

EngineReport bsp_two_approx(const BiGraph& G, const Rat& eps, BspMode mode = BspMode::kFptas);

}  // namespace paretoapx

#endif
