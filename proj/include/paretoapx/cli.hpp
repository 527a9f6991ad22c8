#ifndef PARETOAPX_CLI_HPP
#define PARETOAPX_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "paretoapx/rational.hpp"

namespace paretoapx {

enum class Command { kPareto2, kGreedy, kMulti, kDual, kGen, kVerify, kPlotdata };
enum class OracleMode { kExact, kFptas, kAdversarial };
enum class InstanceFormat { kAuto, kPoints, kGraph };

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCertificate = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitGuard = 4;

struct RunConfig {
  Command command = Command::kPareto2;
  /// Instance file. kAuto treats a ".graph" suffix as a graph, anything else as points.
  std::string instance;
  InstanceFormat format = InstanceFormat::kAuto;
  std::optional<Rat> eps;
  std::optional<Rat> eps_prime;
  std::optional<Rat> delta;
  std::optional<std::size_t> k;
  /// Unset: exact for point sets, fptas for graphs.
  std::optional<OracleMode> oracle;
  std::uint64_t seed = 1;
  /// Report (or generated instance) path; empty writes to the output stream.
  std::string output;
  /// Optional TSV of all solution points with pareto/chosen/covered-by flags.
  std::string plot;
  bool against_bruteforce = false;
  bool prune = false;

  // gen
  std::string family;
  std::vector<long> A;
  std::optional<Rat> M;
  std::size_t n = 8;
  std::size_t d = 2;
  int bits = 6;
  double density = 0.5;
  bool prime = false;
  bool cyclic = false;
};

/// Parses "1,2,3".
std::vector<long> parse_long_list(const std::string& text);

/// Executes one command. Reports go to `out` (or config.output), diagnostics and the
/// human summary to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace paretoapx

#endif
