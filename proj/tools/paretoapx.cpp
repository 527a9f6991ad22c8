#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "paretoapx/cli.hpp"
#include "paretoapx/errors.hpp"

using namespace paretoapx;

namespace {

struct RawFlags {
  std::string eps, eps_prime, delta, M, A, oracle, format;
  std::size_t k = 0;
};

void add_common(CLI::App* sub, RunConfig& c, RawFlags& raw, bool needs_instance) {
  if (needs_instance) {
    sub->add_option("instance", c.instance, "Instance file (.graph for graphs, otherwise points)")->required();
    sub->add_option("--format", raw.format, "auto | points | graph")
        ->check(CLI::IsMember({"auto", "points", "graph"}));
  }
  sub->add_option("--eps", raw.eps, "Approximation slack, as a or a/b");
  sub->add_option("--eps-prime", raw.eps_prime, "Final slack of the multi-objective pipeline");
  sub->add_option("--delta", raw.delta, "Oracle slack override");
  sub->add_option("--k", raw.k, "Point budget (dual), copies (cluster) or stages (claim34)");
  sub->add_option("--oracle", raw.oracle, "exact | fptas | adversarial")
      ->check(CLI::IsMember({"exact", "fptas", "adversarial"}));
  sub->add_option("--seed", c.seed, "Generator seed");
  sub->add_option("-o,--output", c.output, "Report path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small approximate Pareto sets from oracle access"};
  app.require_subcommand(1);
  RunConfig c;
  RawFlags raw;

  const std::map<std::string, Command> commands{
      {"pareto2", Command::kPareto2}, {"greedy", Command::kGreedy}, {"multi", Command::kMulti},
      {"dual", Command::kDual},       {"gen", Command::kGen},       {"verify", Command::kVerify},
      {"plotdata", Command::kPlotdata}};
  const std::map<std::string, std::string> help{
      {"pareto2", "Bi-objective 2-approximation"},
      {"greedy", "Greedy eps-Pareto set (exact or delta-tolerant)"},
      {"multi", "Grid plus greedy cover for d objectives"},
      {"dual", "At most k points minimizing the cover ratio"},
      {"gen", "Write a generated instance"},
      {"verify", "Check invariants, optionally against brute force"},
      {"plotdata", "TSV of all solution points with flags"}};

  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub, c, raw, cmd != Command::kGen);
    if (cmd == Command::kGen) {
      sub->add_option("family", c.family, "chain | cluster | prop31 | shatter | claim34 | random-points | random-graph")
          ->required();
      sub->add_option("--A", raw.A, "Partition multiset, comma separated");
      sub->add_option("--M", raw.M, "prop31 scale");
      sub->add_option("--n", c.n, "Points or nodes");
      sub->add_option("--d", c.d, "Dimension");
      sub->add_option("--bits", c.bits, "Value bits of random weights");
      sub->add_option("--density", c.density, "Edge probability");
      sub->add_flag("--prime", c.prime, "prop31: emit P' (without p)");
      sub->add_flag("--cyclic", c.cyclic, "random-graph: allow edges in both directions");
    }
    if (cmd == Command::kVerify) sub->add_flag("--against-bruteforce", c.against_bruteforce, "Compare with exhaustive search");
    if (cmd == Command::kPareto2) sub->add_flag("--prune", c.prune, "Drop redundant points after the run");
    if (cmd != Command::kGen && cmd != Command::kVerify && cmd != Command::kPlotdata) {
      sub->add_option("--plot", c.plot, "Also write plot TSV to this path");
    }
    sub->callback([&c, cmd] { c.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (!raw.eps.empty()) c.eps = Rat::parse(raw.eps);
    if (!raw.eps_prime.empty()) c.eps_prime = Rat::parse(raw.eps_prime);
    if (!raw.delta.empty()) c.delta = Rat::parse(raw.delta);
    if (!raw.M.empty()) c.M = Rat::parse(raw.M);
    if (!raw.A.empty()) c.A = parse_long_list(raw.A);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--k") > 0) c.k = raw.k;
  }
  if (raw.oracle == "exact") c.oracle = OracleMode::kExact;
  if (raw.oracle == "fptas") c.oracle = OracleMode::kFptas;
  if (raw.oracle == "adversarial") c.oracle = OracleMode::kAdversarial;
  if (raw.format == "points") c.format = InstanceFormat::kPoints;
  if (raw.format == "graph") c.format = InstanceFormat::kGraph;
  return run(c, std::cout, std::cerr);
}
