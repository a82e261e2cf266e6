// Copyright 2026 The gapcover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_commands.hpp"
#include "run_report.hpp"

namespace {

using namespace gapcover::cli;

void AddBudget(CLI::App* app, gapcover::OracleOptions& oracle) {
  app->add_option("--budget", oracle.node_budget, "Oracle search node budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-based gap distinguishers for exact set cover and "
               "hypergraph vertex cover"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the distinguisher on an instance file");
  solve_cmd->add_option("path", solve.path, "Instance JSON file")->required();
  solve_cmd->add_flag("--verify", solve.verify, "Also classify with the oracle");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall time in the report");
  solve_cmd->add_option("--out", solve.out_path, "Write the report here");
  AddBudget(solve_cmd, solve.oracle);

  GenerateOptions generate;
  auto* gen_cmd = app.add_subcommand("generate", "Write a verified promise instance");
  gen_cmd->add_option("--kind", generate.kind)
      ->required()
      ->check(CLI::IsMember(
          {"yes-set-cover", "no-set-cover", "yes-hypergraph", "no-hypergraph"}));
  gen_cmd->add_option("--n", generate.n, "Universe size or vertex count")->required();
  gen_cmd->add_option("--m", generate.m, "Set count or edge count")->required();
  gen_cmd->add_option("--k", generate.k, "Hypergraph uniformity");
  gen_cmd->add_option("--d", generate.d)->required();
  gen_cmd->add_option("--eta", generate.eta, "Gap as P/Q or P")->required();
  gen_cmd->add_option("--seed", generate.seed);
  gen_cmd->add_option("--out", generate.out_path, "Instance file (stdout if omitted)");
  AddBudget(gen_cmd, generate.oracle);

  OracleCmdOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Classify an instance by exhaustive search");
  oracle_cmd->add_option("path", oracle.path, "Instance JSON file")->required();
  oracle_cmd->add_flag("--timing", oracle.timing, "Include wall time in the report");
  oracle_cmd->add_option("--out", oracle.out_path, "Write the report here");
  AddBudget(oracle_cmd, oracle.oracle);

  CheckLemmasOptions lemmas;
  std::size_t random_count = 0;
  auto* lemmas_cmd = app.add_subcommand("check-lemmas", "Evaluate the structural invariants");
  auto* path_opt = lemmas_cmd->add_option("path", lemmas.path, "Instance JSON file");
  auto* random_opt =
      lemmas_cmd->add_option("--random", random_count, "Sample this many instances");
  path_opt->excludes(random_opt);
  lemmas_cmd->add_option("--seed", lemmas.seed);
  lemmas_cmd->add_option("--format", lemmas.format)->check(CLI::IsMember({"json", "csv"}));
  lemmas_cmd->add_flag("--timing", lemmas.timing, "Include wall time in the report");
  lemmas_cmd->add_option("--out", lemmas.out_path, "Write the report here");
  AddBudget(lemmas_cmd, lemmas.oracle);

  BenchOptions bench;
  bench.sizes = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  auto* bench_cmd = app.add_subcommand("bench", "Time the distinguisher over a size ladder");
  bench_cmd->add_option("--sizes", bench.sizes, "n = m values")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--repetitions", bench.repetitions, "Best of this many runs")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-time-ns", bench.min_time_ns,
                        "Keep repeating until this much time is spent");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("--out", bench.out_path, "Write the table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  if (*solve_cmd) return CmdSolve(solve, std::cout, std::cerr);
  if (*gen_cmd) return CmdGenerate(generate, std::cout, std::cerr);
  if (*oracle_cmd) return CmdOracle(oracle, std::cout, std::cerr);
  if (*lemmas_cmd) {
    if (*random_opt) lemmas.random = random_count;
    return CmdCheckLemmas(lemmas, std::cout, std::cerr);
  }
  if (*bench_cmd) return CmdBench(bench, std::cout, std::cerr);
  return kExitFailure;
}
