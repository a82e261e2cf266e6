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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gapcover/distinguisher.hpp"
#include "gapcover/oracle.hpp"

namespace gapcover::cli {

// Each command writes its report to `out` (or to `out_path` when set),
// diagnostics to `err`, and returns the process exit code.

struct SolveOptions {
  std::string path;
  bool verify = false;
  bool timing = false;
  std::string out_path;
  OracleOptions oracle;
};
int CmdSolve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::string kind;  // yes-set-cover, no-set-cover, yes-hypergraph, no-hypergraph
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 2;
  std::int64_t d = 0;
  std::string eta;
  std::uint64_t seed = 0;
  // Instance destination; stdout when empty, in which case the certificate
  // goes to `err`.
  std::string out_path;
  OracleOptions oracle;
};
int CmdGenerate(const GenerateOptions& options, std::ostream& out,
                std::ostream& err);

struct OracleCmdOptions {
  std::string path;
  bool timing = false;
  std::string out_path;
  OracleOptions oracle;
};
int CmdOracle(const OracleCmdOptions& options, std::ostream& out,
              std::ostream& err);

struct CheckLemmasOptions {
  std::string path;                     // single instance file
  std::optional<std::size_t> random;    // or this many sampled instances
  std::uint64_t seed = 0;
  std::string format = "json";          // json or csv (one row per instance)
  bool timing = false;
  std::string out_path;
  OracleOptions oracle;
};
int CmdCheckLemmas(const CheckLemmasOptions& options, std::ostream& out,
                   std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> sizes;  // n = m ladder
  std::uint64_t seed = 0;
  std::size_t repetitions = 5;     // best of at least this many runs
  std::uint64_t min_time_ns = 20'000'000;  // and at least this much time
  std::string format = "csv";
  std::string out_path;
};
int CmdBench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// True when the verdict matches a YES/NO classification; nullopt for
// instances outside the promise.
std::optional<bool> Agrees(const Verdict& verdict, const Classification& c);

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t d = 0;
  std::string digest;
  std::uint64_t kernel_ns = 0;
  std::uint64_t distinguish_ns = 0;
};
// One planted YES set-cover instance per size, timed best-of-repetitions.
std::vector<BenchRow> RunBench(const BenchOptions& options);

}  // namespace gapcover::cli
