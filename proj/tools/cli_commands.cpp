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


#include "cli_commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "gapcover/errors.hpp"
#include "gapcover/generators.hpp"
#include "gapcover/instance_io.hpp"
#include "gapcover/lattice.hpp"
#include "gapcover/lemma_checks.hpp"
#include "promise_sampler.hpp"
#include "run_report.hpp"

namespace gapcover::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ElapsedNs(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
          .count());
}

// Returns false and fills `error` when the file cannot be read.
bool ReadFile(const std::string& path, std::string& text, Json& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = {{"kind", "io-error"}, {"message", "cannot read " + path}};
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

// Writes `text` to `path`, or to `out` when `path` is empty.
bool Emit(const std::string& path, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int Finish(Json& report, int code, const std::string& out_path,
           std::ostream& out, std::ostream& err) {
  report["exit_code"] = code;
  if (!Emit(out_path, report.dump(2) + "\n", out, err)) return kExitFailure;
  return code;
}

Json ClassificationJson(const Classification& c) {
  Json j = {{"class", PromiseClassName(c.kind)}, {"exact", ToJson(c.exact)}};
  if (c.kind != PromiseClass::kYes) j["minimum"] = ToJson(c.minimum);
  return j;
}

std::optional<Family> ParseFamily(const std::string& kind) {
  for (Family f : {Family::kYesSetCover, Family::kNoSetCover,
                   Family::kYesHypergraph, Family::kNoHypergraph}) {
    if (FamilyName(f) == kind) return f;
  }
  return std::nullopt;
}

PromiseInstance GenerateFamily(Family family, const GenerateOptions& o,
                               const GapParams& params) {
  switch (family) {
    case Family::kYesSetCover:
      return {GenerateYesSetCover(o.n, o.m, params, o.seed, o.oracle), params};
    case Family::kNoSetCover:
      return {GenerateNoSetCover(o.n, o.m, params, o.seed, o.oracle), params};
    case Family::kYesHypergraph:
      return {GenerateYesHypergraph(o.n, o.k, o.m, params, o.seed, o.oracle),
              params};
    case Family::kNoHypergraph:
      return {GenerateNoHypergraph(o.n, o.k, o.m, params, o.seed, o.oracle),
              params};
  }
  throw Error(ErrorKind::kParameterOutOfRange, "unknown family");
}

// "" when the classification is not a YES/NO class.
std::string AgreementCell(const std::optional<bool>& a) {
  if (!a) return "";
  return *a ? "true" : "false";
}

}  // namespace

std::optional<bool> Agrees(const Verdict& verdict, const Classification& c) {
  switch (c.kind) {
    case PromiseClass::kYes:
      return verdict.answer == Answer::kYes;
    case PromiseClass::kNo:
      return verdict.answer == Answer::kNo;
    case PromiseClass::kNeither:
      return std::nullopt;
  }
  return std::nullopt;
}

int CmdSolve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  Json report = Json::object();
  report["path"] = options.path;
  std::string text;
  Json io_error;
  if (!ReadFile(options.path, text, io_error)) {
    report["error"] = io_error;
    return Finish(report, kExitFailure, options.out_path, out, err);
  }
  try {
    const PromiseInstance inst = ParseInstance(text);
    report["instance_digest"] = InstanceDigest(inst);
    report["type"] = InstanceTypeName(inst);
    report["params"] = ToJson(inst.params);
    const Verdict verdict = Distinguish(inst);
    report["verdict"] = ToJson(verdict);
    if (options.verify) {
      const Classification c = Classify(inst, options.oracle);
      report["oracle"] = ClassificationJson(c);
      const auto agrees = Agrees(verdict, c);
      report["agreement"] = agrees ? Json(*agrees) : Json(nullptr);
    }
  } catch (const Error& e) {
    report.erase("verdict");
    report["error"] = ErrorJson(e);
    return Finish(report, ExitCodeFor(e.kind()), options.out_path, out, err);
  }
  if (options.timing) report["wall_time_us"] = ElapsedNs(start) / 1000;
  return Finish(report, kExitOk, options.out_path, out, err);
}

int CmdGenerate(const GenerateOptions& options, std::ostream& out,
                std::ostream& err) {
  Json report = Json::object();
  report["kind"] = options.kind;
  report["seed"] = std::to_string(options.seed);
  const auto family = ParseFamily(options.kind);
  try {
    if (!family) {
      throw Error(ErrorKind::kParameterOutOfRange,
                  "unknown kind '" + options.kind + "'");
    }
    const GapParams params =
        GapParams::Create(options.d, ParseRational(options.eta));
    const PromiseInstance inst = GenerateFamily(*family, options, params);
    const std::string file = SerializeInstance(inst);
    if (!Emit(options.out_path, file, out, err)) return kExitFailure;
    report["instance_digest"] = InstanceDigest(inst);
    report["params"] = ToJson(params);
    report["oracle"] = ClassificationJson(Classify(inst, options.oracle));
  } catch (const Error& e) {
    report["error"] = ErrorJson(e);
    const int code = e.kind() == ErrorKind::kMalformedInput
                         ? kExitOutOfRange  // unparsable --eta
                         : ExitCodeFor(e.kind());
    report["exit_code"] = code;
    (options.out_path.empty() ? err : out) << report.dump(2) << "\n";
    return code;
  }
  report["exit_code"] = kExitOk;
  (options.out_path.empty() ? err : out) << report.dump(2) << "\n";
  return kExitOk;
}

int CmdOracle(const OracleCmdOptions& options, std::ostream& out,
              std::ostream& err) {
  const auto start = Clock::now();
  Json report = Json::object();
  report["path"] = options.path;
  std::string text;
  Json io_error;
  if (!ReadFile(options.path, text, io_error)) {
    report["error"] = io_error;
    return Finish(report, kExitFailure, options.out_path, out, err);
  }
  try {
    const PromiseInstance inst = ParseInstance(text);
    report["instance_digest"] = InstanceDigest(inst);
    report["type"] = InstanceTypeName(inst);
    report["params"] = ToJson(inst.params);
    report["oracle"] = ClassificationJson(Classify(inst, options.oracle));
  } catch (const Error& e) {
    report["error"] = ErrorJson(e);
    return Finish(report, ExitCodeFor(e.kind()), options.out_path, out, err);
  }
  if (options.timing) report["wall_time_us"] = ElapsedNs(start) / 1000;
  return Finish(report, kExitOk, options.out_path, out, err);
}

int CmdCheckLemmas(const CheckLemmasOptions& options, std::ostream& out,
                   std::ostream& err) {
  const auto start = Clock::now();
  if (options.format != "json" && options.format != "csv") {
    err << "error: unknown format '" << options.format << "'\n";
    return kExitFailure;
  }
  Json report = Json::object();
  Json instances = Json::array();
  Json violations = Json::array();
  LemmaReport total;
  std::size_t agreed = 0;
  std::size_t compared = 0;
  std::map<std::string, std::size_t> by_class;
  std::ostringstream csv;
  csv << "index,family,digest,class,answer,decided_at,agreement,violations\n";

  auto evaluate = [&](const PromiseInstance& inst, const std::string& family) {
    const Classification c = Classify(inst, options.oracle);
    const LemmaReport r = CheckLemmas(inst, c);
    const std::string digest = InstanceDigest(inst);
    std::optional<Verdict> verdict;
    std::optional<bool> agrees;
    const bool in_range =
        std::holds_alternative<SetCoverInstance>(inst.instance)
            ? inst.params.SetCoverRangeHolds(
                  std::get<SetCoverInstance>(inst.instance).set_count())
            : inst.params.HypergraphRangeHolds(
                  std::get<HypergraphInstance>(inst.instance).vertex_count());
    if (in_range) {
      verdict = Distinguish(inst);
      agrees = Agrees(*verdict, c);
    }
    if (agrees) {
      ++compared;
      if (*agrees) ++agreed;
    }
    ++by_class[std::string(PromiseClassName(c.kind))];
    total.Merge(r);
    for (const auto& v : r.violations) {
      violations.push_back({{"instance_digest", digest},
                            {"lemma", v.lemma},
                            {"detail", v.detail},
                            {"witness", ToJson(v.witness)}});
    }
    const std::size_t index = instances.size();
    Json row = {{"family", family},
                {"instance_digest", digest},
                {"class", PromiseClassName(c.kind)}};
    if (verdict) {
      row["answer"] = AnswerName(verdict->answer);
      row["decided_at"] = DecisionStepName(verdict->decided_at);
    }
    row["agreement"] = agrees ? Json(*agrees) : Json(nullptr);
    row["violations"] = r.violations.size();
    instances.push_back(row);
    csv << index << "," << family << "," << digest << ","
        << PromiseClassName(c.kind) << ","
        << (verdict ? AnswerName(verdict->answer) : "") << ","
        << (verdict ? DecisionStepName(verdict->decided_at) : "") << ","
        << AgreementCell(agrees) << "," << r.violations.size() << "\n";
  };

  try {
    if (options.random) {
      report["seed"] = std::to_string(options.seed);
      std::mt19937_64 rng(options.seed);
      const Family families[] = {Family::kYesSetCover, Family::kNoSetCover,
                                 Family::kYesHypergraph, Family::kNoHypergraph};
      for (std::size_t i = 0; i < *options.random; ++i) {
        const Family family = families[i % 4];
        const SampledInstance s =
            SamplePromiseInstance(family, rng, SamplerLimits{}, options.oracle);
        evaluate(s.instance, FamilyName(family));
      }
    } else if (!options.path.empty()) {
      report["path"] = options.path;
      std::string text;
      Json io_error;
      if (!ReadFile(options.path, text, io_error)) {
        report["error"] = io_error;
        return Finish(report, kExitFailure, options.out_path, out, err);
      }
      evaluate(ParseInstance(text), "file");
    }
  } catch (const Error& e) {
    report["error"] = ErrorJson(e);
    return Finish(report, ExitCodeFor(e.kind()), options.out_path, out, err);
  }

  const int code = total.ok() ? kExitOk : kExitFailure;
  if (options.format == "csv") {
    if (!Emit(options.out_path, csv.str(), out, err)) return kExitFailure;
    for (const auto& v : violations) err << "violation: " << v.dump() << "\n";
    return code;
  }
  report["instances"] = instances.size();
  report["classes"] = by_class;
  report["agreement"] = {{"agreed", agreed}, {"compared", compared}};
  report["checks"] = ToJson(total)["checks"];
  report["violations"] = std::move(violations);
  report["results"] = std::move(instances);
  if (options.timing) report["wall_time_us"] = ElapsedNs(start) / 1000;
  return Finish(report, code, options.out_path, out, err);
}

std::vector<BenchRow> RunBench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  const std::size_t reps = std::max<std::size_t>(1, options.repetitions);
  for (std::size_t size : options.sizes) {
    BenchRow row;
    row.n = size;
    row.m = size;
    // Smallest d with d(3 eta - 1) > 2m at eta = 2.
    row.d = static_cast<std::int64_t>(2 * size / 5 + 1);
    const auto params = GapParams::Create(row.d, Rational(2));
    const PromiseInstance inst{
        PlantYesSetCover(row.n, row.m, static_cast<std::size_t>(row.d),
                         options.seed + size),
        params};
    row.digest = InstanceDigest(inst);
    const IntMatrix b =
        BuildSetCoverIncidence(std::get<SetCoverInstance>(inst.instance));
    row.kernel_ns = std::numeric_limits<std::uint64_t>::max();
    row.distinguish_ns = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t spent = 0;
    for (std::size_t r = 0; r < reps || spent < options.min_time_ns; ++r) {
      const auto rep_start = Clock::now();
      auto t0 = Clock::now();
      const LatticeBasis kernel = KernelLatticeBasis(b);
      row.kernel_ns = std::min(row.kernel_ns, ElapsedNs(t0));
      t0 = Clock::now();
      const Verdict verdict = Distinguish(inst);
      row.distinguish_ns = std::min(row.distinguish_ns, ElapsedNs(t0));
      static_cast<void>(kernel);
      static_cast<void>(verdict);
      spent += ElapsedNs(rep_start);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int CmdBench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  if (options.format != "json" && options.format != "csv") {
    err << "error: unknown format '" << options.format << "'\n";
    return kExitFailure;
  }
  std::vector<BenchRow> rows;
  try {
    rows = RunBench(options);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  }
  std::ostringstream text;
  if (options.format == "csv") {
    text << "n,m,d,instance_digest,kernel_ns,distinguish_ns\n";
    for (const auto& r : rows) {
      text << r.n << "," << r.m << "," << r.d << "," << r.digest << ","
           << r.kernel_ns << "," << r.distinguish_ns << "\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"m", r.m},
                     {"d", r.d},
                     {"instance_digest", r.digest},
                     {"kernel_ns", r.kernel_ns},
                     {"distinguish_ns", r.distinguish_ns}});
    }
    text << Json{{"seed", std::to_string(options.seed)}, {"rows", arr}}.dump(2)
         << "\n";
  }
  return Emit(options.out_path, text.str(), out, err) ? kExitOk : kExitFailure;
}

}  // namespace gapcover::cli
