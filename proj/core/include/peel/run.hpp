#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "peel/generators.hpp"
#include "peel/metrics.hpp"
#include "peel/oracle.hpp"

namespace peel {

// Exit status contract shared with the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitPrecondition = 2,
  kExitParse = 3,
  kExitVerifyFailed = 4,
};

struct RunConfig {
  SampleSpec spec;
  std::vector<Method> methods = {Method::kcore, Method::tricore,
                                 Method::vtricore};
  std::string out_dir = "run";
  bool distinct_curve = false;
  int exhaustive_cap = kExhaustiveDefaultCap;
  int oracle_cap = kOracleDefaultCap;

  // test hook: replaces the decomposition run_verify checks against the
  // oracle, used to prove the harness reports mismatches
  std::function<CoreAssignment(const Graph&, Method)> decompose_override;

  // bench only
  int bench_n_min = 10;
  int bench_n_max = 40;
  int bench_n_step = 1;
  long long bench_samples = 1000;
  double bench_p = 0.5;
};

// Each command writes its CSV artifacts plus a manifest into
// config.out_dir and returns an ExitCode. Progress and errors go to
// `log`.
int run_decompose(const RunConfig& config, std::ostream& log);
int run_compare(const RunConfig& config, std::ostream& log);
int run_verify(const RunConfig& config, std::ostream& log);
int run_bench(const RunConfig& config, std::ostream& log);

// compare pipeline without filesystem output, reused by tests
struct CompareResult {
  std::vector<MeanReport> means;
  std::string mean_report_csv;
  std::string mean_curves_csv;
};
CompareResult compare_sample(const SampleSpec& spec,
                             const std::vector<Method>& methods);

}  // namespace peel
