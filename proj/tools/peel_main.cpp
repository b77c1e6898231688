#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peel/run.hpp"

namespace {

struct CommonFlags {
  std::string input;
  int exhaustive_n = 0;
  std::string random_spec;  // "N,P,COUNT"
  std::uint64_t seed = 0;
  std::vector<std::string> methods = {"kcore", "tricore", "vtricore"};
  std::string out_dir = "run";
  bool distinct = false;
  int cap = peel::kExhaustiveDefaultCap;
};

void add_sample_flags(CLI::App* cmd, CommonFlags& f, bool want_input) {
  if (want_input)
    cmd->add_option("--input", f.input, "SNAP edge-list file");
  cmd->add_option("--exhaustive", f.exhaustive_n,
                  "all labeled graphs on N vertices");
  cmd->add_option("--random", f.random_spec,
                  "random sample as N,P,COUNT");
  cmd->add_option("--seed", f.seed, "reproducibility seed");
  cmd->add_option("--methods", f.methods,
                  "subset of kcore,tricore,vtricore")
      ->delimiter(',');
  cmd->add_option("--out", f.out_dir, "output directory");
  cmd->add_flag("--distinct", f.distinct, "skip empty levels in curves");
  cmd->add_option("--cap", f.cap, "exhaustive population cap");
}

int build_config(const CommonFlags& f, peel::RunConfig& config,
                 bool need_sample) {
  int sources = (!f.input.empty()) + (f.exhaustive_n > 0) +
                (!f.random_spec.empty());
  if (sources > 1) {
    std::cerr << "error: pick one of --input, --exhaustive, --random\n";
    return peel::kExitPrecondition;
  }
  if (sources == 0 && need_sample) {
    std::cerr << "error: an input source is required\n";
    return peel::kExitPrecondition;
  }
  if (!f.input.empty()) {
    config.spec = peel::SampleSpec::file(f.input);
  } else if (f.exhaustive_n > 0) {
    config.spec = peel::SampleSpec::exhaustive(f.exhaustive_n);
  } else if (!f.random_spec.empty()) {
    int n = 0;
    double p = 0.0;
    long long count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(f.random_spec);
    if (!(in >> n >> c1 >> p >> c2 >> count) || c1 != ',' || c2 != ',' ||
        !in.eof()) {
      std::cerr << "error: --random expects N,P,COUNT\n";
      return peel::kExitPrecondition;
    }
    config.spec = peel::SampleSpec::random(n, p, count, f.seed);
  }
  config.spec.seed = f.seed;
  config.out_dir = f.out_dir;
  config.distinct_curve = f.distinct;
  config.exhaustive_cap = f.cap;
  try {
    config.methods.clear();
    for (const auto& name : f.methods)
      config.methods.push_back(peel::method_from_name(name));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return peel::kExitPrecondition;
  }
  return peel::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph peeling decompositions, metrics and benchmarks"};
  app.require_subcommand(1);

  CommonFlags decompose_flags, compare_flags, verify_flags, bench_flags;

  CLI::App* decompose =
      app.add_subcommand("decompose", "decompose one graph, write CSVs");
  add_sample_flags(decompose, decompose_flags, true);

  CLI::App* compare =
      app.add_subcommand("compare", "mean metrics over a graph sample");
  add_sample_flags(compare, compare_flags, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "check decompositions against the brute-force oracle");
  add_sample_flags(verify, verify_flags, false);

  CLI::App* bench =
      app.add_subcommand("bench", "timing table and complexity exponents");
  int n_min = 10, n_max = 40, n_step = 1;
  long long samples = 1000;
  double p = 0.5;
  bench->add_option("--n-min", n_min, "smallest graph size");
  bench->add_option("--n-max", n_max, "largest graph size");
  bench->add_option("--n-step", n_step, "graph size step");
  bench->add_option("--samples", samples, "graphs per size");
  bench->add_option("--p", p, "edge probability");
  bench->add_option("--seed", bench_flags.seed, "reproducibility seed");
  bench->add_option("--out", bench_flags.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  peel::RunConfig config;
  if (decompose->parsed()) {
    if (int rc = build_config(decompose_flags, config, true)) return rc;
    return peel::run_decompose(config, std::cout);
  }
  if (compare->parsed()) {
    if (int rc = build_config(compare_flags, config, true)) return rc;
    return peel::run_compare(config, std::cout);
  }
  if (verify->parsed()) {
    if (int rc = build_config(verify_flags, config, true)) return rc;
    return peel::run_verify(config, std::cout);
  }
  if (bench->parsed()) {
    if (int rc = build_config(bench_flags, config, false)) return rc;
    config.bench_n_min = n_min;
    config.bench_n_max = n_max;
    config.bench_n_step = n_step;
    config.bench_samples = samples;
    config.bench_p = p;
    return peel::run_bench(config, std::cout);
  }
  return peel::kExitPrecondition;
}
