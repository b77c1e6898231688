#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "peel/csv.hpp"
#include "peel/run.hpp"
#include "test_util.hpp"

using namespace peel;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / "peel_tests" / name;
  fs::remove_all(p);
  return p;
}

fs::path write_k5_file() {
  fs::path dir = fs::temp_directory_path() / "peel_tests";
  fs::create_directories(dir);
  fs::path p = dir / "k5.txt";
  std::ofstream out(p);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) out << u << '\t' << v << '\n';
  return p;
}

}  // namespace

TEST_CASE("run_decompose writes the expected artifacts for K5") {
  RunConfig config;
  config.spec = SampleSpec::file(write_k5_file().string());
  config.out_dir = temp_dir("decompose").string();
  std::ostringstream log;
  REQUIRE(run_decompose(config, log) == kExitOk);

  for (const char* f :
       {"kcore.cores.csv", "tricore.cores.csv", "vtricore.cores.csv",
        "tricore.edge_levels.csv", "report.csv", "manifest.txt"})
    CHECK(fs::exists(fs::path(config.out_dir) / f));

  std::string kcore = slurp(fs::path(config.out_dir) / "kcore.cores.csv");
  CHECK(kcore == "vertex,core_number\n0,4\n1,4\n2,4\n3,4\n4,4\n");
  std::string report = slurp(fs::path(config.out_dir) / "report.csv");
  CHECK(report.find("kcore,5,1,4,1,1") != std::string::npos);
  CHECK(report.find("tricore,5,1,3,1,1") != std::string::npos);
  CHECK(report.find("vtricore,5,1,6,1,1") != std::string::npos);
}

TEST_CASE("run_decompose rejects missing and malformed input") {
  RunConfig config;
  config.spec = SampleSpec::file("/no/such/file.txt");
  config.out_dir = temp_dir("decompose_bad").string();
  std::ostringstream log;
  CHECK(run_decompose(config, log) == kExitPrecondition);

  fs::path bad = fs::temp_directory_path() / "peel_tests" / "bad.txt";
  fs::create_directories(bad.parent_path());
  std::ofstream(bad) << "1 2 3\n";
  config.spec = SampleSpec::file(bad.string());
  CHECK(run_decompose(config, log) == kExitParse);

  fs::path empty = fs::temp_directory_path() / "peel_tests" / "empty.txt";
  std::ofstream(empty).close();
  config.spec = SampleSpec::file(empty.string());
  CHECK(run_decompose(config, log) != kExitOk);
}

TEST_CASE("run_compare is byte-deterministic per seed") {
  RunConfig config;
  config.spec = SampleSpec::random(9, 0.5, 100, 424242);
  std::ostringstream log;

  fs::path a = temp_dir("compare_a");
  fs::path b = temp_dir("compare_b");
  config.out_dir = a.string();
  REQUIRE(run_compare(config, log) == kExitOk);
  config.out_dir = b.string();
  REQUIRE(run_compare(config, log) == kExitOk);

  CHECK(slurp(a / "mean_report.csv") == slurp(b / "mean_report.csv"));
  CHECK(slurp(a / "mean_curves.csv") == slurp(b / "mean_curves.csv"));
}

TEST_CASE("run_compare enforces the exhaustive cap and method list") {
  RunConfig config;
  std::ostringstream log;
  config.spec = SampleSpec::exhaustive(7);  // default cap 6
  config.out_dir = temp_dir("compare_cap").string();
  CHECK(run_compare(config, log) == kExitPrecondition);

  config.spec = SampleSpec::exhaustive(4);
  config.methods.clear();
  CHECK(run_compare(config, log) == kExitPrecondition);
}

TEST_CASE("run_verify passes on exhaustive n=4") {
  RunConfig config;
  config.spec = SampleSpec::exhaustive(4);
  config.out_dir = temp_dir("verify_ok").string();
  std::ostringstream log;
  CHECK(run_verify(config, log) == kExitOk);
  CHECK(log.str().find("PASS") != std::string::npos);
}

TEST_CASE("run_verify reports a corrupted assignment with its graph id") {
  RunConfig config;
  config.spec = SampleSpec::exhaustive(4);
  config.out_dir = temp_dir("verify_bad").string();
  // corrupt graph 37 only
  std::uint64_t counter = 0;
  config.decompose_override = [&counter](const Graph& g, Method m) {
    auto a = decompose(g, m);
    std::uint64_t id = counter++ / 3;  // three methods per graph
    if (id == 37 && !a.core.empty()) a.core[0] += 1;
    return a;
  };
  std::ostringstream log;
  CHECK(run_verify(config, log) == kExitVerifyFailed);
  CHECK(log.str().find("graph 37") != std::string::npos);
  CHECK(log.str().find("reproduce:") != std::string::npos);
}

TEST_CASE("run_verify refuses above the oracle cap") {
  RunConfig config;
  config.spec = SampleSpec::random(13, 0.5, 10, 1);
  config.out_dir = temp_dir("verify_cap").string();
  std::ostringstream log;
  CHECK(run_verify(config, log) == kExitPrecondition);
}

TEST_CASE("run_bench writes timing and exponents") {
  RunConfig config;
  config.bench_n_min = 8;
  config.bench_n_max = 14;
  config.bench_n_step = 2;
  config.bench_samples = 2;
  config.out_dir = temp_dir("bench").string();
  std::ostringstream log;
  REQUIRE(run_bench(config, log) == kExitOk);
  std::string timing = slurp(fs::path(config.out_dir) / "timing.csv");
  CHECK(timing.rfind("n,method,mean_seconds,per_n2,per_n3\n", 0) == 0);
  CHECK(fs::exists(fs::path(config.out_dir) / "exponents.csv"));

  config.bench_samples = 0;
  CHECK(run_bench(config, log) == kExitPrecondition);
}
