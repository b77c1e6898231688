#include "peel/run.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "peel/bench.hpp"
#include "peel/csv.hpp"

namespace peel {

namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "1.0.0";

std::string spec_description(const SampleSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case SampleSpec::Kind::exhaustive:
      out << "exhaustive n=" << spec.n;
      break;
    case SampleSpec::Kind::random:
      out << "random n=" << spec.n << " p=" << csv::format_double(spec.p)
          << " count=" << spec.count << " seed=" << spec.seed;
      break;
    case SampleSpec::Kind::file:
      out << "file " << spec.path;
      break;
  }
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_manifest(const RunConfig& config, const std::string& command) {
  std::ostringstream out;
  out << "command: " << command << '\n'
      << "version: " << kVersion << '\n'
      << "sample: " << spec_description(config.spec) << '\n'
      << "methods:";
  for (Method m : config.methods) out << ' ' << method_name(m);
  out << '\n'
      << "seed: " << config.spec.seed << '\n'
      << "distinct_curve: " << (config.distinct_curve ? "true" : "false")
      << '\n';
  if (command == "bench")
    out << "bench: n=" << config.bench_n_min << ".." << config.bench_n_max
        << " step=" << config.bench_n_step
        << " samples=" << config.bench_samples
        << " p=" << csv::format_double(config.bench_p) << '\n';
  write_file(fs::path(config.out_dir) / "manifest.txt", out.str());
}

void require_methods(const RunConfig& config) {
  if (config.methods.empty())
    throw std::invalid_argument("at least one method must be selected");
}

void check_spec(const RunConfig& config) {
  const auto& spec = config.spec;
  if (spec.kind == SampleSpec::Kind::exhaustive &&
      spec.n > config.exhaustive_cap)
    throw std::invalid_argument(
        "exhaustive n=" + std::to_string(spec.n) + " (" +
        std::to_string(exhaustive_population(spec.n)) +
        " graphs) exceeds cap " + std::to_string(config.exhaustive_cap) +
        "; raise with --cap (hard limit " +
        std::to_string(kExhaustiveHardCap) + ")");
}

Graph load_single_graph(const SampleSpec& spec) {
  if (spec.kind != SampleSpec::Kind::file)
    throw std::invalid_argument("decompose needs an --input file");
  return Graph::from_edge_list(parse_snap_file(spec.path));
}

int guarded(std::ostream& log, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    log << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace

CompareResult compare_sample(const SampleSpec& spec,
                             const std::vector<Method>& methods) {
  std::vector<DecompositionReport> reports;
  sample_stream(spec, [&](std::uint64_t, const Graph& g) {
    if (g.vertex_count() == 0) return;  // metrics undefined on empty graph
    for (Method m : methods) reports.push_back(report(g, decompose(g, m)));
  });
  if (reports.empty())
    throw std::invalid_argument("sample produced no non-empty graphs");
  CompareResult out;
  out.means = aggregate_means(reports);
  out.mean_report_csv = csv::mean_report_table(out.means);
  out.mean_curves_csv = csv::mean_curve_table(out.means);
  return out;
}

int run_decompose(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    require_methods(config);
    Graph g = load_single_graph(config.spec);
    if (g.vertex_count() == 0)
      throw std::invalid_argument("input graph is empty");
    fs::create_directories(config.out_dir);
    write_manifest(config, "decompose");

    std::string report_csv = csv::report_header();
    for (Method m : config.methods) {
      CoreAssignment a;
      if (m == Method::tricore) {
        auto res = triangle_core_decompose(g);
        a = std::move(res.vertices);
        write_file(fs::path(config.out_dir) / "tricore.edge_levels.csv",
                   csv::edge_levels(g, res.edges));
      } else {
        a = decompose(g, m);
      }
      write_file(fs::path(config.out_dir) /
                     (std::string(method_name(m)) + ".cores.csv"),
                 csv::core_assignment(g, a));
      DecompositionReport r = report(g, a);
      report_csv += csv::report_row(0, r);
      write_file(
          fs::path(config.out_dir) /
              (std::string(method_name(m)) + ".curve.csv"),
          csv::curve_header() +
              csv::curve_rows(0, r.method,
                              config.distinct_curve
                                  ? r.distinct_core_size_curve
                                  : r.core_size_curve));
      log << method_name(m) << ": highest core " << r.highest_core_number
          << ", best level size " << r.best_level_size << '\n';
    }
    write_file(fs::path(config.out_dir) / "report.csv", report_csv);
    return kExitOk;
  });
}

int run_compare(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    require_methods(config);
    check_spec(config);
    CompareResult result = compare_sample(config.spec, config.methods);
    fs::create_directories(config.out_dir);
    write_manifest(config, "compare");
    write_file(fs::path(config.out_dir) / "mean_report.csv",
               result.mean_report_csv);
    write_file(fs::path(config.out_dir) / "mean_curves.csv",
               result.mean_curves_csv);
    for (const auto& m : result.means)
      log << m.method << ": mean best level size "
          << csv::format_double(m.best_level_size) << ", mean rms "
          << csv::format_double(m.rms) << " over " << m.count << " graphs\n";
    return kExitOk;
  });
}

int run_verify(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    require_methods(config);
    check_spec(config);
    if (config.spec.kind != SampleSpec::Kind::exhaustive &&
        config.spec.kind != SampleSpec::Kind::random)
      throw std::invalid_argument("verify needs an exhaustive or random sample");
    if (config.spec.n > config.oracle_cap)
      throw std::invalid_argument(
          "verify refused: n=" + std::to_string(config.spec.n) +
          " exceeds oracle cap " + std::to_string(config.oracle_cap));

    bool failed = false;
    std::uint64_t bad_id = 0;
    std::string bad_method;
    std::uint64_t checked = 0;
    sample_stream(config.spec, [&](std::uint64_t id, const Graph& g) {
      if (failed) return;
      ++checked;
      for (Method m : config.methods) {
        CoreAssignment got = config.decompose_override
                                 ? config.decompose_override(g, m)
                                 : decompose(g, m);
        if (got.core != oracle_core_numbers(g, m, config.oracle_cap).core) {
          failed = true;
          bad_id = id;
          bad_method = method_name(m);
          return;
        }
      }
    });

    fs::create_directories(config.out_dir);
    write_manifest(config, "verify");
    if (failed) {
      std::ostringstream msg;
      msg << "FAIL: method " << bad_method << " disagrees with oracle on graph "
          << bad_id << " of sample " << spec_description(config.spec) << '\n'
          << "reproduce: peel verify";
      if (config.spec.kind == SampleSpec::Kind::exhaustive)
        msg << " --exhaustive " << config.spec.n;
      else
        msg << " --random " << config.spec.n << ','
            << csv::format_double(config.spec.p) << ',' << config.spec.count
            << " --seed " << config.spec.seed;
      msg << " --methods " << bad_method << '\n';
      log << msg.str();
      write_file(fs::path(config.out_dir) / "verify.txt", msg.str());
      return kExitVerifyFailed;
    }
    std::ostringstream msg;
    msg << "PASS: all methods match the oracle on " << checked
        << " graphs (" << spec_description(config.spec) << ")\n";
    log << msg.str();
    write_file(fs::path(config.out_dir) / "verify.txt", msg.str());
    return kExitOk;
  });
}

int run_bench(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    if (config.bench_samples < 1)
      throw std::invalid_argument("bench samples must be >= 1");
    if (config.bench_n_min < 1 || config.bench_n_max < config.bench_n_min ||
        config.bench_n_step < 1)
      throw std::invalid_argument("bad bench n range");
    std::vector<int> n_values;
    for (int n = config.bench_n_min; n <= config.bench_n_max;
         n += config.bench_n_step)
      n_values.push_back(n);

    TimingTable table = time_methods(n_values, config.bench_samples,
                                     config.bench_p, config.spec.seed);
    fs::create_directories(config.out_dir);
    write_manifest(config, "bench");
    write_file(fs::path(config.out_dir) / "timing.csv",
               csv::timing_table(table));
    if (n_values.size() >= 4) {
      auto exponents = complexity_check(table);
      write_file(fs::path(config.out_dir) / "exponents.csv",
                 csv::exponent_table(exponents));
      for (auto [m, e] : exponents)
        log << method_name(m) << ": fitted exponent "
            << csv::format_double(e) << '\n';
    } else {
      log << "fewer than 4 n values, exponent fit skipped\n";
    }
    return kExitOk;
  });
}

}  // namespace peel
