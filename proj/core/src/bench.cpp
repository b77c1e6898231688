#include "peel/bench.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "peel/generators.hpp"

namespace peel {

namespace {

using Clock = std::chrono::steady_clock;

double timed_decompose(const Graph& g, Method m, CoreAssignment& scratch) {
  auto t0 = Clock::now();
  decompose_into(g, m, scratch);
  auto t1 = Clock::now();
  volatile long long sink = scratch.highest();
  (void)sink;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

TimingTable time_methods(const std::vector<int>& n_values, long long samples,
                         double p, std::uint64_t seed) {
  if (n_values.empty()) throw std::invalid_argument("no n values given");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  const Method methods[] = {Method::kcore, Method::tricore, Method::vtricore};
  TimingTable table;
  CoreAssignment scratch;
  std::uint64_t next_seed = seed;
  for (int n : n_values) {
    for (Method m : methods) {
      // warm-up, not measured
      decompose_into(random_gnp(n, p, next_seed), m, scratch);
      double total = 0.0;
      for (long long i = 0; i < samples; ++i) {
        Graph g = random_gnp(n, p, next_seed + 1 + static_cast<std::uint64_t>(i));
        // one untimed pass per graph so the timed run measures the
        // algorithm rather than first-touch misses on fresh input
        decompose_into(g, m, scratch);
        total += timed_decompose(g, m, scratch);
      }
      table.rows.push_back({n, m, total / static_cast<double>(samples),
                            samples});
    }
    next_seed += static_cast<std::uint64_t>(samples) + 1;
  }
  return table;
}

std::map<Method, double> complexity_check(const TimingTable& t) {
  std::map<Method, std::set<int>> distinct;
  for (const auto& r : t.rows) distinct[r.method].insert(r.n);
  for (const auto& [m, ns] : distinct)
    if (ns.size() < 4)
      throw std::invalid_argument(
          std::string("complexity fit needs >= 4 distinct n for ") +
          method_name(m));

  std::map<Method, double> out;
  for (const auto& [m, ns] : distinct) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double cnt = 0;
    for (const auto& r : t.rows) {
      if (r.method != m || r.mean_seconds <= 0.0) continue;
      double x = std::log(static_cast<double>(r.n));
      double y = std::log(r.mean_seconds);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      cnt += 1;
    }
    out[m] = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  }
  return out;
}

}  // namespace peel
