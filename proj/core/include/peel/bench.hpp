#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peel/decompose.hpp"

namespace peel {

struct TimingRow {
  int n = 0;
  Method method = Method::kcore;
  double mean_seconds = 0.0;
  long long samples = 0;
};

struct TimingTable {
  std::vector<TimingRow> rows;  // one row per (n, method)
};

// For each n: `samples` random G(n,p) graphs, wall time of each
// decomposition measured per graph with a monotonic clock, graph
// construction excluded. One warm-up decomposition per (n, method)
// plus one untimed pass per sample graph before its timed run, so the
// timed region reflects the algorithm rather than first-touch effects.
// Strictly sequential.
TimingTable time_methods(const std::vector<int>& n_values, long long samples,
                         double p, std::uint64_t seed);

// Least-squares slope of log(mean_time) vs log(n) per method; needs at
// least 4 distinct n per method.
std::map<Method, double> complexity_check(const TimingTable& t);

}  // namespace peel
