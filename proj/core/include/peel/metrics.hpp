#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peel/decompose.hpp"
#include "peel/graph.hpp"

namespace peel {

struct DecompositionReport {
  std::string method;
  long long best_level_size = 0;
  // absent when the best level has fewer than 2 vertices
  std::optional<double> best_level_clique_density;
  long long highest_core_number = 0;
  long long level_number = 0;
  double rms = 0.0;
  std::vector<std::pair<long long, long long>> core_size_curve;
  std::vector<std::pair<long long, long long>> distinct_core_size_curve;
};

// Pointwise means over one method's reports.
struct MeanReport {
  std::string method;
  std::size_t count = 0;
  double best_level_size = 0.0;
  std::optional<double> best_level_clique_density;  // mean over defined values
  std::size_t density_count = 0;
  double highest_core_number = 0.0;
  double level_number = 0.0;
  double rms = 0.0;
  // mean size at each k; reports with no level k contribute 0
  std::vector<double> mean_core_size_curve;
};

// Vertices attaining the maximum core number.
std::vector<int> best_level(const CoreAssignment& a);

// edges / C(|s|,2); 1 exactly for cliques. |s| >= 2 required.
double best_level_clique_density(const Graph& g, std::span<const int> s);

long long level_number(const CoreAssignment& a);

// sqrt(sum_k (n(k)/n)^2) over per-level vertex counts n(k).
double rms(const CoreAssignment& a);

// size(k) = |{v : core >= k}| for k = 0..highest; distinct_only keeps
// only k with a non-empty level.
std::vector<std::pair<long long, long long>> core_size_curve(
    const CoreAssignment& a, bool distinct_only);

DecompositionReport report(const Graph& g, const CoreAssignment& a);

std::vector<MeanReport> aggregate_means(
    const std::vector<DecompositionReport>& reports);

}  // namespace peel
