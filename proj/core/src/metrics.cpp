#include "peel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace peel {

namespace {

void require_nonempty(const CoreAssignment& a) {
  if (a.core.empty())
    throw std::invalid_argument("metric undefined on the empty graph");
}

}  // namespace

std::vector<int> best_level(const CoreAssignment& a) {
  require_nonempty(a);
  long long top = a.highest();
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(a.core.size()); ++v)
    if (a.core[v] == top) out.push_back(v);
  return out;
}

double best_level_clique_density(const Graph& g, std::span<const int> s) {
  if (s.size() < 2)
    throw std::invalid_argument("clique density needs at least 2 vertices");
  Graph sub = g.induced_subgraph(s);
  long long k = sub.vertex_count();
  return static_cast<double>(sub.edge_count()) /
         (static_cast<double>(k) * (k - 1) / 2.0);
}

long long level_number(const CoreAssignment& a) {
  require_nonempty(a);
  std::vector<long long> vals = a.core;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return static_cast<long long>(vals.size());
}

double rms(const CoreAssignment& a) {
  require_nonempty(a);
  std::map<long long, long long> counts;
  for (long long c : a.core) ++counts[c];
  const double n = static_cast<double>(a.core.size());
  double sum = 0.0;
  for (auto [k, nk] : counts) {
    double f = static_cast<double>(nk) / n;
    sum += f * f;
  }
  return std::sqrt(sum);
}

std::vector<std::pair<long long, long long>> core_size_curve(
    const CoreAssignment& a, bool distinct_only) {
  std::vector<std::pair<long long, long long>> out;
  if (a.core.empty()) return out;
  long long top = a.highest();
  std::vector<long long> exact(static_cast<std::size_t>(top) + 1, 0);
  for (long long c : a.core) ++exact[static_cast<std::size_t>(c)];
  long long cum = 0;
  std::vector<long long> at_least(exact.size());
  for (long long k = top; k >= 0; --k) {
    cum += exact[static_cast<std::size_t>(k)];
    at_least[static_cast<std::size_t>(k)] = cum;
  }
  for (long long k = 0; k <= top; ++k) {
    if (distinct_only && exact[static_cast<std::size_t>(k)] == 0) continue;
    out.emplace_back(k, at_least[static_cast<std::size_t>(k)]);
  }
  return out;
}

DecompositionReport report(const Graph& g, const CoreAssignment& a) {
  require_nonempty(a);
  DecompositionReport r;
  r.method = a.method;
  auto best = best_level(a);
  r.best_level_size = static_cast<long long>(best.size());
  if (best.size() >= 2)
    r.best_level_clique_density = best_level_clique_density(g, best);
  r.highest_core_number = a.highest();
  r.level_number = level_number(a);
  r.rms = rms(a);
  r.core_size_curve = core_size_curve(a, false);
  r.distinct_core_size_curve = core_size_curve(a, true);
  return r;
}

std::vector<MeanReport> aggregate_means(
    const std::vector<DecompositionReport>& reports) {
  if (reports.empty())
    throw std::invalid_argument("aggregate_means over empty input");
  // group by method, preserving first-appearance order
  std::vector<MeanReport> out;
  auto slot = [&](const std::string& method) -> MeanReport& {
    for (auto& m : out)
      if (m.method == method) return m;
    out.push_back(MeanReport{});
    out.back().method = method;
    return out.back();
  };
  for (const auto& r : reports) {
    MeanReport& m = slot(r.method);
    ++m.count;
    m.best_level_size += static_cast<double>(r.best_level_size);
    if (r.best_level_clique_density) {
      m.best_level_clique_density =
          m.best_level_clique_density.value_or(0.0) +
          *r.best_level_clique_density;
      ++m.density_count;
    }
    m.highest_core_number += static_cast<double>(r.highest_core_number);
    m.level_number += static_cast<double>(r.level_number);
    m.rms += r.rms;
    for (auto [k, size] : r.core_size_curve) {
      if (m.mean_core_size_curve.size() <= static_cast<std::size_t>(k))
        m.mean_core_size_curve.resize(static_cast<std::size_t>(k) + 1, 0.0);
      m.mean_core_size_curve[static_cast<std::size_t>(k)] +=
          static_cast<double>(size);
    }
  }
  for (auto& m : out) {
    double c = static_cast<double>(m.count);
    m.best_level_size /= c;
    if (m.best_level_clique_density)
      *m.best_level_clique_density /= static_cast<double>(m.density_count);
    m.highest_core_number /= c;
    m.level_number /= c;
    m.rms /= c;
    // absent points count as size 0: divide by the full report count
    for (double& s : m.mean_core_size_curve) s /= c;
  }
  return out;
}

}  // namespace peel
