#include "peel/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace peel {
namespace csv {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string core_assignment(const Graph& g, const CoreAssignment& a) {
  std::vector<std::pair<Label, long long>> rows;
  rows.reserve(a.core.size());
  for (int v = 0; v < g.vertex_count(); ++v)
    rows.emplace_back(g.label(v), a.core[v]);
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << "vertex,core_number\n";
  for (auto [label, core] : rows) out << label << ',' << core << '\n';
  return out.str();
}

std::string edge_levels(const Graph& g, const EdgeLevelAssignment& e) {
  std::vector<std::tuple<Label, Label, long long>> rows;
  rows.reserve(e.edges.size());
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    Label a = g.label(e.edges[i].u);
    Label b = g.label(e.edges[i].v);
    if (a > b) std::swap(a, b);
    rows.emplace_back(a, b, e.level[i]);
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << "u,v,level\n";
  for (auto [a, b, level] : rows)
    out << a << ',' << b << ',' << level << '\n';
  return out.str();
}

std::string report_header() {
  return "graph_id,method,best_level_size,best_level_clique_density,"
         "highest_core_number,level_number,rms\n";
}

std::string report_row(std::uint64_t graph_id, const DecompositionReport& r) {
  std::ostringstream out;
  out << graph_id << ',' << r.method << ',' << r.best_level_size << ',';
  if (r.best_level_clique_density)
    out << format_double(*r.best_level_clique_density);
  out << ',' << r.highest_core_number << ',' << r.level_number << ','
      << format_double(r.rms) << '\n';
  return out.str();
}

std::string curve_header() { return "graph_id,method,k,size\n"; }

std::string curve_rows(
    std::uint64_t graph_id, const std::string& method,
    const std::vector<std::pair<long long, long long>>& curve) {
  std::ostringstream out;
  for (auto [k, size] : curve)
    out << graph_id << ',' << method << ',' << k << ',' << size << '\n';
  return out.str();
}

std::string mean_report_table(const std::vector<MeanReport>& means) {
  std::ostringstream out;
  out << "method,count,mean_best_level_size,mean_best_level_clique_density,"
         "mean_highest_core_number,mean_level_number,mean_rms\n";
  for (const auto& m : means) {
    out << m.method << ',' << m.count << ','
        << format_double(m.best_level_size) << ',';
    if (m.best_level_clique_density)
      out << format_double(*m.best_level_clique_density);
    out << ',' << format_double(m.highest_core_number) << ','
        << format_double(m.level_number) << ',' << format_double(m.rms)
        << '\n';
  }
  return out.str();
}

std::string mean_curve_table(const std::vector<MeanReport>& means) {
  std::ostringstream out;
  out << "method,k,mean_size\n";
  for (const auto& m : means)
    for (std::size_t k = 0; k < m.mean_core_size_curve.size(); ++k)
      out << m.method << ',' << k << ','
          << format_double(m.mean_core_size_curve[k]) << '\n';
  return out.str();
}

std::string timing_table(const TimingTable& t) {
  std::ostringstream out;
  out << "n,method,mean_seconds,per_n2,per_n3\n";
  for (const auto& r : t.rows) {
    double n = static_cast<double>(r.n);
    out << r.n << ',' << method_name(r.method) << ','
        << format_double(r.mean_seconds) << ','
        << format_double(r.mean_seconds / (n * n)) << ','
        << format_double(r.mean_seconds / (n * n * n)) << '\n';
  }
  return out.str();
}

std::string exponent_table(const std::map<Method, double>& exponents) {
  std::ostringstream out;
  out << "method,exponent\n";
  for (const auto& [m, e] : exponents)
    out << method_name(m) << ',' << format_double(e) << '\n';
  return out.str();
}

}  // namespace csv
}  // namespace peel
