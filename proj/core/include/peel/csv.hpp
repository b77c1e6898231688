#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peel/bench.hpp"
#include "peel/decompose.hpp"
#include "peel/graph.hpp"
#include "peel/metrics.hpp"

namespace peel {
namespace csv {

// "vertex,core_number", original labels, rows sorted by label
std::string core_assignment(const Graph& g, const CoreAssignment& a);

// "u,v,level" with label u < label v, rows sorted
std::string edge_levels(const Graph& g, const EdgeLevelAssignment& e);

std::string report_header();
std::string report_row(std::uint64_t graph_id, const DecompositionReport& r);

// long format "graph_id,method,k,size"
std::string curve_header();
std::string curve_rows(std::uint64_t graph_id, const std::string& method,
                       const std::vector<std::pair<long long, long long>>&
                           curve);

std::string mean_report_table(const std::vector<MeanReport>& means);
std::string mean_curve_table(const std::vector<MeanReport>& means);

// "n,method,mean_seconds,per_n2,per_n3"
std::string timing_table(const TimingTable& t);
std::string exponent_table(const std::map<Method, double>& exponents);

std::string format_double(double x);

}  // namespace csv
}  // namespace peel
