#pragma once

#include "peel/decompose.hpp"
#include "peel/graph.hpp"

namespace peel {

// Brute-force reference implementations: repeated full rescans deleting
// every violating element until fixpoint, no shared bookkeeping with the
// peeling implementations. Refused above `cap` vertices.
inline constexpr int kOracleDefaultCap = 12;

CoreAssignment oracle_k_core(const Graph& g, int cap = kOracleDefaultCap);
EdgeLevelAssignment oracle_triangle_edge_levels(const Graph& g,
                                                int cap = kOracleDefaultCap);
CoreAssignment oracle_vertex_triangle_core(const Graph& g,
                                           int cap = kOracleDefaultCap);

CoreAssignment oracle_core_numbers(const Graph& g, Method m,
                                   int cap = kOracleDefaultCap);

}  // namespace peel
