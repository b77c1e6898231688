#pragma once

#include <functional>
#include <string>
#include <vector>

#include "peel/graph.hpp"

namespace peel {

enum class Method { kcore, tricore, vtricore };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct CoreAssignment {
  std::string method;
  std::vector<long long> core;  // per dense vertex index

  long long highest() const;
};

// Per-edge triangle-core level; trussness = level + 2. Edges in the
// same (u < v, lexicographic) order as Graph::edges().
struct EdgeLevelAssignment {
  std::vector<EdgeRef> edges;
  std::vector<long long> level;
};

struct TriangleCoreResult {
  CoreAssignment vertices;
  EdgeLevelAssignment edges;
};

CoreAssignment k_core_decompose(const Graph& g);
TriangleCoreResult triangle_core_decompose(const Graph& g);
CoreAssignment vertex_triangle_core_decompose(const Graph& g);

CoreAssignment decompose(const Graph& g, Method m);

// Buffer-reusing variants: repeated calls with the same `out` object do
// not allocate once its capacity has grown to fit. Used by the timing
// harness so measured runs exercise only the algorithm.
void k_core_decompose(const Graph& g, CoreAssignment& out);
void triangle_core_decompose(const Graph& g, TriangleCoreResult& out);
void vertex_triangle_core_decompose(const Graph& g, CoreAssignment& out);
void decompose_into(const Graph& g, Method m, CoreAssignment& out);

// k-truss edge set, k >= 2: edges with triangle-core level >= k-2.
std::vector<EdgeRef> truss_edges(const Graph& g, int k);

// Vertex property function over the current surviving vertex set.
// alive[v] != 0 marks membership; evaluate must only look at alive
// vertices of g.
struct PropertyFunction {
  std::string name;
  bool monotone = false;
  std::function<double(int v, const Graph& g, const std::vector<char>& alive)>
      evaluate;
};

PropertyFunction degree_property();           // reproduces k-core
PropertyFunction vertex_triangle_property();  // reproduces vertex triangle

// Generic monotone peeling: for each threshold t in `levels` (ascending)
// computes the p-core at level t by iterated deletion, and reports for
// each vertex the index of the largest level whose core contains it
// (-1 when the vertex is in no core).
CoreAssignment p_core_decompose(const Graph& g, const PropertyFunction& p,
                                const std::vector<double>& levels);

}  // namespace peel
