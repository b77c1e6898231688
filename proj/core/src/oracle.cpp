#include "peel/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace peel {

namespace {

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw std::invalid_argument("oracle refused: " +
                                std::to_string(g.vertex_count()) +
                                " vertices exceeds cap " + std::to_string(cap));
}

int alive_degree(const Graph& g, int v, const std::vector<char>& alive) {
  int d = 0;
  for (int w : g.neighbors(v)) d += alive[w] ? 1 : 0;
  return d;
}

long long alive_vertex_triangles(const Graph& g, int v,
                                 const std::vector<char>& alive) {
  long long t = 0;
  const auto& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    if (!alive[nv[i]]) continue;
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      if (!alive[nv[j]]) continue;
      if (g.has_edge(nv[i], nv[j])) ++t;
    }
  }
  return t;
}

}  // namespace

CoreAssignment oracle_k_core(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  CoreAssignment out{method_name(Method::kcore), std::vector<long long>(n, 0)};
  std::vector<char> alive(n, 1);
  for (long long k = 1;; ++k) {
    // fixpoint of "delete every vertex with degree < k"
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && alive_degree(g, v, alive) < k) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v]) {
        out.core[v] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

EdgeLevelAssignment oracle_triangle_edge_levels(const Graph& g, int cap) {
  check_cap(g, cap);
  EdgeLevelAssignment out;
  out.edges = g.edges();
  const int m = static_cast<int>(out.edges.size());
  out.level.assign(m, 0);
  std::vector<char> alive(m, 1);

  auto support = [&](int e) {
    long long s = 0;
    auto [u, v] = out.edges[e];
    for (int f = 0; f < m; ++f) {
      if (!alive[f]) continue;
      auto [a, b] = out.edges[f];
      int w = -1;
      if (a == u) w = b;
      else if (b == u) w = a;
      else continue;
      if (w == v) continue;
      // (u,w) alive; need (v,w) alive too
      int x = std::min(v, w), y = std::max(v, w);
      for (int h = 0; h < m; ++h)
        if (alive[h] && out.edges[h].u == x && out.edges[h].v == y) {
          ++s;
          break;
        }
    }
    return s;
  };

  for (long long k = 1;; ++k) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < m; ++e) {
        if (alive[e] && support(e) < k) {
          alive[e] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int e = 0; e < m; ++e) {
      if (alive[e]) {
        out.level[e] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

CoreAssignment oracle_vertex_triangle_core(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  CoreAssignment out{method_name(Method::vtricore),
                     std::vector<long long>(n, 0)};
  std::vector<char> alive(n, 1);
  for (long long k = 1;; ++k) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && alive_vertex_triangles(g, v, alive) < k) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v]) {
        out.core[v] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

CoreAssignment oracle_core_numbers(const Graph& g, Method m, int cap) {
  switch (m) {
    case Method::kcore:
      return oracle_k_core(g, cap);
    case Method::vtricore:
      return oracle_vertex_triangle_core(g, cap);
    case Method::tricore: {
      auto levels = oracle_triangle_edge_levels(g, cap);
      CoreAssignment out{method_name(Method::tricore),
                         std::vector<long long>(g.vertex_count(), 0)};
      for (std::size_t i = 0; i < levels.edges.size(); ++i) {
        auto [u, v] = levels.edges[i];
        out.core[u] = std::max(out.core[u], levels.level[i]);
        out.core[v] = std::max(out.core[v], levels.level[i]);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace peel
