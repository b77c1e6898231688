#include "peel/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace peel {

const char* method_name(Method m) {
  switch (m) {
    case Method::kcore: return "kcore";
    case Method::tricore: return "tricore";
    case Method::vtricore: return "vtricore";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "kcore") return Method::kcore;
  if (name == "tricore") return Method::tricore;
  if (name == "vtricore") return Method::vtricore;
  throw std::invalid_argument("unknown method: " + name);
}

long long CoreAssignment::highest() const {
  long long h = 0;
  for (long long c : core) h = std::max(h, c);
  return h;
}

namespace {

// Deduplicating FIFO worklist: an element pending twice is processed
// once per insertion epoch. Ring buffer sized to the element count,
// valid because at most `size` elements are pending at once. The
// pending flags are all clear whenever the queue has been drained, so
// an instance can be reused after growing its capacity.
class Worklist {
 public:
  Worklist() = default;
  explicit Worklist(std::size_t size) { reserve(size); }

  void reserve(std::size_t size) {
    if (pending_.size() < size) {
      pending_.resize(size, 0);
      ring_.resize(size + 1);
    }
    head_ = tail_ = 0;
  }

  void push(int x) {
    if (!pending_[x]) {
      pending_[x] = 1;
      ring_[tail_] = x;
      if (++tail_ == ring_.size()) tail_ = 0;
    }
  }

  bool empty() const { return head_ == tail_; }

  int pop() {
    int x = ring_[head_];
    if (++head_ == ring_.size()) head_ = 0;
    pending_[x] = 0;
    return x;
  }

 private:
  std::vector<char> pending_;
  std::vector<int> ring_;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
};

}  // namespace

void k_core_decompose(const Graph& g, CoreAssignment& out) {
  const int n = g.vertex_count();
  out.method = method_name(Method::kcore);
  out.core.assign(n, 0);
  // thread-local scratch keeps repeated calls allocation-free
  thread_local std::vector<int> deg;
  thread_local std::vector<char> alive;
  thread_local Worklist work;
  deg.resize(n);
  alive.assign(n, 1);
  work.reserve(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  int remaining = n;
  long long k = 0;
  while (remaining > 0) {
    ++k;
    for (int v = 0; v < n; ++v)
      if (alive[v]) work.push(v);
    while (!work.empty()) {
      int v = work.pop();
      if (!alive[v] || deg[v] >= k) continue;
      for (int w : g.neighbors(v)) {
        if (!alive[w]) continue;
        --deg[w];
        work.push(w);
      }
      out.core[v] = k - 1;
      alive[v] = 0;
      --remaining;
    }
  }
}

CoreAssignment k_core_decompose(const Graph& g) {
  CoreAssignment out;
  k_core_decompose(g, out);
  return out;
}

void triangle_core_decompose(const Graph& g, TriangleCoreResult& out) {
  const int n = g.vertex_count();
  out.vertices.method = method_name(Method::tricore);
  out.vertices.core.assign(n, 0);
  out.edges.edges = g.edges();
  const int m = static_cast<int>(out.edges.edges.size());
  out.edges.level.assign(m, 0);

  // adjacency annotated with edge ids, sorted by neighbor
  thread_local std::vector<std::vector<std::pair<int, int>>> inc;
  if (inc.size() < static_cast<std::size_t>(n)) inc.resize(n);
  for (int v = 0; v < n; ++v) inc[v].clear();
  for (int e = 0; e < m; ++e) {
    auto [u, v] = out.edges.edges[e];
    inc[u].emplace_back(v, e);
    inc[v].emplace_back(u, e);
  }

  thread_local std::vector<long long> tri;
  thread_local std::vector<int> deg;
  thread_local std::vector<char> alive;
  thread_local Worklist work;
  tri.resize(m);
  for (int e = 0; e < m; ++e)
    tri[e] = g.triangles_through_edge(out.edges.edges[e]);
  deg.resize(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  alive.assign(m, 1);
  work.reserve(m);

  int remaining = m;
  long long k = 0;
  while (remaining > 0) {
    ++k;
    for (int e = 0; e < m; ++e)
      if (alive[e]) work.push(e);
    while (!work.empty()) {
      int e = work.pop();
      if (!alive[e] || tri[e] >= k) continue;
      auto [u, v] = out.edges.edges[e];
      // triangles of e: common neighbors w with both (u,w) and (v,w) alive
      auto iu = inc[u].begin();
      auto iv = inc[v].begin();
      while (iu != inc[u].end() && iv != inc[v].end()) {
        if (iu->first < iv->first) {
          ++iu;
        } else if (iv->first < iu->first) {
          ++iv;
        } else {
          if (alive[iu->second] && alive[iv->second]) {
            --tri[iu->second];
            work.push(iu->second);
            --tri[iv->second];
            work.push(iv->second);
          }
          ++iu;
          ++iv;
        }
      }
      alive[e] = 0;
      --remaining;
      out.edges.level[e] = k - 1;
      for (int x : {u, v}) {
        --deg[x];
        if (deg[x] == 0) out.vertices.core[x] = k - 1;
      }
    }
  }
}

TriangleCoreResult triangle_core_decompose(const Graph& g) {
  TriangleCoreResult out;
  triangle_core_decompose(g, out);
  return out;
}

void vertex_triangle_core_decompose(const Graph& g, CoreAssignment& out) {
  const int n = g.vertex_count();
  out.method = method_name(Method::vtricore);
  out.core.assign(n, 0);
  thread_local std::vector<long long> tri;
  thread_local std::vector<char> alive;
  thread_local Worklist work;
  tri.resize(n);
  for (int v = 0; v < n; ++v) tri[v] = g.triangles_through_vertex(v);
  alive.assign(n, 1);
  work.reserve(n);

  int remaining = n;
  long long k = 0;
  while (remaining > 0) {
    ++k;
    for (int v = 0; v < n; ++v)
      if (alive[v]) work.push(v);
    while (!work.empty()) {
      int v = work.pop();
      if (!alive[v] || tri[v] >= k) continue;
      // triangles {v,a,b} with a < b, both alive and adjacent
      const auto& nv = g.neighbors(v);
      for (int a : nv) {
        if (!alive[a]) continue;
        const auto& na = g.neighbors(a);
        auto ia = na.begin();
        auto ivn = nv.begin();
        while (ia != na.end() && ivn != nv.end()) {
          if (*ia < *ivn) {
            ++ia;
          } else if (*ivn < *ia) {
            ++ivn;
          } else {
            int b = *ia;
            if (b > a && alive[b]) {
              --tri[a];
              work.push(a);
              --tri[b];
              work.push(b);
            }
            ++ia;
            ++ivn;
          }
        }
      }
      out.core[v] = k - 1;
      alive[v] = 0;
      --remaining;
    }
  }
}

CoreAssignment vertex_triangle_core_decompose(const Graph& g) {
  CoreAssignment out;
  vertex_triangle_core_decompose(g, out);
  return out;
}

CoreAssignment decompose(const Graph& g, Method m) {
  switch (m) {
    case Method::kcore: return k_core_decompose(g);
    case Method::tricore: return triangle_core_decompose(g).vertices;
    case Method::vtricore: return vertex_triangle_core_decompose(g);
  }
  throw std::logic_error("unreachable");
}

void decompose_into(const Graph& g, Method m, CoreAssignment& out) {
  switch (m) {
    case Method::kcore: k_core_decompose(g, out); return;
    case Method::tricore: {
      thread_local TriangleCoreResult full;
      triangle_core_decompose(g, full);
      out = full.vertices;
      return;
    }
    case Method::vtricore: vertex_triangle_core_decompose(g, out); return;
  }
  throw std::logic_error("unreachable");
}

std::vector<EdgeRef> truss_edges(const Graph& g, int k) {
  if (k < 2) throw std::domain_error("truss order must be >= 2");
  auto res = triangle_core_decompose(g);
  std::vector<EdgeRef> out;
  for (std::size_t i = 0; i < res.edges.edges.size(); ++i)
    if (res.edges.level[i] >= k - 2) out.push_back(res.edges.edges[i]);
  return out;
}

PropertyFunction degree_property() {
  return {"degree", true,
          [](int v, const Graph& g, const std::vector<char>& alive) {
            int d = 0;
            for (int w : g.neighbors(v)) d += alive[w] ? 1 : 0;
            return static_cast<double>(d);
          }};
}

PropertyFunction vertex_triangle_property() {
  return {"vertex-triangles", true,
          [](int v, const Graph& g, const std::vector<char>& alive) {
            long long t = 0;
            const auto& nv = g.neighbors(v);
            for (int a : nv) {
              if (!alive[a]) continue;
              for (int b : g.neighbors(a)) {
                if (b <= a || !alive[b]) continue;
                if (std::binary_search(nv.begin(), nv.end(), b)) ++t;
              }
            }
            return static_cast<double>(t);
          }};
}

CoreAssignment p_core_decompose(const Graph& g, const PropertyFunction& p,
                                const std::vector<double>& levels) {
  if (!p.monotone)
    throw std::invalid_argument(
        "p-core requires a monotone property function: " + p.name);
  if (!std::is_sorted(levels.begin(), levels.end()))
    throw std::invalid_argument("levels must be ascending");

  const int n = g.vertex_count();
  CoreAssignment out{"pcore:" + p.name, std::vector<long long>(n, -1)};
  std::vector<char> alive(n, 1);
  int remaining = n;

  // Monotonicity makes the cores nested, so each level peels the
  // previous level's survivors rather than restarting from V.
  for (std::size_t i = 0; i < levels.size() && remaining > 0; ++i) {
    const double t = levels[i];
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        if (p.evaluate(v, g, alive) < t) {
          alive[v] = 0;
          --remaining;
          changed = true;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (alive[v]) out.core[v] = static_cast<long long>(i);
  }
  return out;
}

}  // namespace peel
