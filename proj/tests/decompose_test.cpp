#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "peel/decompose.hpp"
#include "peel/generators.hpp"
#include "peel/oracle.hpp"
#include "test_util.hpp"

using namespace peel;
using peel::test::complete_graph;
using peel::test::cycle_graph;
using peel::test::k4_plus_pendant;
using peel::test::star4;

namespace {

std::map<std::pair<int, int>, long long> level_map(
    const EdgeLevelAssignment& e) {
  std::map<std::pair<int, int>, long long> m;
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    m[{e.edges[i].u, e.edges[i].v}] = e.level[i];
  return m;
}

}  // namespace

TEST_CASE("k-core on fixed graphs") {
  auto k5 = k_core_decompose(complete_graph(5));
  for (long long c : k5.core) CHECK(c == 4);
  auto c6 = k_core_decompose(cycle_graph(6));
  for (long long c : c6.core) CHECK(c == 2);
  auto star = k_core_decompose(star4());
  for (long long c : star.core) CHECK(c == 1);
}

TEST_CASE("triangle core on fixed graphs") {
  auto k5 = triangle_core_decompose(complete_graph(5));
  for (long long l : k5.edges.level) CHECK(l == 3);
  for (long long c : k5.vertices.core) CHECK(c == 3);

  auto c6 = triangle_core_decompose(cycle_graph(6));
  for (long long l : c6.edges.level) CHECK(l == 0);
  for (long long c : c6.vertices.core) CHECK(c == 0);

  // K4 on {0..3} plus pendant 4 attached to 0
  auto res = triangle_core_decompose(k4_plus_pendant());
  auto levels = level_map(res.edges);
  CHECK(levels.at({0, 4}) == 0);
  for (auto& [e, l] : levels)
    if (e != std::pair<int, int>{0, 4}) CHECK(l == 2);
  CHECK(res.vertices.core[4] == 0);
  CHECK(res.vertices.core[0] == 2);
  CHECK(res.vertices.core[1] == 2);
}

TEST_CASE("vertex triangle core on fixed graphs") {
  auto k5 = vertex_triangle_core_decompose(complete_graph(5));
  for (long long c : k5.core) CHECK(c == 6);
  auto c6 = vertex_triangle_core_decompose(cycle_graph(6));
  for (long long c : c6.core) CHECK(c == 0);
  auto k4 = vertex_triangle_core_decompose(complete_graph(4));
  for (long long c : k4.core) CHECK(c == 3);
}

TEST_CASE("truss_edges") {
  auto k5g = complete_graph(5);
  CHECK(truss_edges(k5g, 5).size() == 10);
  CHECK(truss_edges(k5g, 6).empty());
  CHECK(truss_edges(k5g, 2).size() == 10);  // every edge is in the 2-truss
  auto c6g = cycle_graph(6);
  CHECK(truss_edges(c6g, 2).size() == 6);
  CHECK_THROWS_AS(truss_edges(k5g, 1), std::domain_error);
}

TEST_CASE("p-core engine rejects non-monotone declarations") {
  PropertyFunction bad{"whatever", false,
                       [](int, const Graph&, const std::vector<char>&) {
                         return 0.0;
                       }};
  CHECK_THROWS_AS(
      p_core_decompose(complete_graph(3), bad, {0.0, 1.0}),
      std::invalid_argument);
}

TEST_CASE("p-core engine fixed examples") {
  auto k5g = complete_graph(5);
  auto viaP = p_core_decompose(k5g, degree_property(), {0, 1, 2, 3, 4});
  CHECK(viaP.core == k_core_decompose(k5g).core);

  auto c6 = p_core_decompose(cycle_graph(6), vertex_triangle_property(),
                             {0, 1, 2, 3});
  for (long long c : c6.core) CHECK(c == 0);

  auto k4 = p_core_decompose(complete_graph(4), vertex_triangle_property(),
                             {0, 1, 2, 3});
  for (long long c : k4.core) CHECK(c == 3);
}

TEST_CASE("p-core engine equals the dedicated peelers on all 6-vertex graphs") {
  std::vector<double> deg_levels, tri_levels;
  for (int t = 0; t <= 5; ++t) deg_levels.push_back(t);
  for (int t = 0; t <= 10; ++t) tri_levels.push_back(t);  // (n-1)(n-2)/2

  ExhaustiveStream stream(6);
  Graph g;
  while (stream.next(g)) {
    CHECK(p_core_decompose(g, degree_property(), deg_levels).core ==
          k_core_decompose(g).core);
    CHECK(p_core_decompose(g, vertex_triangle_property(), tri_levels).core ==
          vertex_triangle_core_decompose(g).core);
  }
}

TEST_CASE("declared-monotone property functions are monotone on random sets") {
  auto check = [](const PropertyFunction& p) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Graph g = random_gnp(10, 0.5, seed);
      std::mt19937_64 rng(seed * 977 + 1);
      std::vector<char> small(10), big(10);
      for (int v = 0; v < 10; ++v) {
        big[v] = rng() % 2 ? 1 : 0;
        small[v] = big[v] && (rng() % 2) ? 1 : 0;  // small subset of big
      }
      for (int v = 0; v < 10; ++v)
        if (small[v])
          CHECK(p.evaluate(v, g, small) <= p.evaluate(v, g, big));
    }
  };
  check(degree_property());
  check(vertex_triangle_property());
}

TEST_CASE("oracle equivalence on exhaustive n in {4,5}") {
  for (int n : {4, 5}) {
    ExhaustiveStream stream(n);
    Graph g;
    while (stream.next(g)) {
      CHECK(k_core_decompose(g).core ==
            oracle_core_numbers(g, Method::kcore).core);
      auto tri = triangle_core_decompose(g);
      CHECK(tri.vertices.core ==
            oracle_core_numbers(g, Method::tricore).core);
      CHECK(tri.edges.level == oracle_triangle_edge_levels(g).level);
      CHECK(vertex_triangle_core_decompose(g).core ==
            oracle_core_numbers(g, Method::vtricore).core);
    }
  }
}

TEST_CASE("oracle equivalence on random G(10, 1/2)") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_gnp(10, 0.5, seed);
    for (Method m : {Method::kcore, Method::tricore, Method::vtricore})
      CHECK(decompose(g, m).core == oracle_core_numbers(g, m).core);
  }
}

TEST_CASE("oracle handles the empty graph") {
  Graph g;
  for (Method m : {Method::kcore, Method::tricore, Method::vtricore})
    CHECK(oracle_core_numbers(g, m).core.empty());
}

TEST_CASE("oracle refuses above its cap") {
  Graph g = random_gnp(13, 0.5, 1);
  CHECK_THROWS_AS(oracle_core_numbers(g, Method::kcore),
                  std::invalid_argument);
}

TEST_CASE("core number bounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_gnp(12, 0.5, seed);
    long long n = g.vertex_count();
    auto kc = k_core_decompose(g);
    for (int v = 0; v < n; ++v) {
      CHECK(kc.core[v] <= g.degree(v));
      CHECK(kc.core[v] <= n - 1);
    }
    auto tri = triangle_core_decompose(g);
    for (long long c : tri.vertices.core) CHECK(c <= n - 2);
    for (std::size_t i = 0; i < tri.edges.edges.size(); ++i) {
      auto [u, v] = tri.edges.edges[i];
      CHECK(tri.edges.level[i] <= n - 2);
      CHECK(tri.edges.level[i] <=
            std::min(g.degree(u), g.degree(v)) - 1);
    }
    auto vt = vertex_triangle_core_decompose(g);
    for (long long c : vt.core) CHECK(c <= (n - 1) * (n - 2) / 2);
  }
}

TEST_CASE("nestedness of all three methods on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_gnp(12, 0.5, seed);
    // vertex sets {core >= k} descend as k rises; checked through the
    // per-k fixpoints rather than the trivially nested number sets
    auto tri = triangle_core_decompose(g);
    auto levels = level_map(tri.edges);
    long long top = 0;
    for (auto& [e, l] : levels) top = std::max(top, l);
    std::set<std::pair<int, int>> prev;
    for (auto& [e, l] : levels) prev.insert(e);
    for (long long k = 1; k <= top; ++k) {
      std::set<std::pair<int, int>> cur;
      for (auto& [e, l] : levels)
        if (l >= k) cur.insert(e);
      CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      prev = cur;
    }
  }
}

TEST_CASE("planted clique edges reach triangle-core level k-1") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Graph host = random_gnp(12, 0.3, rng());
    // plant a clique of degree k on vertices 0..k
    int k = 3 + static_cast<int>(rng() % 4);
    // self-loop pairs first so labels keep their dense indices
    std::vector<LabelPair> pairs;
    for (int v = 0; v < 12; ++v) pairs.emplace_back(v, v);
    for (const auto& e : host.to_edge_list()) pairs.push_back(e);
    for (int u = 0; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) pairs.emplace_back(u, v);
    Graph g = Graph::from_edge_list(pairs);
    auto levels = level_map(triangle_core_decompose(g).edges);
    for (int u = 0; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v)
        CHECK(levels.at({u, v}) >= k - 1);
  }
}
