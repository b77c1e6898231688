#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "peel/graph.hpp"

namespace peel {

inline constexpr int kExhaustiveDefaultCap = 6;
inline constexpr int kExhaustiveHardCap = 7;

struct SampleSpec {
  enum class Kind { exhaustive, random, file };
  Kind kind = Kind::exhaustive;
  int n = 0;
  double p = 0.5;
  long long count = 1;
  std::uint64_t seed = 0;
  std::string path;

  static SampleSpec exhaustive(int n) {
    return {Kind::exhaustive, n, 0.0, 0, 0, {}};
  }
  static SampleSpec random(int n, double p, long long count,
                           std::uint64_t seed) {
    return {Kind::random, n, p, count, seed, {}};
  }
  static SampleSpec file(std::string path) {
    return {Kind::file, 0, 0.0, 1, 0, std::move(path)};
  }
};

// Number of labeled graphs on n vertices: 2^C(n,2).
std::uint64_t exhaustive_population(int n);

// Streams every labeled graph on n vertices exactly once. Graph id i is
// the C(n,2)-bit edge mask over slots (0,1),(0,2),...,(n-2,n-1).
class ExhaustiveStream {
 public:
  explicit ExhaustiveStream(int n, int cap = kExhaustiveDefaultCap);

  // Returns false when exhausted. graph_id() refers to the last yield.
  bool next(Graph& out);
  std::uint64_t graph_id() const { return id_ - 1; }

 private:
  int n_;
  std::uint64_t id_ = 0;
  std::uint64_t total_;
};

// Graph with mask `id` in the fixed edge-slot order; shared by the
// exhaustive stream and tests.
Graph graph_from_mask(int n, std::uint64_t mask);

// G(n,p) driven by a seeded mt19937_64, one draw per edge slot in the
// fixed slot order. Identical (n,p,seed) gives an identical graph.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Uniform stream over a SampleSpec: exhaustive order, derived seeds
// seed+index for random, single graph for file.
void sample_stream(const SampleSpec& spec,
                   const std::function<void(std::uint64_t id, const Graph&)>&
                       sink);

}  // namespace peel
