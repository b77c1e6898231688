#include "peel/generators.hpp"

#include <random>
#include <stdexcept>

namespace peel {

std::uint64_t exhaustive_population(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<LabelPair> pairs;
  // every vertex present even when isolated
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, v);
  int slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++slot)
      if (mask >> slot & 1) pairs.emplace_back(u, v);
  return Graph::from_edge_list(pairs);
}

ExhaustiveStream::ExhaustiveStream(int n, int cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("exhaustive stream needs n >= 1");
  if (cap > kExhaustiveHardCap) cap = kExhaustiveHardCap;
  if (n > cap)
    throw std::invalid_argument(
        "exhaustive stream refused: n = " + std::to_string(n) + " means " +
        std::to_string(exhaustive_population(n)) +
        " graphs, above the cap of n = " + std::to_string(cap));
  total_ = exhaustive_population(n);
}

bool ExhaustiveStream::next(Graph& out) {
  if (id_ >= total_) return false;
  out = graph_from_mask(n_, id_);
  ++id_;
  return true;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  if (p < 0.0 || p > 1.0)
    throw std::domain_error("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<LabelPair> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // top 53 bits to a uniform double in [0, 1)
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(pairs);
}

void sample_stream(
    const SampleSpec& spec,
    const std::function<void(std::uint64_t, const Graph&)>& sink) {
  switch (spec.kind) {
    case SampleSpec::Kind::exhaustive: {
      ExhaustiveStream stream(spec.n, kExhaustiveHardCap);
      Graph g;
      while (stream.next(g)) sink(stream.graph_id(), g);
      return;
    }
    case SampleSpec::Kind::random: {
      if (spec.count < 1)
        throw std::invalid_argument("random sample count must be >= 1");
      for (long long i = 0; i < spec.count; ++i)
        sink(static_cast<std::uint64_t>(i),
             random_gnp(spec.n, spec.p,
                        spec.seed + static_cast<std::uint64_t>(i)));
      return;
    }
    case SampleSpec::Kind::file: {
      sink(0, Graph::from_edge_list(parse_snap_file(spec.path)));
      return;
    }
  }
}

}  // namespace peel
