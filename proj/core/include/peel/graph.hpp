#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace peel {

// Thrown by parse_snap with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using Label = std::int64_t;
using LabelPair = std::pair<Label, Label>;

struct EdgeRef {
  int u;  // u < v, dense indices
  int v;
};

// Immutable simple undirected graph. Vertices are dense indices 0..n-1,
// adjacency lists strictly ascending. Original labels kept for output.
class Graph {
 public:
  Graph() = default;

  // Normalizes raw pairs: drops self-loops, collapses duplicates and
  // both orientations. Labels get dense indices in first-appearance order.
  static Graph from_edge_list(std::span<const LabelPair> pairs);
  static Graph from_edge_list(const std::vector<LabelPair>& pairs) {
    return from_edge_list(std::span<const LabelPair>(pairs));
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  Label label(int v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }

  // Edges as (u, v) with u < v, lexicographic order.
  std::vector<EdgeRef> edges() const;

  long long triangles_through_vertex(int v) const;
  long long triangles_through_edge(EdgeRef e) const;

  Graph induced_subgraph(std::span<const int> s) const;
  bool is_clique(std::span<const int> s) const;

  // Normalized edge list using original labels; round-trips through
  // from_edge_list to an identical graph.
  std::vector<LabelPair> to_edge_list() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Label> labels_;

  void check_vertex(int v) const;
};

// SNAP edge-list text: '#' comment lines, data lines "u<ws>v" with
// integer labels. Returns pairs verbatim, normalization is deferred.
std::vector<LabelPair> parse_snap(std::istream& in);
std::vector<LabelPair> parse_snap_file(const std::string& path);

void write_snap(std::ostream& out, const Graph& g);

// Sorted-list intersection size, the triangle primitive everywhere.
long long sorted_intersection_size(const std::vector<int>& a,
                                   const std::vector<int>& b);

}  // namespace peel
