#include "peel/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace peel {

Graph Graph::from_edge_list(std::span<const LabelPair> pairs) {
  Graph g;
  std::unordered_map<Label, int> index;
  auto dense = [&](Label l) {
    auto [it, fresh] = index.emplace(l, static_cast<int>(g.labels_.size()));
    if (fresh) g.labels_.push_back(l);
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    int u = dense(a);
    int v = dense(b);
    if (u == v) continue;  // self-loop dropped, vertex kept
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  g.n_ = static_cast<int>(g.labels_.size());
  g.m_ = static_cast<long long>(edges.size());
  g.adj_.resize(g.n_);
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

long long sorted_intersection_size(const std::vector<int>& a,
                                   const std::vector<int>& b) {
  long long count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

long long Graph::triangles_through_vertex(int v) const {
  check_vertex(v);
  // Each triangle {v,a,b} is counted once at the incident edge (v,a) with
  // a < b in the intersection walk, so sum over edges and halve.
  long long twice = 0;
  for (int w : adj_[v]) twice += sorted_intersection_size(adj_[v], adj_[w]);
  return twice / 2;
}

long long Graph::triangles_through_edge(EdgeRef e) const {
  if (!has_edge(e.u, e.v))
    throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                std::to_string(e.v) + ") not in graph");
  return sorted_intersection_size(adj_[e.u], adj_[e.v]);
}

Graph Graph::induced_subgraph(std::span<const int> s) const {
  std::vector<int> reindex(n_, -1);
  Graph g;
  for (int v : s) {
    check_vertex(v);
    if (reindex[v] >= 0) continue;
    reindex[v] = static_cast<int>(g.labels_.size());
    g.labels_.push_back(labels_[v]);
  }
  g.n_ = static_cast<int>(g.labels_.size());
  g.adj_.resize(g.n_);
  for (int v = 0; v < n_; ++v) {
    if (reindex[v] < 0) continue;
    for (int w : adj_[v]) {
      if (reindex[w] < 0) continue;
      g.adj_[reindex[v]].push_back(reindex[w]);
    }
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    g.m_ += static_cast<long long>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

bool Graph::is_clique(std::span<const int> s) const {
  Graph sub = induced_subgraph(s);
  long long k = sub.vertex_count();
  return sub.edge_count() == k * (k - 1) / 2;
}

std::vector<LabelPair> Graph::to_edge_list() const {
  std::vector<LabelPair> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

namespace {

bool parse_int(std::string_view tok, Label& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

std::vector<LabelPair> parse_snap(std::istream& in) {
  std::vector<LabelPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;  // blank line
    if (line[start] == '#') continue;

    std::vector<std::string_view> toks;
    std::string_view sv(line);
    std::size_t pos = start;
    while (pos < sv.size()) {
      std::size_t end = sv.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = sv.size();
      if (end > pos) toks.push_back(sv.substr(pos, end - pos));
      pos = sv.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (toks.size() != 2)
      throw ParseError(lineno, "expected 2 tokens, got " +
                                   std::to_string(toks.size()));
    Label a, b;
    if (!parse_int(toks[0], a) || !parse_int(toks[1], b))
      throw ParseError(lineno, "non-integer vertex label");
    pairs.emplace_back(a, b);
  }
  return pairs;
}

std::vector<LabelPair> parse_snap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_snap(in);
}

void write_snap(std::ostream& out, const Graph& g) {
  out << "# " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges\n";
  for (const auto& [a, b] : g.to_edge_list()) out << a << '\t' << b << '\n';
}

}  // namespace peel
