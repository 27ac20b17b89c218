#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monopos/bitset.hpp"

namespace monopos {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on vertices 0..n-1 with
/// adjacency stored as one bitset per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(int n);

  /// Throws DomainError on loops or out-of-range endpoints; duplicate edges
  /// are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(Vertex v) const {
    auto s = neighbors(v);
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by s, relabelled to 0..|s|-1 in ascending order.
  Graph induced(const VertexSet& s) const;

  /// Adjacency rows as W-word bitsets (requires order <= 64 * W).
  template <std::size_t W>
  std::vector<Bits<W>> adjacency_bits() const {
    std::vector<Bits<W>> rows;
    rows.reserve(adj_.size());
    for (const auto& r : adj_) rows.push_back(r.bits<W>());
    return rows;
  }

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::optional<std::vector<std::string>> labels_;

  friend class GraphBuilder;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(Vertex u, Vertex v);
  int order() const { return n_; }
  Graph build() const;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

// -- standard graphs ---------------------------------------------------------

Graph path_graph(int order);
Graph cycle_graph(int order);
Graph complete_graph(int order);
Graph empty_graph(int order);
/// K_{1,k}; the centre is vertex 0.
Graph star_graph(int leaves);
/// Parts are laid out consecutively in the given order.
Graph complete_multipartite(std::span<const int> parts);
Graph complete_bipartite(int a, int b);
/// Q_k with vertex ids read as k-bit words.
Graph hypercube(int k);
/// rows x cols vertex grid, row-major ids.
Graph grid_graph(int rows, int cols);
/// Cubic Hamiltonian graph from LCF notation: cycle 0..n-1 plus chords
/// i ~ i + shifts[i mod |shifts|], the pattern repeated to length n.
Graph lcf_graph(int order, std::span<const int> shifts);

// -- constructions -----------------------------------------------------------

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// g's vertices first, then h's offset by g.order().
Graph join(const Graph& g, const Graph& h);
/// g's vertices first, then copy i of h at g.order() + i * h.order().
/// Throws DomainError when g is disconnected.
Graph corona(const Graph& g, const Graph& h);
/// Vertex (a, b) has id a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Appends vertex g.order() adjacent only to v.
Graph add_pendant(const Graph& g, Vertex v);

}  // namespace monopos
