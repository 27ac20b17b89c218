#include "monopos/graph.hpp"

#include "monopos/errors.hpp"

namespace monopos {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapExceeded("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  seen.insert(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.size() == g.order();
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int k = 0;
  s.for_each([&](Vertex v) { index[static_cast<std::size_t>(v)] = k++; });
  GraphBuilder b(k);
  s.for_each([&](Vertex u) {
    (neighbors(u) & s).for_each([&](Vertex v) {
      if (u < v) b.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    });
  });
  return b.build();
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("label count does not match graph order");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for order " +
                      std::to_string(n_));
  }
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  std::size_t deg_sum = 0;
  for (const auto& row : adj_) deg_sum += static_cast<std::size_t>(row.size());
  g.m_ = deg_sum / 2;
  return g;
}

Graph path_graph(int order) {
  GraphBuilder b(order);
  for (int i = 0; i + 1 < order; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int order) {
  if (order < 3) throw DomainError("cycle needs at least 3 vertices");
  GraphBuilder b(order);
  for (int i = 0; i < order; ++i) b.add_edge(i, (i + 1) % order);
  return b.build();
}

Graph complete_graph(int order) {
  GraphBuilder b(order);
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) b.add_edge(i, j);
  }
  return b.build();
}

Graph empty_graph(int order) { return Graph(order); }

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw DomainError("multipartite part sizes must be >= 1");
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph hypercube(int k) {
  if (k < 0 || k > 9) throw DomainError("hypercube dimension must be in 0..9");
  const int n = 1 << k;
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < k; ++bit) {
      int u = v ^ (1 << bit);
      if (v < u) b.add_edge(v, u);
    }
  }
  return b.build();
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid dimensions must be >= 1");
  return cartesian_product(path_graph(rows), path_graph(cols));
}

Graph lcf_graph(int order, std::span<const int> shifts) {
  if (shifts.empty() || order % static_cast<int>(shifts.size()) != 0) {
    throw DomainError("LCF pattern length must divide the order");
  }
  GraphBuilder b(order);
  for (int i = 0; i < order; ++i) {
    b.add_edge(i, (i + 1) % order);
    int s = shifts[static_cast<std::size_t>(i) % shifts.size()];
    b.add_edge(i, ((i + s) % order + order) % order);
  }
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  return b.build();
}

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + g.order());
  }
  return b.build();
}

Graph corona(const Graph& g, const Graph& h) {
  if (!connected(g)) throw DomainError("corona product requires a connected first factor");
  const int n = g.order();
  const int k = h.order();
  GraphBuilder b(n * (1 + k));
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < n; ++i) {
    const int base = n + i * k;
    for (auto [u, v] : h_edges) b.add_edge(base + u, base + v);
    for (Vertex x = 0; x < k; ++x) b.add_edge(i, base + x);
  }
  return b.build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int k = h.order();
  GraphBuilder b(g.order() * k);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (auto [x, y] : h.edges()) b.add_edge(a * k + x, a * k + y);
  }
  for (auto [a, c] : g.edges()) {
    for (Vertex x = 0; x < k; ++x) b.add_edge(a * k + x, c * k + x);
  }
  return b.build();
}

Graph add_pendant(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw DomainError("pendant attachment vertex out of range");
  GraphBuilder b(g.order() + 1);
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  b.add_edge(v, g.order());
  return b.build();
}

}  // namespace monopos
