#include "monopos/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"

namespace monopos {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Bit position of pair (i, j), i < j, in the upper-triangle word.
int pair_bit(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kExhaustiveCap) throw CapExceeded("canonical_code: order above " + std::to_string(kExhaustiveCap));
  // Invariant: degree, then the sorted degrees of the neighbours.
  std::vector<std::vector<int>> key(idx(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& k = key[idx(v)];
    k.push_back(g.degree(v));
    std::vector<int> nd;
    g.neighbors(v).for_each([&](Vertex w) { nd.push_back(g.degree(w)); });
    std::sort(nd.begin(), nd.end());
    k.insert(k.end(), nd.begin(), nd.end());
  }
  std::vector<int> order(idx(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[idx(a)] < key[idx(b)]; });
  // Class boundaries; permute within each class.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[idx(order[idx(j)])] == key[idx(order[idx(i)])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto evaluate = [&] {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(order[idx(i)], order[idx(j)])) code |= std::uint64_t{1} << pair_bit(n, i, j);
      }
    }
    best = std::min(best, code);
  };
  auto recurse = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  recurse(recurse, 0);
  return n == 0 ? 0 : best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (code >> pair_bit(n, i, j) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  if (n < 1 || n > kExhaustiveCap) throw CapExceeded("all_graphs: order must lie in 1.." + std::to_string(kExhaustiveCap));
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : level) {
      auto es = g.edges();
      for (std::uint32_t s = 0; s < (1u << (m - 1)); ++s) {
        auto with = es;
        for (int v = 0; v < m - 1; ++v) {
          if (s >> v & 1) with.emplace_back(v, m - 1);
        }
        codes.insert(canonical_code(Graph::from_edges(m, with)));
      }
    }
    level.clear();
    for (auto c : codes) level.push_back(graph_from_code(m, c));
  }
  if (connected_only) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

Graph random_connected_graph(int n, int percent, Rng& rng) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(percent), 100)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph random_distance_hereditary(int n, Rng& rng) {
  if (n < 1) throw DomainError("random_distance_hereditary requires n >= 1");
  std::vector<VertexSet> nbr;
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    const int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    const int op = v == 1 ? 0 : static_cast<int>(rng.below(3));
    if (op == 0) {
      es.emplace_back(at, v);
    } else {
      // Twin of at: copy its neighbours, plus the edge to at for a true twin.
      for (auto [a, b] : std::vector<Edge>(es)) {
        if (a == at) es.emplace_back(b, v);
        if (b == at) es.emplace_back(a, v);
      }
      if (op == 1) es.emplace_back(at, v);
    }
  }
  return Graph::from_edges(n, es);
}

Graph random_cubic_graph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw DomainError("random_cubic_graph requires an even n >= 4");
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), 3, v);
    rng.shuffle(points);
    std::set<Edge> es;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int a = points[i], b = points[i + 1];
      if (a > b) std::swap(a, b);
      ok = a != b && es.insert({a, b}).second;
    }
    if (!ok) continue;
    Graph g = Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
    if (is_connected(g)) return g;
  }
}

Graph random_triangle_free(int n, int extra_edges, Rng& rng) {
  std::vector<VertexSet> adj(idx(n), VertexSet(n));
  std::vector<Edge> es;
  auto add = [&](int u, int v) {
    adj[idx(u)].insert(v);
    adj[idx(v)].insert(u);
    es.emplace_back(u, v);
  };
  for (int v = 1; v < n; ++v) add(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  for (int t = 0; t < extra_edges; ++t) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || adj[idx(u)].contains(v) || adj[idx(u)].intersects(adj[idx(v)])) continue;
    add(u, v);
  }
  return Graph::from_edges(n, es);
}

}  // namespace monopos
