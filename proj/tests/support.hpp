#pragma once

// Small independent oracles for the unit tests. Everything here is plain
// subset enumeration over 32-bit masks, so graphs stay below 20 vertices.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "monopos/graph.hpp"

namespace testsupport {

using monopos::Graph;
using monopos::GraphBuilder;
using monopos::Vertex;
using monopos::VertexSet;

using Mask = std::uint32_t;

inline std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

inline VertexSet to_set(int n, Mask m) {
  VertexSet s(n);
  for (; m; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

inline bool connected_mask(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return true;
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

/// Random connected graph: a random spanning tree plus G(n,p) edges.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    b.add_edge(v, pick(rng));
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// Largest mask passing pred; ties keep the numerically smallest.
inline Mask best_mask(int n, const std::function<bool(Mask)>& pred) {
  Mask best = 0;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) > std::popcount(best) && pred(m)) best = m;
  }
  return best;
}

inline int brute_clique(const Graph& g) {
  auto adj = masks_of(g);
  return std::popcount(best_mask(g.order(), [&](Mask m) {
    for (Mask r = m; r; r &= r - 1) {
      int x = std::countr_zero(r);
      if (((adj[static_cast<std::size_t>(x)] | (Mask{1} << x)) & m) != m) return false;
    }
    return true;
  }));
}

inline int brute_independent(const Graph& g) {
  auto adj = masks_of(g);
  return std::popcount(best_mask(g.order(), [&](Mask m) {
    for (Mask r = m; r; r &= r - 1) {
      if (adj[static_cast<std::size_t>(std::countr_zero(r))] & m) return false;
    }
    return true;
  }));
}

/// Each component of G[m] complete: every vertex's closed neighbourhood in m
/// equals its component.
inline int brute_alpha_omega(const Graph& g) {
  auto adj = masks_of(g);
  return std::popcount(best_mask(g.order(), [&](Mask m) {
    for (Mask r = m; r; r &= r - 1) {
      int x = std::countr_zero(r);
      Mask closed = (adj[static_cast<std::size_t>(x)] | (Mask{1} << x)) & m;
      for (Mask q = closed; q; q &= q - 1) {
        int y = std::countr_zero(q);
        if (((adj[static_cast<std::size_t>(y)] | (Mask{1} << y)) & m) != closed) return false;
      }
    }
    return true;
  }));
}

inline int brute_dissociation(const Graph& g) {
  auto adj = masks_of(g);
  return std::popcount(best_mask(g.order(), [&](Mask m) {
    for (Mask r = m; r; r &= r - 1) {
      if (std::popcount(adj[static_cast<std::size_t>(std::countr_zero(r))] & m) > 1) return false;
    }
    return true;
  }));
}

/// Maximum matching between left and right by trying every edge subset
/// (small instances only).
inline int brute_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) {
    if ((left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u))) es.emplace_back(u, v);
  }
  int best = 0;
  std::function<void(std::size_t, Mask, int)> rec = [&](std::size_t i, Mask used, int size) {
    best = std::max(best, size);
    if (i == es.size() || size + static_cast<int>(es.size() - i) <= best) return;
    auto [u, v] = es[i];
    if (!(used >> u & 1) && !(used >> v & 1)) rec(i + 1, used | (Mask{1} << u) | (Mask{1} << v), size + 1);
    rec(i + 1, used, size);
  };
  rec(0, 0, 0);
  return best;
}

/// BFS distances inside the subgraph induced by s.
inline std::vector<int> bfs_within(const std::vector<Mask>& adj, Mask s, int src) {
  std::vector<int> d(adj.size(), -1);
  d[static_cast<std::size_t>(src)] = 0;
  Mask frontier = Mask{1} << src;
  Mask seen = frontier;
  for (int k = 1; frontier; ++k) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))];
    next &= s & ~seen;
    for (Mask r = next; r; r &= r - 1) d[static_cast<std::size_t>(std::countr_zero(r))] = k;
    seen |= next;
    frontier = next;
  }
  return d;
}

/// Definitional check: every connected induced subgraph preserves distances.
inline bool brute_distance_hereditary(const Graph& g) {
  const int n = g.order();
  auto adj = masks_of(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)] = bfs_within(adj, full, v);
  for (Mask s = 1; s <= full; ++s) {
    if (!connected_mask(adj, s)) continue;
    for (Mask r = s; r; r &= r - 1) {
      int u = std::countr_zero(r);
      auto d = bfs_within(adj, s, u);
      for (Mask q = s; q; q &= q - 1) {
        int v = std::countr_zero(q);
        if (d[static_cast<std::size_t>(v)] != dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
      }
    }
  }
  return true;
}

/// Largest separated subgraph by enumerating C' and I' (spec of a split
/// graph given by its clique and independent side).
inline int brute_phi(const Graph& g, const VertexSet& c, const VertexSet& i) {
  auto adj = masks_of(g);
  Mask cm = 0, im = 0;
  c.for_each([&](Vertex v) { cm |= Mask{1} << v; });
  i.for_each([&](Vertex v) { im |= Mask{1} << v; });
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    if (s & ~(cm | im)) continue;
    Mask cp = s & cm, ip = s & im;
    bool no_edges = true;
    for (Mask r = ip; r; r &= r - 1) {
      if (adj[static_cast<std::size_t>(std::countr_zero(r))] & cp) no_edges = false;
    }
    bool clique_case = false;
    if (std::popcount(ip) == 1) {
      int x = std::countr_zero(ip);
      clique_case = (adj[static_cast<std::size_t>(x)] & cp) == cp;
    }
    if (no_edges || clique_case) best = std::max(best, std::popcount(s));
  }
  return best;
}

/// Induced-path vertex sets by checking every subset's induced degrees and
/// connectivity, then an exhaustive cover search.
inline int brute_path_partition(const Graph& g) {
  const int n = g.order();
  auto adj = masks_of(g);
  std::vector<char> is_path(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int edges2 = 0;
    bool ok = true;
    for (Mask r = s; r; r &= r - 1) {
      int d = std::popcount(adj[static_cast<std::size_t>(std::countr_zero(r))] & s);
      edges2 += d;
      if (d > 2) ok = false;
    }
    int k = std::popcount(s);
    is_path[s] = ok && connected_mask(adj, s) && edges2 == 2 * (k - 1);
  }
  std::vector<int> best(std::size_t{1} << n, 1 << 20);
  best[0] = 0;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    for (Mask sub = m; sub; sub = (sub - 1) & m) {
      if (is_path[sub]) best[m] = std::min(best[m], best[m ^ sub] + 1);
    }
  }
  return best[(std::size_t{1} << n) - 1];
}

/// Longest induced path (edges) by subset check.
inline int brute_longest_induced_path(const Graph& g) {
  const int n = g.order();
  auto adj = masks_of(g);
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int edges2 = 0;
    bool ok = true;
    for (Mask r = s; r; r &= r - 1) {
      int d = std::popcount(adj[static_cast<std::size_t>(std::countr_zero(r))] & s);
      edges2 += d;
      if (d > 2) ok = false;
    }
    int k = std::popcount(s);
    if (ok && connected_mask(adj, s) && edges2 == 2 * (k - 1)) best = std::max(best, k - 1);
  }
  return best;
}

}  // namespace testsupport
