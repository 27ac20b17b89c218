#include "monopos/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "monopos/errors.hpp"

namespace monopos::oracle {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw CapExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
}

std::size_t at(int n, Vertex u, Vertex v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
}

IntervalTable seeded(int n) {
  IntervalTable t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), VertexSet(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) t[at(n, u, v)] = VertexSet(n, {u, v});
    }
  }
  return t;
}

}  // namespace

IntervalTable intervals_by_induced_subsets(const Graph& g) {
  check_cap(g, kSubsetIntervalCap, "induced subset oracle");
  const int n = g.order();
  auto t = seeded(n);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3) continue;
    int edges2 = 0;
    int ends[2] = {-1, -1};
    int n_ends = 0;
    bool ok = true;
    for (std::uint32_t r = s; r && ok; r &= r - 1) {
      const int x = std::countr_zero(r);
      const int d = std::popcount(adj[static_cast<std::size_t>(x)] & s);
      edges2 += d;
      if (d == 0 || d > 2) ok = false;
      if (d == 1) {
        if (n_ends == 2) ok = false;
        else ends[n_ends++] = x;
      }
    }
    if (!ok || n_ends != 2 || edges2 != 2 * (k - 1)) continue;
    // Degrees alone allow a path plus disjoint cycles.
    std::uint32_t seen = 1U << ends[0];
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != s) continue;
    VertexSet members(n);
    for (std::uint32_t r = s; r; r &= r - 1) members.insert(std::countr_zero(r));
    t[at(n, ends[0], ends[1])] |= members;
    t[at(n, ends[1], ends[0])] |= members;
  }
  return t;
}

IntervalTable intervals_by_simple_paths(const Graph& g) {
  check_cap(g, kSimplePathCap, "simple path oracle");
  const int n = g.order();
  auto t = seeded(n);
  std::vector<Vertex> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto chordless = [&] {
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i + 2; j < path.size(); ++j) {
        if (g.adjacent(path[i], path[j])) return false;
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> void {
    const Vertex x = path.back();
    if (path.size() >= 3 && chordless()) {
      VertexSet members = VertexSet::from_range(n, path);
      t[at(n, path.front(), x)] |= members;
    }
    g.neighbors(x).for_each([&](Vertex y) {
      if (used[static_cast<std::size_t>(y)]) return;
      used[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      self(self);
      path.pop_back();
      used[static_cast<std::size_t>(y)] = 0;
    });
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    used.assign(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(s)] = 1;
    dfs(dfs);
  }
  return t;
}

std::vector<int> floyd_warshall(const Graph& g) {
  const int n = g.order();
  constexpr int kInf = 1 << 28;
  std::vector<int> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf);
  for (Vertex u = 0; u < n; ++u) d[at(n, u, u)] = 0;
  for (auto [u, v] : g.edges()) d[at(n, u, v)] = d[at(n, v, u)] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[at(n, i, j)] = std::min(d[at(n, i, j)], d[at(n, i, k)] + d[at(n, k, j)]);
      }
    }
  }
  for (auto& x : d) {
    if (x >= kInf) x = -1;
  }
  return d;
}

IntervalTable geodesic_intervals(const Graph& g) {
  const int n = g.order();
  const auto d = floyd_warshall(g);
  auto t = seeded(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || d[at(n, u, v)] < 0) continue;
      for (Vertex y = 0; y < n; ++y) {
        if (d[at(n, u, y)] >= 0 && d[at(n, y, v)] >= 0 && d[at(n, u, y)] + d[at(n, y, v)] == d[at(n, u, v)]) {
          t[at(n, u, v)].insert(y);
        }
      }
    }
  }
  return t;
}

}  // namespace monopos::oracle
