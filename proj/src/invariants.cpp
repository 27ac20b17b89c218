#include "monopos/invariants.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "monopos/errors.hpp"

namespace monopos {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(idx(n_) * idx(n_), kUnreachable) {
  std::vector<Vertex> queue(idx(n_));
  for (Vertex s = 0; s < n_; ++s) {
    int* row = &d_[idx(s) * idx(n_)];
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      g.neighbors(u).for_each([&](Vertex w) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      });
    }
  }
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : d_) best = std::max(best, d);
  return best;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    comp.insert(unseen.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

namespace {

// Tarjan low-point DFS producing both articulation points and blocks.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(idx(graph.order()), -1), low(idx(graph.order()), 0), cuts(graph.order()) {}

  void visit(Vertex u, Vertex parent) {
    disc[idx(u)] = low[idx(u)] = timer++;
    int children = 0;
    g.neighbors(u).for_each([&](Vertex w) {
      if (disc[idx(w)] == -1) {
        ++children;
        stack.emplace_back(u, w);
        visit(w, u);
        low[idx(u)] = std::min(low[idx(u)], low[idx(w)]);
        if (low[idx(w)] >= disc[idx(u)]) {
          if (parent != -1) cuts.insert(u);
          VertexSet block(g.order());
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{u, w}) break;
          }
          blocks.push_back(block);
        }
      } else if (w != parent && disc[idx(w)] < disc[idx(u)]) {
        stack.emplace_back(u, w);
        low[idx(u)] = std::min(low[idx(u)], disc[idx(w)]);
      }
    });
    if (parent == -1 && children > 1) cuts.insert(u);
  }

  void run() {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (disc[idx(v)] != -1) continue;
      if (g.degree(v) == 0) {
        VertexSet single(g.order());
        single.insert(v);
        blocks.push_back(single);
        disc[idx(v)] = timer++;
        continue;
      }
      visit(v, -1);
    }
  }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  BlockFinder f(g);
  f.run();
  return f.cuts;
}

std::vector<VertexSet> blocks(const Graph& g) {
  BlockFinder f(g);
  f.run();
  std::sort(f.blocks.begin(), f.blocks.end());
  return f.blocks;
}

bool is_block_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& b : blocks(g)) {
    if (!is_clique(g, b)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !(s - g.closed_neighbors(v)).empty()) ok = false;
  });
  return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_union_of_cliques(const Graph& g, const VertexSet& s) {
  // Every vertex's closed neighbourhood inside s must be its whole component,
  // i.e. adjacency inside s is transitive.
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    const VertexSet mine = g.closed_neighbors(v) & s;
    (g.neighbors(v) & s).for_each([&](Vertex w) {
      if (ok && (g.closed_neighbors(w) & s) != mine) ok = false;
    });
  });
  return ok;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.insert(v);
  }
  return out;
}

VertexSet leaves(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) return false;
  }
  return true;
}

BipartitionResult bipartition(const Graph& g) {
  require_connected(g, "bipartition");
  const int n = g.order();
  std::vector<int> colour(idx(n), -1);
  std::vector<Vertex> parent(idx(n), -1);
  std::vector<int> depth(idx(n), 0);
  std::deque<Vertex> queue;
  BipartitionResult result;
  if (n == 0) {
    result.parts = Bipartition{VertexSet(0), VertexSet(0)};
    return result;
  }
  colour[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    std::optional<Vertex> clash;
    g.neighbors(u).for_each([&](Vertex w) {
      if (colour[idx(w)] == -1) {
        colour[idx(w)] = 1 - colour[idx(u)];
        parent[idx(w)] = u;
        depth[idx(w)] = depth[idx(u)] + 1;
        queue.push_back(w);
      } else if (colour[idx(w)] == colour[idx(u)] && !clash) {
        clash = w;
      }
    });
    if (clash) {
      // Climb both BFS-tree branches to the common ancestor; equal colours
      // make the closed walk odd.
      std::vector<Vertex> left{u};
      std::vector<Vertex> right{*clash};
      Vertex a = u;
      Vertex b = *clash;
      while (a != b) {
        if (depth[idx(a)] >= depth[idx(b)]) {
          a = parent[idx(a)];
          left.push_back(a);
        } else {
          b = parent[idx(b)];
          right.push_back(b);
        }
      }
      right.pop_back();
      result.odd_cycle = left;
      result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
      return result;
    }
  }
  Bipartition bp{VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) (colour[idx(v)] == 0 ? bp.side_a : bp.side_b).insert(v);
  result.parts = bp;
  return result;
}

CountWitness psi_uniform(const Graph& g, const Bipartition& bp) {
  auto best_class = [&](const VertexSet& side) {
    std::map<VertexSet, VertexSet> classes;
    side.for_each([&](Vertex v) {
      auto [it, inserted] = classes.try_emplace(g.neighbors(v), VertexSet(g.order()));
      it->second.insert(v);
    });
    VertexSet best(g.order());
    for (const auto& [nbhd, cls] : classes) {
      if (cls.size() > best.size() || (cls.size() == best.size() && cls < best)) best = cls;
    }
    return best;
  };
  const VertexSet a = best_class(bp.side_a);
  const VertexSet b = best_class(bp.side_b);
  return {a.size() + b.size(), a | b};
}

Matching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
  if (left.intersects(right)) throw DomainError("matching sides must be disjoint");
  const int n = g.order();
  constexpr int kFree = -1;
  const auto lv = left.to_vector();
  std::vector<Vertex> mate(idx(n), kFree);
  std::vector<int> layer(idx(n), 0);
  constexpr int kInf = std::numeric_limits<int>::max();

  auto bfs = [&]() {
    std::deque<Vertex> queue;
    bool found = false;
    for (Vertex u : lv) {
      if (mate[idx(u)] == kFree) {
        layer[idx(u)] = 0;
        queue.push_back(u);
      } else {
        layer[idx(u)] = kInf;
      }
    }
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      (g.neighbors(u) & right).for_each([&](Vertex w) {
        Vertex m = mate[idx(w)];
        if (m == kFree) {
          found = true;
        } else if (layer[idx(m)] == kInf) {
          layer[idx(m)] = layer[idx(u)] + 1;
          queue.push_back(m);
        }
      });
    }
    return found;
  };

  std::function<bool(Vertex)> dfs = [&](Vertex u) -> bool {
    bool done = false;
    (g.neighbors(u) & right).for_each([&](Vertex w) {
      if (done) return;
      Vertex m = mate[idx(w)];
      if (m == kFree || (layer[idx(m)] == layer[idx(u)] + 1 && dfs(m))) {
        mate[idx(u)] = w;
        mate[idx(w)] = u;
        done = true;
      }
    });
    if (!done) layer[idx(u)] = kInf;
    return done;
  };

  while (bfs()) {
    for (Vertex u : lv) {
      if (mate[idx(u)] == kFree) dfs(u);
    }
  }
  Matching m;
  for (Vertex u : lv) {
    if (mate[idx(u)] != kFree) m.pairs.emplace_back(u, mate[idx(u)]);
  }
  return m;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(idx(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.degree(order[idx(i - 1)]) >= i - 1) m = i;
  }
  long head = 0;
  long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[idx(i)]);
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

  SplitPartition sp{VertexSet(n), VertexSet(n), std::nullopt};
  for (int i = 0; i < n; ++i) (i < m ? sp.clique : sp.independent).insert(order[idx(i)]);
  if (!is_clique(g, sp.clique) || !is_independent(g, sp.independent)) {
    throw InternalError("degree-sequence split partition failed validation");
  }
  // Grow C to a maximum clique: at most one vertex of I can be complete to C.
  sp.independent.for_each([&](Vertex v) {
    if (sp.clique.subset_of(g.neighbors(v))) {
      sp.clique.insert(v);
      sp.independent.erase(v);
    }
  });
  // A vertex of C with no neighbour in I is divided; it moves to I.
  sp.clique.for_each([&](Vertex v) {
    if (!sp.divided && !g.neighbors(v).intersects(sp.independent)) sp.divided = v;
  });
  if (sp.divided) {
    sp.clique.erase(*sp.divided);
    sp.independent.insert(*sp.divided);
  }
  return sp;
}

PhiResult phi_separated(const Graph& g, const SplitPartition& sp) {
  const auto& c = sp.clique;
  const auto& i = sp.independent;
  PhiResult r;
  const Matching matching = max_bipartite_matching(g, i, c);
  r.matching_size = matching.size();
  r.deficiency_branch = c.size() + i.size() - r.matching_size;

  // Hall violator: I-vertices reachable by alternating paths from unmatched
  // I-vertices, together with the C-vertices outside their neighbourhood.
  std::vector<Vertex> mate(idx(g.order()), -1);
  for (auto [u, w] : matching.pairs) {
    mate[idx(u)] = w;
    mate[idx(w)] = u;
  }
  VertexSet reach_i(g.order());
  VertexSet reach_c(g.order());
  std::deque<Vertex> queue;
  i.for_each([&](Vertex v) {
    if (mate[idx(v)] == -1) {
      reach_i.insert(v);
      queue.push_back(v);
    }
  });
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    ((g.neighbors(u) & c) - reach_c).for_each([&](Vertex w) {
      reach_c.insert(w);
      Vertex m = mate[idx(w)];
      if (m != -1 && !reach_i.contains(m)) {
        reach_i.insert(m);
        queue.push_back(m);
      }
    });
  }
  VertexSet deficiency_witness = reach_i | (c - reach_c);
  if (deficiency_witness.size() != r.deficiency_branch) {
    throw InternalError("Hall violator does not match the matching deficiency");
  }
  if (i.size() > r.deficiency_branch) throw InternalError("phi: |I| exceeds the deficiency branch");

  std::optional<VertexSet> clique_witness;
  i.for_each([&](Vertex v) {
    VertexSet w = g.neighbors(v) & c;
    w.insert(v);
    if (!clique_witness || w.size() > clique_witness->size() ||
        (w.size() == clique_witness->size() && w < *clique_witness)) {
      clique_witness = w;
    }
  });
  r.clique_branch = clique_witness ? clique_witness->size() : 0;

  r.value = r.deficiency_branch;
  r.witness = deficiency_witness;
  if (clique_witness &&
      (r.clique_branch > r.value || (r.clique_branch == r.value && *clique_witness < r.witness))) {
    r.value = r.clique_branch;
    r.witness = *clique_witness;
  }
  return r;
}

bool is_distance_hereditary(const Graph& g) {
  require_connected(g, "is_distance_hereditary");
  VertexSet alive = g.vertices();
  auto nbhd = [&](Vertex v) { return g.neighbors(v) & alive; };
  while (alive.size() > 1) {
    std::optional<Vertex> victim;
    alive.for_each([&](Vertex v) {
      if (victim) return;
      const VertexSet nv = nbhd(v);
      if (nv.size() == 1) {
        victim = v;
        return;
      }
      alive.for_each([&](Vertex w) {
        if (victim || w <= v) return;
        VertexSet a = nv;
        VertexSet b = nbhd(w);
        a.erase(w);
        b.erase(v);
        if (a == b) victim = v;
      });
    });
    if (!victim) return false;
    alive.erase(*victim);
  }
  return true;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(idx(n));
  std::vector<Vertex> parent(idx(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{s};
    dist[idx(s)] = 0;
    parent[idx(s)] = -1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](Vertex w) {
        if (dist[idx(w)] == -1) {
          dist[idx(w)] = dist[idx(u)] + 1;
          parent[idx(w)] = u;
          queue.push_back(w);
        } else if (parent[idx(u)] != w) {
          int len = dist[idx(u)] + dist[idx(w)] + 1;
          if (best == 0 || len < best) best = len;
        }
      });
    }
  }
  return best;
}

}  // namespace monopos
