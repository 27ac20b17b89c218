#include "monopos/mono_paths.hpp"

#include <algorithm>
#include <string>

#include "monopos/errors.hpp"

namespace monopos {

namespace {

struct BudgetExhausted {};

template <std::size_t W>
Bits<W> reach_within(const std::vector<Bits<W>>& adj, Bits<W> frontier, const Bits<W>& allowed) {
  frontier &= allowed;
  Bits<W> seen = frontier;
  while (frontier.any()) {
    Bits<W> next;
    frontier.for_each([&](int x) { next |= adj[static_cast<std::size_t>(x)]; });
    next &= allowed;
    next.remove(seen);
    seen |= next;
    frontier = next;
  }
  return seen;
}

// State at depth k: path p_0..p_k, blocked = union of N[p_i] for i < k. A
// next vertex must avoid blocked; every later one must also avoid N[p_k].
template <std::size_t W>
class PathSearch {
 public:
  PathSearch(const Graph& g, const InducedPathQuery& q, const PathCallback& cb)
      : adj_(g.adjacency_bits<W>()), univ_(Bits<W>::prefix(g.order())), q_(q), cb_(cb) {}

  InducedPathResult run(int n) {
    InducedPathResult out;
    out.vertices = VertexSet(n);
    path_.push_back(q_.u);
    on_path_.set(q_.u);
    try {
      dfs(Bits<W>{});
    } catch (const BudgetExhausted&) {
      out.truncated = true;
    }
    out.count = count_;
    out.vertices = VertexSet::from_bits(n, acc_);
    out.hit = hit_;
    out.expansions = expansions_;
    return out;
  }

 private:
  // Returns true when the search should stop.
  bool dfs(const Bits<W>& blocked) {
    if (++expansions_ > q_.budget) throw BudgetExhausted{};
    const int pk = path_.back();
    const auto& nk = adj_[static_cast<std::size_t>(pk)];
    Bits<W> next_blocked = blocked | nk;
    next_blocked.set(pk);
    const Bits<W> allowed = minus(univ_, next_blocked);
    const Bits<W> cand = minus(nk, blocked);
    const int v = q_.v;
    bool stop = false;
    cand.for_each([&](int w) {
      if (stop) return;
      if (w == v) {
        stop = complete();
        return;
      }
      if (next_blocked.test(v)) return;
      const Bits<W> r = reach_within(adj_, adj_[static_cast<std::size_t>(w)], allowed);
      if (!r.test(v)) return;
      Bits<W> span = on_path_ | r;
      span.set(w);
      if (q_.mode == PathQueryMode::collect_all && span.subset_of(acc_)) return;
      if (q_.mode == PathQueryMode::early_exit && !span.test(q_.target)) return;
      path_.push_back(w);
      on_path_.set(w);
      stop = dfs(next_blocked);
      on_path_.reset(w);
      path_.pop_back();
    });
    return stop;
  }

  bool complete() {
    ++count_;
    path_.push_back(q_.v);
    acc_ |= on_path_;
    acc_.set(q_.v);
    if (cb_) cb_(path_);
    path_.pop_back();
    if (q_.mode == PathQueryMode::early_exit && acc_.test(q_.target)) {
      hit_ = true;
      return true;
    }
    return false;
  }

  std::vector<Bits<W>> adj_;
  Bits<W> univ_;
  const InducedPathQuery& q_;
  const PathCallback& cb_;
  std::vector<Vertex> path_;
  Bits<W> on_path_;
  Bits<W> acc_;
  std::uint64_t count_ = 0;
  std::uint64_t expansions_ = 0;
  bool hit_ = false;
};

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
  }
}

VertexSet interval_or_throw(const Graph& g, Vertex u, Vertex v, std::uint64_t budget) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw DomainError("monophonic interval needs distinct endpoints");
  InducedPathQuery q{u, v, PathQueryMode::collect_all, -1, budget};
  auto r = enumerate_induced_paths(g, q);
  if (r.truncated) {
    throw LimitExceeded("induced path search for pair (" + std::to_string(u) + "," + std::to_string(v) +
                        ") exceeded its budget of " + std::to_string(budget) + " expansions");
  }
  if (r.count == 0) return VertexSet(g.order(), {u, v});
  return r.vertices;
}

template <class Lookup>
VertexSet closure_with(int n, const VertexSet& m, Lookup&& lookup) {
  VertexSet out = m;
  const auto members = m.to_vector();
  const VertexSet all = VertexSet::full(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out |= lookup(members[i], members[j]);
      if (out == all) return out;
    }
  }
  return out;
}

template <class Closure>
HullResult hull_with(const VertexSet& m, Closure&& closure) {
  HullResult r{m, 0};
  while (true) {
    VertexSet next = closure(r.hull);
    if (next == r.hull) return r;
    r.hull = next;
    ++r.iterations;
  }
}

template <std::size_t W>
LongestPath longest_path_impl(const Graph& g) {
  const auto adj = g.adjacency_bits<W>();
  const auto univ = Bits<W>::prefix(g.order());
  LongestPath best;
  std::vector<Vertex> path;

  auto dfs = [&](auto&& self, const Bits<W>& blocked) -> void {
    const int pk = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (len > best.length) {
      best.length = len;
      best.path = path;
    }
    const auto& nk = adj[static_cast<std::size_t>(pk)];
    Bits<W> next_blocked = blocked | nk;
    next_blocked.set(pk);
    const Bits<W> allowed = minus(univ, next_blocked);
    minus(nk, blocked).for_each([&](int w) {
      const Bits<W> r = reach_within(adj, adj[static_cast<std::size_t>(w)], allowed);
      if (len + 1 + r.count() <= best.length) return;
      path.push_back(w);
      self(self, next_blocked);
      path.pop_back();
    });
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    dfs(dfs, Bits<W>{});
  }
  if (best.path.empty() && g.order() > 0) best.path = {0};
  return best;
}

}  // namespace

InducedPathResult enumerate_induced_paths(const Graph& g, const InducedPathQuery& q, const PathCallback& on_path) {
  check_vertex(g, q.u);
  check_vertex(g, q.v);
  if (q.u == q.v) throw DomainError("induced path query needs distinct endpoints");
  if (q.budget == 0) throw DomainError("induced path budget must be positive");
  if (q.mode == PathQueryMode::early_exit) check_vertex(g, q.target);
  return with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    return PathSearch<W>(g, q, on_path).run(g.order());
  });
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (auto [u, v] : g.edges()) mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  return h;
}

IntervalCache::IntervalCache(const Graph& g, std::uint64_t budget)
    : g_(g),
      budget_(budget),
      fingerprint_(graph_fingerprint(g)),
      table_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order())),
      ready_(table_.size(), 0) {}

std::size_t IntervalCache::slot(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(g_.order()) + static_cast<std::size_t>(v);
}

VertexSet IntervalCache::get(Vertex u, Vertex v) {
  check_vertex(g_, u);
  check_vertex(g_, v);
  const std::size_t i = slot(u, v);
  {
    std::lock_guard lock(mu_);
    if (ready_[i]) return table_[i];
  }
  VertexSet k = interval_or_throw(g_, u, v, budget_);
  std::lock_guard lock(mu_);
  if (!ready_[i]) {
    table_[i] = k;
    ready_[i] = 1;
  }
  return table_[i];
}

void IntervalCache::compute_all() {
  for (Vertex u = 0; u < g_.order(); ++u) {
    for (Vertex v = u + 1; v < g_.order(); ++v) get(u, v);
  }
}

VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v) {
  return interval_or_throw(g, u, v, kDefaultPathBudget);
}

VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v, IntervalCache& cache) {
  if (cache.fingerprint() != graph_fingerprint(g)) throw DomainError("interval cache belongs to a different graph");
  return cache.get(u, v);
}

VertexSet monophonic_closure(const Graph& g, const VertexSet& m) {
  IntervalCache cache(g);
  return monophonic_closure(cache, m);
}

VertexSet monophonic_closure(IntervalCache& cache, const VertexSet& m) {
  if (m.empty()) throw DomainError("closure of the empty set");
  return closure_with(cache.graph().order(), m, [&](Vertex x, Vertex y) { return cache.get(x, y); });
}

HullResult monophonic_hull(const Graph& g, const VertexSet& m) {
  IntervalCache cache(g);
  return monophonic_hull(cache, m);
}

HullResult monophonic_hull(IntervalCache& cache, const VertexSet& m) {
  if (m.empty()) throw DomainError("hull of the empty set");
  return hull_with(m, [&](const VertexSet& s) { return monophonic_closure(cache, s); });
}

VertexSet interior_vertices(const Graph& g, const VertexSet& m) {
  if (m.size() < 2) throw DomainError("interior vertices need at least two members");
  IntervalCache cache(g);
  VertexSet out(g.order());
  m.for_each([&](Vertex u) {
    VertexSet rest = m;
    rest.erase(u);
    if (monophonic_closure(cache, rest).contains(u)) out.insert(u);
  });
  return out;
}

LongestPath longest_induced_path(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("longest induced path: order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  return with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    return longest_path_impl<W>(g);
  });
}

PathPartition induced_path_partition(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap || n > 20) {
    throw CapExceeded("induced path partition: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return {};
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> is_path(std::size_t{full} + 1, 0);
  const auto adj = g.adjacency_bits<1>();

  // Every induced path from every start; each vertex set is marked once per
  // direction, which is harmless.
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, std::uint64_t blocked, std::uint32_t mask) -> void {
    is_path[mask] = 1;
    const int pk = path.back();
    const std::uint64_t nk = adj[static_cast<std::size_t>(pk)].words[0];
    const std::uint64_t next_blocked = blocked | nk | (std::uint64_t{1} << pk);
    std::uint64_t cand = nk & ~blocked;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(w);
      self(self, next_blocked, mask | (std::uint32_t{1} << w));
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    dfs(dfs, 0, std::uint32_t{1} << s);
  }

  std::vector<std::vector<std::uint32_t>> by_low(static_cast<std::size_t>(n));
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (is_path[m]) by_low[static_cast<std::size_t>(std::countr_zero(m))].push_back(m);
  }
  constexpr int kInf = 1 << 20;
  std::vector<int> dp(std::size_t{full} + 1, kInf);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  dp[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    for (std::uint32_t p : by_low[static_cast<std::size_t>(std::countr_zero(m))]) {
      if ((p & m) != p) continue;
      const int c = dp[m ^ p] + 1;
      if (c < dp[m]) {
        dp[m] = c;
        choice[m] = p;
      }
    }
  }
  PathPartition out;
  out.value = dp[full];
  for (std::uint32_t m = full; m; m ^= choice[m]) {
    VertexSet part(n);
    for (std::uint32_t p = choice[m]; p; p &= p - 1) part.insert(std::countr_zero(p));
    out.parts.push_back(part);
  }
  return out;
}

}  // namespace monopos
