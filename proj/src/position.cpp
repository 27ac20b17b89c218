#include "monopos/position.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"
#include "monopos/subset_search.hpp"

namespace monopos {

std::string_view to_string(PathMode m) {
  switch (m) {
    case PathMode::monophonic: return "mono";
    case PathMode::geodesic: return "geo";
    case PathMode::geodesic_len2: return "geo2";
  }
  return "?";
}

PathMode parse_path_mode(std::string_view s) {
  if (s == "mono" || s == "monophonic") return PathMode::monophonic;
  if (s == "geo" || s == "geodesic") return PathMode::geodesic;
  if (s == "geo2" || s == "geodesic_len2") return PathMode::geodesic_len2;
  throw DomainError("unknown path mode '" + std::string(s) + "'");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::branch_and_bound: return "branch_and_bound";
    case Method::oracle: return "oracle";
  }
  return "?";
}

ForbiddenTripleIndex::ForbiddenTripleIndex(int n, PathMode mode)
    : n_(n),
      mode_(mode),
      witness_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), VertexSet(n)),
      conflict_(witness_.size(), VertexSet(n)),
      degree_(static_cast<std::size_t>(n), 0) {}

void ForbiddenTripleIndex::add_witnesses(Vertex x, Vertex z, const VertexSet& ys) {
  witness_[at(x, z)] |= ys;
  witness_[at(z, x)] |= ys;
}

void ForbiddenTripleIndex::finalize() {
  for (auto& c : conflict_) c = VertexSet(n_);
  std::fill(degree_.begin(), degree_.end(), 0);
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex z = x + 1; z < n_; ++z) {
      witness_[at(x, z)].for_each([&](Vertex y) {
        conflict_[at(x, z)].insert(y);
        conflict_[at(z, x)].insert(y);
        conflict_[at(x, y)].insert(z);
        conflict_[at(y, x)].insert(z);
        conflict_[at(z, y)].insert(x);
        conflict_[at(y, z)].insert(x);
      });
    }
  }
  // A triple may be witnessed through several of its pairs; count each once.
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      conflict_[at(a, b)].for_each([&](Vertex c) {
        if (c > b) {
          ++degree_[static_cast<std::size_t>(a)];
          ++degree_[static_cast<std::size_t>(b)];
          ++degree_[static_cast<std::size_t>(c)];
        }
      });
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void index_geodesic(const Graph& g, ForbiddenTripleIndex& idx, bool len2_only) {
  const int n = g.order();
  const DistanceMatrix d(g);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex z = x + 1; z < n; ++z) {
      const int dxz = d(x, z);
      if (dxz == DistanceMatrix::kUnreachable || dxz < 2) continue;
      if (len2_only) {
        if (dxz == 2) idx.add_witnesses(x, z, g.neighbors(x) & g.neighbors(z));
        continue;
      }
      VertexSet ys(n);
      for (Vertex y = 0; y < n; ++y) {
        if (y == x || y == z || d(x, y) == DistanceMatrix::kUnreachable) continue;
        if (d(x, y) + d(y, z) == dxz) ys.insert(y);
      }
      idx.add_witnesses(x, z, ys);
    }
  }
}

template <std::size_t W>
struct PositionModel {
  int n;
  std::vector<Bits<W>> conf;
  std::vector<Bits<W>> adj;
  bool independent;

  Bits<W> include(const Bits<W>& chosen, const Bits<W>& cand, int v) const {
    Bits<W> out = cand;
    out.reset(v);
    const std::size_t row = static_cast<std::size_t>(v) * static_cast<std::size_t>(n);
    chosen.for_each([&](int s) { out.remove(conf[row + static_cast<std::size_t>(s)]); });
    if (independent) out.remove(adj[static_cast<std::size_t>(v)]);
    return out;
  }

  int bound(const Bits<W>& cand) const { return cand.count(); }
};

template <std::size_t W>
ParameterReport solve_position(const Graph& g, const ForbiddenTripleIndex& idx, const SolverOptions& opts) {
  const int n = g.order();
  PositionModel<W> model{n, {}, g.adjacency_bits<W>(), opts.require_independent};
  model.conf.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) model.conf.push_back(idx.conflicts(a, b).template bits<W>());
  }
  Bits<W> universe = Bits<W>::prefix(n);
  if (opts.allowed) universe &= opts.allowed->template bits<W>();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return idx.witness_degree(a) > idx.witness_degree(b); });

  SubsetSearch<W, PositionModel<W>> fast(model, std::move(order), opts.node_limit);
  Bits<W> best = fast.maximize(universe);
  const int k = fast.best_size();
  std::uint64_t expansions = fast.expansions();
  if (opts.canonical_witness && k > 0) {
    SubsetSearch<W, PositionModel<W>> lex(model, descending_ids(n), opts.node_limit - expansions);
    auto w = lex.first_of_size(universe, k);
    if (!w) throw InternalError("position solver found no witness at its own optimum");
    best = *w;
    expansions += lex.expansions();
  }
  ParameterReport r;
  r.value = k;
  r.witness = VertexSet::from_bits(n, best);
  r.expansions = expansions;
  return r;
}

std::string parameter_for(PathMode mode, bool independent) {
  switch (mode) {
    case PathMode::monophonic: return independent ? "imp" : "mp";
    case PathMode::geodesic: return independent ? "igp" : "gp";
    case PathMode::geodesic_len2: return independent ? "igp2" : "gp2";
  }
  return "?";
}

void verify_witness(const Graph& g, const ForbiddenTripleIndex& idx, const SolverOptions& opts,
                    const ParameterReport& r) {
  if (r.witness.size() != r.value) throw InternalError("witness size differs from the reported value");
  if (auto c = is_position_set(idx, r.witness); !c) {
    throw InternalError("witness " + r.witness.to_string() + " is not in position: " + std::to_string(c.violation->y) +
                        " lies between " + std::to_string(c.violation->x) + " and " + std::to_string(c.violation->z));
  }
  if (opts.require_independent && !is_independent(g, r.witness)) {
    throw InternalError("witness " + r.witness.to_string() + " is not independent");
  }
  if (opts.allowed && !r.witness.subset_of(*opts.allowed)) {
    throw InternalError("witness uses a vertex outside the allowed set");
  }
}

template <std::size_t W>
struct HullEngine {
  int n;
  std::vector<Bits<W>> interval;  // [x * n + y], endpoints included

  HullEngine(IntervalCache& cache) : n(cache.graph().order()) {
    interval.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const auto k = cache.get(x, y).template bits<W>();
        interval[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = k;
        interval[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] = k;
      }
    }
  }

  Bits<W> hull(const Bits<W>& seed) const {
    Bits<W> result = seed;
    Bits<W> done;
    while (true) {
      const int x = minus(result, done).lowest();
      if (x < 0) return result;
      const std::size_t row = static_cast<std::size_t>(x) * static_cast<std::size_t>(n);
      done.for_each([&](int y) { result |= interval[row + static_cast<std::size_t>(y)]; });
      done.set(x);
    }
  }
};

template <std::size_t W>
ParameterReport hull_search(const Graph& g) {
  const int n = g.order();
  ParameterReport r;
  r.parameter = "hm";
  if (n == 1) {
    r.value = 1;
    r.witness = VertexSet(1, {0});
    return r;
  }
  IntervalCache cache(g);
  HullEngine<W> eng(cache);
  const ForbiddenTripleIndex idx = build_triple_index(cache);
  const auto full = Bits<W>::prefix(n);
  const auto seed = simplicial_vertices(g).template bits<W>();
  std::vector<int> cand;
  minus(full, seed.any() ? eng.hull(seed) : Bits<W>{}).for_each([&](int v) { cand.push_back(v); });
  const int m = static_cast<int>(cand.size());

  std::uint64_t tried = 0;
  for (int k = 0; k <= m; ++k) {
    // Combinations of cand in increasing order of their bit pattern.
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      if (++tried > kDefaultNodeLimit) throw LimitExceeded("hull number search exceeded its node limit");
      Bits<W> s = seed;
      for (int i : c) s.set(cand[static_cast<std::size_t>(i)]);
      const VertexSet sv = VertexSet::from_bits(n, s);
      if (is_position_set(idx, sv) && eng.hull(s) == full) {
        r.value = sv.size();
        r.witness = sv;
        r.expansions = tried;
        return r;
      }
      int j = 0;
      while (j < k && c[static_cast<std::size_t>(j)] + 1 == (j + 1 < k ? c[static_cast<std::size_t>(j) + 1] : m)) ++j;
      if (j == k) break;
      ++c[static_cast<std::size_t>(j)];
      for (int i = 0; i < j; ++i) c[static_cast<std::size_t>(i)] = i;
    }
  }
  throw InternalError("no hull set found, not even V");
}

ParameterReport skipped_report(const std::string& name, const std::string& why) {
  ParameterReport r;
  r.parameter = name;
  r.value = -1;
  r.skipped = why;
  return r;
}

}  // namespace

ForbiddenTripleIndex build_triple_index(const Graph& g, PathMode mode, std::uint64_t path_budget) {
  if (mode == PathMode::monophonic) {
    IntervalCache cache(g, path_budget);
    return build_triple_index(cache);
  }
  ForbiddenTripleIndex idx(g.order(), mode);
  index_geodesic(g, idx, mode == PathMode::geodesic_len2);
  idx.finalize();
  return idx;
}

ForbiddenTripleIndex build_triple_index(IntervalCache& cache) {
  const Graph& g = cache.graph();
  ForbiddenTripleIndex idx(g.order(), PathMode::monophonic);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex z = x + 1; z < g.order(); ++z) {
      VertexSet k = cache.get(x, z);
      k.erase(x);
      k.erase(z);
      idx.add_witnesses(x, z, k);
    }
  }
  idx.finalize();
  return idx;
}

ForbiddenTripleIndex triple_index_from_table(const Graph& g, PathMode mode, const oracle::IntervalTable& t) {
  const int n = g.order();
  ForbiddenTripleIndex idx(n, mode);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex z = x + 1; z < n; ++z) {
      VertexSet k = t[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(z)];
      k.erase(x);
      k.erase(z);
      if (mode == PathMode::geodesic_len2) {
        // Only pairs at distance two; their interiors are the common neighbours.
        const bool dist2 = !g.adjacent(x, z) && (g.neighbors(x) & g.neighbors(z)).size() > 0;
        if (!dist2) continue;
        k &= g.neighbors(x) & g.neighbors(z);
      }
      idx.add_witnesses(x, z, k);
    }
  }
  idx.finalize();
  return idx;
}

PositionCheck is_position_set(const ForbiddenTripleIndex& idx, const VertexSet& s) {
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const VertexSet hit = idx.witnesses(members[i], members[j]) & s;
      if (!hit.empty()) return {false, Triple{members[i], hit.lowest(), members[j]}};
    }
  }
  return {};
}

ParameterReport max_position_set(const Graph& g, const ForbiddenTripleIndex& idx, const SolverOptions& opts) {
  if (idx.order() != g.order()) throw DomainError("triple index and graph differ in order");
  if (opts.node_limit == 0) throw DomainError("node limit must be positive");
  const auto t0 = Clock::now();
  ParameterReport r = with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    return solve_position<W>(g, idx, opts);
  });
  r.parameter = parameter_for(idx.mode(), opts.require_independent);
  r.method = Method::branch_and_bound;
  verify_witness(g, idx, opts, r);
  r.ms = ms_since(t0);
  return r;
}

ParameterReport position_number(const Graph& g, PathMode mode, const SolverOptions& opts) {
  const auto t0 = Clock::now();
  const auto idx = build_triple_index(g, mode);
  auto r = max_position_set(g, idx, opts);
  r.ms = ms_since(t0);
  return r;
}

ParameterReport brute_force_position(const Graph& g, PathMode mode, const SolverOptions& opts) {
  const int n = g.order();
  if (n > kBruteForceCap) {
    throw CapExceeded("brute force: order " + std::to_string(n) + " exceeds cap " + std::to_string(kBruteForceCap));
  }
  const auto t0 = Clock::now();
  const auto table =
      mode == PathMode::monophonic ? oracle::intervals_by_induced_subsets(g) : oracle::geodesic_intervals(g);
  const auto idx = triple_index_from_table(g, mode, table);
  std::uint32_t allowed = (1U << n) - 1;
  if (opts.allowed) {
    allowed = 0;
    opts.allowed->for_each([&](Vertex v) { allowed |= 1U << v; });
  }
  ParameterReport r;
  r.parameter = parameter_for(mode, opts.require_independent);
  r.method = Method::oracle;
  r.witness = VertexSet(n);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    ++r.expansions;
    if ((mask & ~allowed) != 0 || std::popcount(mask) <= r.value) continue;
    VertexSet s(n);
    for (std::uint32_t x = mask; x; x &= x - 1) s.insert(std::countr_zero(x));
    if (opts.require_independent && !is_independent(g, s)) continue;
    if (!is_position_set(idx, s)) continue;
    r.value = s.size();
    r.witness = s;
  }
  r.ms = ms_since(t0);
  return r;
}

ParameterReport hull_number(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("hull number: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  }
  if (g.order() == 0) throw DomainError("hull number of the empty graph");
  if (!is_connected(g)) throw DomainError("hull number needs a connected graph");
  const auto t0 = Clock::now();
  auto r = with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    return hull_search<W>(g);
  });
  r.method = Method::branch_and_bound;
  r.ms = ms_since(t0);
  return r;
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = {"mp",    "gp",    "gp2",         "imp", "igp", "diss", "hm",
                                                 "alpha", "omega", "alpha_omega", "s",   "L",   "rho"};
  return names;
}

ParameterReport compute_parameter(const Graph& g, std::string_view name, const std::string& graph_id) {
  const auto t0 = Clock::now();
  auto from_set = [&](const SetResult& s) {
    ParameterReport r;
    r.value = s.value;
    r.witness = s.witness;
    r.expansions = s.expansions;
    return r;
  };
  ParameterReport r;
  if (name == "mp" || name == "gp" || name == "gp2" || name == "imp" || name == "igp") {
    const PathMode mode = name == "mp" || name == "imp" ? PathMode::monophonic
                          : name == "gp2"               ? PathMode::geodesic_len2
                                                        : PathMode::geodesic;
    SolverOptions opts;
    opts.require_independent = name == "imp" || name == "igp";
    r = position_number(g, mode, opts);
  } else if (name == "diss") {
    r = from_set(dissociation_number(g));
  } else if (name == "hm") {
    r = hull_number(g);
  } else if (name == "alpha") {
    r = from_set(independence_number(g));
  } else if (name == "omega") {
    r = from_set(clique_number(g));
  } else if (name == "alpha_omega") {
    r = from_set(alpha_omega(g));
  } else if (name == "s") {
    r.witness = simplicial_vertices(g);
    r.value = r.witness.size();
    r.method = Method::closed_form;
  } else if (name == "L") {
    const auto lp = longest_induced_path(g);
    r.value = lp.length;
    r.witness = VertexSet::from_range(g.order(), lp.path);
  } else if (name == "rho") {
    const auto pp = induced_path_partition(g);
    r.value = pp.value;
    r.witness = VertexSet(g.order());
  } else {
    throw DomainError("unknown parameter '" + std::string(name) + "'");
  }
  r.parameter = std::string(name);
  r.graph_id = graph_id;
  r.ms = ms_since(t0);
  return r;
}

std::vector<ParameterReport> parameter_suite(const Graph& g, const std::string& graph_id) {
  std::vector<ParameterReport> out;
  for (const auto& name : parameter_names()) {
    try {
      out.push_back(compute_parameter(g, name, graph_id));
    } catch (const CapExceeded&) {
      out.push_back(skipped_report(name, "cap"));
    } catch (const LimitExceeded&) {
      out.push_back(skipped_report(name, "limit"));
    } catch (const DomainError&) {
      out.push_back(skipped_report(name, "domain"));
    }
    out.back().graph_id = graph_id;
  }
  return out;
}

}  // namespace monopos
