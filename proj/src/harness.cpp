#include "monopos/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "monopos/cliques.hpp"
#include "monopos/corpus.hpp"
#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/invariants.hpp"
#include "monopos/mono_paths.hpp"
#include "monopos/position.hpp"
#include "monopos/reduction.hpp"
#include "monopos/version.hpp"

namespace monopos {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::uint64_t fnv(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string str(int v) { return std::to_string(v); }

class Ctx {
 public:
  Ctx(CheckResult& r, std::uint64_t seed) : r_(r), rng(seed ^ fnv(r.id)) {}

  /// Records one instance; returns ok.
  bool expect(bool ok, const Graph& g, const std::string& instance, const std::string& expected, const std::string& actual) {
    ++r_.instances;
    if (!ok) {
      ++r_.failure_count;
      if (r_.failures.size() < kMaxStoredFailures) r_.failures.push_back({emit_graph6(g), instance, expected, actual});
    }
    return ok;
  }
  bool equal(int expected, int actual, const Graph& g, const std::string& instance) {
    return expect(expected == actual, g, instance, str(expected), str(actual));
  }
  void skip() { ++r_.skipped_instances; }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

  CheckResult& r_;
  Rng rng;
};

// -- shared helpers ----------------------------------------------------------

int solve(const Graph& g, PathMode mode, bool independent = false) {
  SolverOptions opts;
  opts.require_independent = independent;
  return position_number(g, mode, opts).value;
}
int mp(const Graph& g) { return solve(g, PathMode::monophonic); }
int gp(const Graph& g) { return solve(g, PathMode::geodesic); }

const std::vector<Graph>& small_connected() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (int n = 1; n <= 7; ++n) {
      auto level = all_graphs(n, true);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }();
  return graphs;
}

const std::vector<Graph>& small_all() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (int n = 1; n <= 7; ++n) {
      auto level = all_graphs(n, false);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }();
  return graphs;
}

std::vector<Graph> random_connected_corpus(Rng& rng, int count, int lo, int hi) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = rng.between(lo, hi);
    out.push_back(random_connected_graph(n, rng.between(5, 45), rng));
  }
  return out;
}

std::vector<std::string> small_family_specs() {
  std::vector<std::string> out;
  for (int n = 2; n <= 9; ++n) out.push_back("path:" + str(n));
  for (int n = 3; n <= 9; ++n) out.push_back("cycle:" + str(n));
  for (int n = 1; n <= 9; ++n) out.push_back("complete:" + str(n));
  for (int k = 1; k <= 8; ++k) out.push_back("star:" + str(k));
  for (const char* s : {"complete_multipartite:3,2,2", "complete_multipartite:2,2,2", "complete_multipartite:4,1",
                        "complete_multipartite:3,3,1,1", "caterpillar:0,1,1,1,0", "caterpillar:2,0,2", "hypercube:3",
                        "grid:2,2", "grid:2,4", "grid:3,3", "half_wheel:2", "half_wheel:3", "half_wheel:4",
                        "half_wheel_pendant:6,3", "wheel_pendant_W:3", "wheel_pendant_W:4", "wheel_pendant_W:5",
                        "R_graph:2,3", "R_graph:0,4", "R_graph:4,1", "P_graph:0,2", "P_graph:1,3", "P_graph:2,2",
                        "G_abl:2,4,3", "G_abl:3,5,2", "G_abl:4,4,1", "petersen", "corona_of:{path:3},{complete:2}",
                        "corona_of:{cycle:4},{complete:1}", "join_of:{cycle:4},{cycle:4}", "join_of:{path:4},{complete:2}"}) {
    out.emplace_back(s);
  }
  for (int seed = 1; seed <= 4; ++seed) {
    const std::string s = ":seed=" + str(seed);
    for (const char* f : {"random_tree:9", "random_block:9", "random_unicyclic:9", "random_split:9", "random_bipartite:4,5"}) {
      out.push_back(f + s);
    }
  }
  return out;
}

// -- checks ------------------------------------------------------------------

void check_cage_values(Ctx& c) {
  const std::vector<std::pair<std::string, int>> cages{{"petersen", 3}, {"heawood", 3}, {"mcgee", 2}};
  for (const auto& [name, want] : cages) {
    Graph g = generate(name);
    auto t0 = Clock::now();
    const int got = mp(g);
    const double ms = ms_since(t0);
    c.equal(want, got, g, "mp(" + name + ")");
    c.expect(ms < 60'000.0, g, "time mp(" + name + ")", "< 60 s", ms < 60'000.0 ? "< 60 s" : ">= 60 s");
  }
}

void check_petersen_gp(Ctx& c) {
  Graph p = petersen_graph();
  auto t0 = Clock::now();
  const int g = gp(p);
  const int m = mp(p);
  const bool fast = ms_since(t0) < 10'000.0;
  c.equal(6, g, p, "gp(petersen)");
  c.expect(m <= g, p, "mp <= gp", "mp <= gp", str(m) + " vs " + str(g));
  c.expect(fast, p, "time", "< 10 s", fast ? "< 10 s" : ">= 10 s");
}

void check_oracle_equivalence(Ctx& c) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int i = 0; i < 500; ++i) {
    const int n = c.rng.between(2, 9);
    corpus.emplace_back("random", random_connected_graph(n, c.rng.between(5, 60), c.rng));
  }
  for (const auto& s : small_family_specs()) corpus.emplace_back(s, generate(s));
  struct Mode {
    const char* name;
    PathMode mode;
    bool independent;
  };
  const Mode modes[] = {{"mp", PathMode::monophonic, false},
                        {"gp", PathMode::geodesic, false},
                        {"gp2", PathMode::geodesic_len2, false},
                        {"imp", PathMode::monophonic, true},
                        {"igp", PathMode::geodesic, true}};
  for (const auto& [label, g] : corpus) {
    if (g.order() > 9) continue;
    for (const auto& m : modes) {
      SolverOptions opts;
      opts.require_independent = m.independent;
      auto fast = position_number(g, m.mode, opts);
      auto slow = brute_force_position(g, m.mode, opts);
      const bool ok = fast.value == slow.value && fast.witness == slow.witness;
      c.expect(ok, g, label + " " + m.name, str(slow.value) + " " + slow.witness.to_string(),
               str(fast.value) + " " + fast.witness.to_string());
    }
  }
}

void check_distance_hereditary(Ctx& c) {
  for (int i = 0; i < 200; ++i) {
    Graph g = random_distance_hereditary(c.rng.between(3, 12), c.rng);
    c.expect(is_distance_hereditary(g), g, "recognised as distance-hereditary", "true", "false");
    const int m = mp(g), q = gp(g);
    c.expect(m == q, g, "mp = gp", "mp = gp", str(m) + " vs " + str(q));
  }
  Graph c5k1 = corona(cycle_graph(5), complete_graph(1));
  if (c.r_.notes.empty()) {
    c.note("C5 corona K1 is not distance-hereditary yet has mp = " + str(mp(c5k1)) + " and gp = " + str(gp(c5k1)));
  }
}

void check_block_graphs(Ctx& c) {
  for (int i = 0; i < 100; ++i) {
    Graph t = random_tree(c.rng.between(2, 20), c.rng);
    c.equal(leaves(t).size(), mp(t), t, "mp(tree) = leaves");
    Graph b = random_block_graph(c.rng.between(2, 20), c.rng);
    c.equal(simplicial_vertices(b).size(), mp(b), b, "mp(block graph) = s");
    c.equal(predict_block_graph(b).value, mp(b), b, "predict_block_graph");
  }
}

void check_multipartite(Ctx& c) {
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& parts, int max_part) {
    if (!parts.empty()) {
      Graph g = complete_multipartite(parts);
      const int want = std::max(parts.front(), static_cast<int>(parts.size()));
      std::string label = "K_";
      for (int p : parts) label += str(p) + ",";
      c.equal(want, mp(g), g, label + " mp");
      c.equal(want, gp(g), g, label + " gp");
      c.equal(want, predict_multipartite(parts)[0].value, g, label + " predictor");
    }
    if (parts.size() == 5) return;
    for (int p = 1; p <= max_part; ++p) {
      parts.push_back(p);
      rec(parts, p);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  rec(parts, 5);
}

void check_longest_path_bound(Ctx& c) {
  auto corpus = small_connected();
  auto extra = random_connected_corpus(c.rng, 200, 8, 14);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& g : corpus) {
    const int L = longest_induced_path_length(g);
    const int m = mp(g);
    c.expect(m <= g.order() - L + 1, g, "mp <= n - L + 1", "<= " + str(g.order() - L + 1), str(m));
  }
  for (int n = 2; n <= 10; ++n) {
    Graph k = complete_graph(n), p = path_graph(n);
    c.equal(n - longest_induced_path_length(k) + 1, mp(k), k, "sharp on K_" + str(n));
    c.equal(n - longest_induced_path_length(p) + 1, mp(p), p, "sharp on P_" + str(n));
  }
}

void check_path_partition_bound(Ctx& c) {
  auto corpus = small_connected();
  auto extra = random_connected_corpus(c.rng, 100, 8, kPathPartitionCap);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& g : corpus) {
    const int rho = induced_path_partition(g).value;
    const int m = mp(g);
    c.expect(m <= 2 * rho, g, "mp <= 2 rho", "<= " + str(2 * rho), str(m));
  }
}

void check_cubic_bound(Ctx& c) {
  std::vector<Graph> corpus{petersen_graph(), heawood_graph(), mcgee_graph()};
  for (int i = 0; i < 100; ++i) corpus.push_back(random_cubic_graph(2 * c.rng.between(4, 10), c.rng));
  for (const auto& g : corpus) {
    const int m = mp(g);
    c.expect(3 * m <= 2 * (g.order() - 1), g, "mp <= 2(n-1)/3", "<= " + str(2 * (g.order() - 1)) + "/3", str(m));
  }
}

void check_cut_vertex_bound(Ctx& c) {
  auto corpus = small_connected();
  for (int i = 0; i < 100; ++i) corpus.push_back(random_connected_graph(c.rng.between(8, 14), c.rng.between(0, 12), c.rng));
  for (int i = 0; i < 60; ++i) corpus.push_back(random_block_graph(c.rng.between(5, 16), c.rng));
  for (const auto& g : corpus) {
    const VertexSet cuts = cut_vertices(g);
    const int m = mp(g);
    c.expect(m <= g.order() - cuts.size(), g, "mp <= n - c", "<= " + str(g.order() - cuts.size()), str(m));
    SolverOptions opts;
    opts.allowed = g.vertices() - cuts;
    const int avoiding = position_number(g, PathMode::monophonic, opts).value;
    c.equal(m, avoiding, g, "maximum mp-set avoiding cut vertices");
  }
}

void check_simplicial_bound(Ctx& c) {
  auto corpus = small_all();
  auto extra = random_connected_corpus(c.rng, 150, 8, 16);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (int i = 0; i < 50; ++i) corpus.push_back(random_block_graph(c.rng.between(5, 20), c.rng));
  for (const auto& g : corpus) {
    const int s = simplicial_vertices(g).size();
    const int m = mp(g);
    c.expect(m >= s, g, "mp >= s", ">= " + str(s), str(m));
  }
}

// All maximum mp-sets by subset enumeration (n <= 12).
std::vector<VertexSet> all_maximum_mp_sets(const Graph& g, int value) {
  auto idx = build_triple_index(g, PathMode::monophonic);
  std::vector<VertexSet> out;
  const int n = g.order();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != value) continue;
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
      if (m >> v & 1) s.insert(v);
    }
    if (is_position_set(idx, s)) out.push_back(s);
  }
  return out;
}

void check_pendant_growth(Ctx& c) {
  int simplicial_samples = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = random_connected_graph(c.rng.between(2, 9), c.rng.between(10, 50), c.rng);
    const Vertex v = static_cast<Vertex>(c.rng.below(static_cast<std::uint64_t>(g.order())));
    Graph h = add_pendant(g, v);
    const int before = mp(g), after = mp(h);
    const std::string label = "pendant at " + str(v);
    c.expect(after - before == 0 || after - before == 1, g, label + ": mp(G') - mp(G)", "0 or 1", str(after - before));
    if (simplicial_vertices(g).contains(v)) {
      ++simplicial_samples;
      c.equal(before, after, g, label + " (simplicial): mp(G') = mp(G)");
    }
    // mp grows iff some maximum mp-set M misses v with (M + v)^0 = {v}.
    bool exists = false;
    for (const auto& m : all_maximum_mp_sets(g, before)) {
      if (m.contains(v)) continue;
      VertexSet mv = m;
      mv.insert(v);
      if (mv.size() >= 2 && interior_vertices(g, mv) == VertexSet(g.order(), {v})) exists = true;
    }
    c.expect(exists == (after == before + 1), g, label + ": growth criterion", exists ? "grows" : "stays",
             after == before + 1 ? "grows" : "stays");
  }
  c.note(str(simplicial_samples) + " of 300 samples attach at a simplicial vertex");
}

void check_pendant_simplicial(Ctx& c) {
  int done = 0;
  while (done < 150) {
    Graph g = c.rng.chance(1, 2) ? random_block_graph(c.rng.between(2, 12), c.rng)
                                 : random_connected_graph(c.rng.between(2, 11), c.rng.between(10, 60), c.rng);
    auto simp = simplicial_vertices(g).to_vector();
    if (simp.empty()) continue;
    const Vertex v = simp[c.rng.below(simp.size())];
    c.equal(mp(g), mp(add_pendant(g, v)), g, "pendant at simplicial " + str(v));
    ++done;
  }
}

void check_mp_set_structure(Ctx& c) {
  auto corpus = small_connected();
  auto extra = random_connected_corpus(c.rng, 150, 8, 14);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& g : corpus) {
    auto r = position_number(g, PathMode::monophonic);
    const VertexSet& m = r.witness;
    c.expect(is_union_of_cliques(g, m), g, "G[M] is a disjoint union of cliques", "true", "false");
    Graph h = g.induced(m);
    auto comps = components(h);
    if (comps.size() < 2) continue;
    auto ids = m.to_vector();
    bool ok = true;
    for (const auto& comp : comps) {
      auto members = comp.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const Vertex a = ids[static_cast<std::size_t>(members[i])], b = ids[static_cast<std::size_t>(members[j])];
          if (!((g.neighbors(a) & g.neighbors(b)) - m).size()) ok = false;
        }
      }
    }
    c.expect(ok, g, "clique pairs share a neighbour outside M", "true", "false");
  }
}

void check_triangle_free(Ctx& c) {
  std::vector<Graph> corpus;
  for (int i = 0; i < 200; ++i) {
    const int n = c.rng.between(3, 14);
    corpus.push_back(random_triangle_free(n, c.rng.between(0, 2 * n), c.rng));
  }
  for (int i = 0; i < 50; ++i) corpus.push_back(random_bipartite_graph(c.rng.between(1, 6), c.rng.between(2, 6), 40, c.rng));
  for (int n = 4; n <= 12; ++n) corpus.push_back(cycle_graph(n));
  for (int n = 4; n <= 8; ++n) corpus.push_back(corona(cycle_graph(n), complete_graph(1)));
  for (int r = 2; r <= 5; ++r) corpus.push_back(complete_bipartite(r, r));
  corpus.push_back(generate("caterpillar:0,1,1,1,1,0"));
  int equality_cases = 0;
  for (const auto& g : corpus) {
    if (g.order() < 3 || !is_connected(g) || !is_triangle_free(g)) continue;
    const int m = mp(g), a = independence_number(g).value;
    c.expect(m <= a, g, "mp <= alpha", "<= " + str(a), str(m));
    if (longest_induced_path_length(g) <= 3) {
      ++equality_cases;
      c.equal(a, m, g, "mp = alpha when L <= 3");
    }
  }
  c.note(str(equality_cases) + " instances have L <= 3");
}

void check_unicyclic(Ctx& c) {
  std::vector<Graph> corpus;
  for (int i = 0; i < 250; ++i) corpus.push_back(random_unicyclic(c.rng.between(3, 14), c.rng));
  for (int n = 3; n <= 10; ++n) corpus.push_back(cycle_graph(n));
  corpus.push_back(add_pendant(cycle_graph(4), 0));
  corpus.push_back(add_pendant(add_pendant(cycle_graph(6), 0), 3));
  corpus.push_back(Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {2, 6}, {6, 7}, {6, 8}}));
  std::map<std::string, int> cases;
  int literal_misses = 0;
  std::string literal_example;
  for (const auto& g : corpus) {
    auto p = predict_unicyclic(g);
    ++cases[p.applicability];
    const int m = mp(g);
    c.equal(p.value, m, g, "unicyclic: " + p.applicability);
    // Reading "T_i is a path" as any path graph, v_i possibly inside it.
    auto sh = unicyclic_shape(g);
    const bool any_path = sh.heavy.size() == 2 && (sh.tree_is_path[0] || sh.tree_is_path[1]);
    if (any_path && p.value == sh.leaves && m != sh.leaves + 1) {
      ++literal_misses;
      if (literal_example.empty()) literal_example = emit_graph6(g);
    }
  }
  for (const auto& [k, v] : cases) c.note(k + ": " + str(v));
  c.note("reading the path case as any path through v_i mispredicts " + str(literal_misses) + " instances" +
         (literal_example.empty() ? "" : ", e.g. " + literal_example));
}

Graph random_any_graph(Rng& rng, int lo, int hi) {
  const int n = rng.between(lo, hi);
  const int percent = rng.between(0, 100);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(percent), 100)) b.add_edge(u, v);
    }
  }
  return b.build();
}

void check_corona(Ctx& c) {
  for (int i = 0; i < 120; ++i) {
    Graph g = random_connected_graph(c.rng.between(2, 4), 40, c.rng);
    Graph h = random_any_graph(c.rng, 1, 4);
    Graph p = corona(g, h);
    c.equal(predict_corona(g, h).value, mp(p), p, "mp(G corona H) = n(G) mp(H), n(G)=" + str(g.order()));
    c.equal(predict_corona_gp(g, h).value, gp(p), p, "gp(G corona H) = n(G) alpha^omega(H)");
  }
  int single_misses = 0;
  for (int k = 1; k <= 5; ++k) single_misses += mp(corona(complete_graph(1), complete_graph(k))) != k;
  c.note("n(G) = 1 is excluded: K_1 corona K_k = K_(k+1) breaks n(G) mp(H) for " + str(single_misses) + " of k = 1..5");
}

void check_join(Ctx& c) {
  for (int i = 0; i < 120; ++i) {
    Graph g = random_any_graph(c.rng, 1, 6);
    Graph h = random_any_graph(c.rng, 1, 6);
    Graph j = join(g, h);
    c.equal(predict_join(g, h).value, mp(j), j, "mp(G join H)");
    c.equal(predict_join_gp(g, h).value, gp(j), j, "gp(G join H)");
  }
  Graph k1 = complete_graph(1);
  Graph cliques = disjoint_union(complete_graph(3), disjoint_union(complete_graph(2), complete_graph(4)));
  Graph j = join(k1, cliques);
  c.equal(j.order() - 1, mp(j), j, "K_1 join disjoint cliques: mp = n - 1");
}

void check_bipartite_complement(Ctx& c) {
  for (int i = 0; i < 150; ++i) {
    Graph g = random_bipartite_graph(c.rng.between(1, 6), c.rng.between(1, 6), c.rng.between(10, 70), c.rng);
    c.equal(predict_bipartite_complement(g).value, mp(complement(g)), g, "mp(complement) = max(alpha, psi)");
  }
  for (int i = 0; i < 60; ++i) {
    Graph t = random_tree(c.rng.between(3, 12), c.rng);
    const int m = mp(complement(t));
    c.equal(predict_tree_complement(t).value, m, t, "tree complement");
    c.equal(predict_bipartite_complement(t).value, m, t, "tree complement via max(alpha, psi)");
  }
  int vertex_misses = 0, order_misses = 0, total = 0;
  for (int r = 2; r <= 5; ++r) {
    for (int s = 2; s <= 5; ++s) {
      ++total;
      const int want = predict_grid_complement(r, s).value;
      Graph g = grid_graph(r, s);
      if (!c.equal(want, mp(complement(g)), g, "grid complement " + str(r) + "x" + str(s) + " vertices")) ++vertex_misses;
      if (want != mp(complement(grid_graph(r + 1, s + 1)))) ++order_misses;
    }
  }
  c.note("grid formula with P_n on n vertices: " + str(total - vertex_misses) + "/" + str(total) +
         " match; with P_n of length n: " + str(total - order_misses) + "/" + str(total) + " match");
  for (int k = 3; k <= 5; ++k) {
    Graph q = hypercube(k);
    c.equal(predict_hypercube_complement(k).value, mp(complement(q)), q, "complement of Q_" + str(k));
  }
}

void check_split(Ctx& c) {
  int normalised_misses = 0, divided = 0;
  for (int i = 0; i < 220; ++i) {
    const int cs = c.rng.between(1, 8);
    const int is = c.rng.between(0, std::min(8, 16 - cs));
    Graph g = random_split_graph(cs, is, c.rng);
    auto pred = predict_split(g);
    const int m = mp(g);
    c.equal(pred.mp.value, m, g, "mp = phi");
    const bool equal = m == std::max(pred.omega, pred.alpha);
    c.expect(pred.saturation == equal, g, "saturating matching iff mp = max(omega, alpha)", equal ? "equality" : "strict",
             pred.saturation ? "saturating" : "not saturating");
    auto sp = split_partition(g);
    if (sp->divided) ++divided;
    if (phi_separated(g, *sp).value != m) ++normalised_misses;
  }
  c.note(str(divided) + " instances have a divided vertex; phi on the single normalised partition misses mp on " +
         str(normalised_misses));
}

void check_mp_gp_realization(Ctx& c) {
  for (int a = 2; a <= 8; ++a) {
    for (int b = a; b <= 8; ++b) {
      auto spec = realize_mp_gp(a, b);
      Graph g = generate(spec).graph;
      const int m = mp(g), q = gp(g);
      c.expect(m == a && q == b, g, "(mp, gp) = (" + str(a) + ", " + str(b) + ") via " + spec.to_string(),
               str(a) + ", " + str(b), str(m) + ", " + str(q));
    }
  }
  for (int r = 4; r <= 8; ++r) {
    Graph g = generate("half_wheel:" + str(r));
    c.equal(2, mp(g), g, "mp(H_" + str(r) + ")");
    c.equal(r, gp(g), g, "gp(H_" + str(r) + ")");
  }
  for (int a = 3; a <= 8; ++a) {
    Graph w = generate("wheel_pendant_W:" + str(a));
    c.equal(a, mp(w), w, "mp(W(" + str(a) + "))");
    c.equal(a + 1, gp(w), w, "gp(W(" + str(a) + "))");
  }
}

void check_igp_mp_realization(Ctx& c) {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      if (a >= 2 && b < 2) continue;
      auto spec = realize_igp_mp(a, b);
      Graph g = generate(spec).graph;
      const int i = solve(g, PathMode::geodesic, true), m = mp(g);
      c.expect(i == a && m == b, g, "(igp, mp) = (" + str(a) + ", " + str(b) + ") via " + spec.to_string(),
               str(a) + ", " + str(b), str(i) + ", " + str(m));
    }
  }
  int literal = 0;
  for (int a = 3; a <= 8; ++a) {
    for (int b = 2; b < a; ++b) literal += b - a + 2 >= 2;
  }
  c.note("P(a-2, b-a+2) as written has s >= 2 for " + str(literal) + " of the 21 pairs 2 <= b < a <= 8; the roles are swapped");
}

void check_rp_constructions(Ctx& c) {
  // The realising graphs with the P roles swapped back: R(a-1, b-a+1) for
  // a <= b and P(b-2, a-b+2) for a > b.
  for (int a = 2; a <= 8; ++a) {
    for (int b = 2; b <= 8; ++b) {
      const std::string spec = a <= b ? "R_graph:" + str(a - 1) + "," + str(b - a + 1)
                                      : "P_graph:" + str(b - 2) + "," + str(a - b + 2);
      Graph g = generate(spec);
      const int i = solve(g, PathMode::geodesic, true), m = mp(g);
      c.expect(i == a && m == b, g, "(igp, mp) of " + spec, str(a) + ", " + str(b), str(i) + ", " + str(m));
    }
  }
  // The closed forms themselves, r >= 0.
  std::vector<std::string> misses;
  for (int r = 0; r <= 6; ++r) {
    for (int s = 1; r + s <= 8; ++s) {
      Graph g = generate("R_graph:" + str(r) + "," + str(s));
      if (solve(g, PathMode::geodesic, true) != r + 1 || mp(g) != r + s) misses.push_back("R(" + str(r) + "," + str(s) + ")");
      if (s < 2) continue;
      Graph p = generate("P_graph:" + str(r) + "," + str(s));
      if (solve(p, PathMode::geodesic, true) != r + s || mp(p) != r + 2) misses.push_back("P(" + str(r) + "," + str(s) + ")");
    }
  }
  std::string list;
  for (const auto& m : misses) list += (list.empty() ? "" : " ") + m;
  c.note("closed forms mp(R) = r + s, igp(R) = r + 1, mp(P) = r + 2, igp(P) = r + s miss on: " + (list.empty() ? "none" : list));
  c.note("R(0, s) = K_(s+1) has mp = s + 1; P(0, s) has igp = s + 1 (apex plus the far side), P(0, 2) is a path");
}

void check_r_graph_diss_gp2(Ctx& c) {
  for (int a = 2; a <= 8; ++a) {
    for (int b = a; b <= 8; ++b) {
      const std::string spec = "R_graph:" + str(a - 2) + "," + str(b - a + 2);
      Graph g = generate(spec);
      const int d = dissociation_number(g).value;
      const int q = solve(g, PathMode::geodesic_len2);
      c.expect(d == a && q == b, g, "(diss, gp2) of " + spec, str(a) + ", " + str(b), str(d) + ", " + str(q));
    }
  }
  for (int b = 2; b <= 8; ++b) {
    Graph k = complete_graph(b);
    if (dissociation_number(k).value == 2 && solve(k, PathMode::geodesic_len2) == b) continue;
    c.note("K_" + str(b) + " does not give (diss, gp2) = (2, " + str(b) + ")");
  }
  c.note("R(0, s) = K_(s+1) has gp2 = s + 1; for a = 2 the pair (2, b) is realised by R(0, b-1) = K_b instead");
}

void check_hull_realization(Ctx& c) {
  std::set<std::pair<int, int>> pairs;
  for (int b = 2; b <= 12; ++b) {
    for (int a = 2; a <= b; ++a) {
      for (int l = 1; b + l + 1 <= 14; ++l) {
        const std::string spec = "G_abl:" + str(a) + "," + str(b) + "," + str(l);
        Graph g = generate(spec);
        const int h = hull_number(g).value, m = mp(g);
        const bool ok = h == a && m == b && g.order() == b + l + 1;
        c.expect(ok, g, spec, "h_m=" + str(a) + " mp=" + str(b) + " n=" + str(b + l + 1),
                 "h_m=" + str(h) + " mp=" + str(m) + " n=" + str(g.order()));
        if (ok) pairs.insert({a, b});
      }
    }
  }
  int unequal = 0;
  for (auto [a, b] : pairs) unequal += a < b;
  c.note("realised (h_m, mp) pairs: " + str(static_cast<int>(pairs.size())) + ", of which " + str(unequal) +
         " have h_m < mp, so the realisable set is 2 <= h_m <= mp <= n - 1 rather than h_m = mp");
}

void check_hull_machinery(Ctx& c) {
  auto corpus = small_connected();
  auto extra = random_connected_corpus(c.rng, 150, 8, 14);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& s : small_family_specs()) {
    Graph g = generate(s);
    if (is_connected(g)) corpus.push_back(g);
  }
  for (const auto& g : corpus) {
    auto h = hull_number(g);
    const int m = mp(g);
    c.expect(h.value <= m, g, "h_m <= mp", "<= " + str(m), str(h.value));
    c.expect(simplicial_vertices(g).subset_of(h.witness), g, "hull witness contains every simplicial vertex", "true", "false");
    auto idx = build_triple_index(g, PathMode::monophonic);
    c.expect(is_position_set(idx, h.witness).ok, g, "hull witness is an mp-set", "true", "false");
    c.expect(monophonic_hull(g, h.witness).hull == g.vertices(), g, "hull witness generates V", "true", "false");
  }
  for (int i = 0; i < 100; ++i) {
    Graph t = random_tree(c.rng.between(2, 12), c.rng);
    c.equal(leaves(t).size(), hull_number(t).value, t, "h_m(tree) = leaves");
  }
}

void check_parameter_chains(Ctx& c) {
  auto corpus = random_connected_corpus(c.rng, 150, 3, 11);
  for (const auto& g : corpus) {
    const int m = mp(g), q = gp(g);
    const int imp = solve(g, PathMode::monophonic, true), igp = solve(g, PathMode::geodesic, true);
    const int gp2 = solve(g, PathMode::geodesic_len2), diss = dissociation_number(g).value;
    auto show = [&](std::initializer_list<int> xs) {
      std::string out;
      for (int x : xs) out += (out.empty() ? "" : " <= ") + str(x);
      return out;
    };
    c.expect(imp <= m && m <= q, g, "imp <= mp <= gp", "chain", show({imp, m, q}));
    c.expect(imp <= igp && igp <= q, g, "imp <= igp <= gp", "chain", show({imp, igp, q}));
    c.expect(diss <= gp2, g, "diss <= gp2", "chain", show({diss, gp2}));
  }
}

void check_reduction(Ctx& c) {
  auto t0 = Clock::now();
  for (int i = 0; i < 100; ++i) {
    Graph g = random_any_graph(c.rng, 1, 8);
    const int n = g.order();
    auto first = verify_reduction(reduce_clique_to_mp(g, 1));
    c.expect(first.mp_identity, g, "mp(G') = omega(G) + n", str(first.omega_source + n), str(first.mp_product));
    c.expect(first.omega_identity, g, "omega(G') = omega(G) + n", str(first.omega_source + n), str(first.omega_product));
    for (int k = 1; k <= n; ++k) {
      const bool clique_yes = first.omega_source >= k;
      const bool mp_yes = first.mp_product >= n + k;
      c.expect(clique_yes == mp_yes, g, "answers agree at k = " + str(k), clique_yes ? "yes" : "no", mp_yes ? "yes" : "no");
    }
  }
  const double ms = ms_since(t0);
  c.expect(ms < 300'000.0, Graph(1), "reduction check time", "< 5 min", ms < 300'000.0 ? "< 5 min" : ">= 5 min");
}

void check_graph6_roundtrip(Ctx& c) {
  std::vector<Graph> corpus = small_all();
  auto extra = random_connected_corpus(c.rng, 300, 8, 64);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& s : small_family_specs()) corpus.push_back(generate(s));
  for (const char* s : {"heawood", "mcgee", "hypercube:7", "grid:12,12", "complete:100", "cycle:300"}) corpus.push_back(generate(s));
  for (const auto& g : corpus) {
    const std::string text = emit_graph6(g);
    Graph back = parse_graph6(text);
    c.expect(back == g, g, "graph6 round-trip (n=" + str(g.order()) + ")", text, emit_graph6(back));
  }
}

struct CheckDef {
  CheckInfo info;
  std::function<void(Ctx&)> run;
};

const std::vector<CheckDef>& registry() {
  using K = CheckKind;
  static const std::vector<CheckDef> defs{
      {{"cage-values", K::equality, "mp of the Petersen, Heawood and McGee graphs is 3, 3 and 2", false,
        "embedded Petersen, Heawood and McGee fixtures"},
       check_cage_values},
      {{"petersen-gp", K::equality, "gp(Petersen) = 6 and mp <= gp", false, "Petersen fixture"}, check_petersen_gp},
      {{"oracle-equivalence", K::equality, "branch and bound equals subset enumeration for mp, gp, gp2, imp, igp (n <= 9)", true,
        "500 random connected graphs per seed (n 2..9) and the small family instances"},
       check_oracle_equivalence},
      {{"distance-hereditary", K::equality, "mp = gp on distance-hereditary graphs", true,
        "200 random distance-hereditary graphs per seed (n 3..12) from pendant and twin steps"},
       check_distance_hereditary},
      {{"block-graphs", K::equality, "mp of a block graph is its number of simplicial vertices (leaves for trees)", true,
        "100 random trees and 100 random block graphs per seed (n 2..20)"},
       check_block_graphs},
      {{"complete-multipartite", K::equality, "mp = gp = max(largest part, number of parts) for complete multipartite graphs",
        false, "every complete multipartite graph with at most 5 parts of size at most 5"},
       check_multipartite},
      {{"longest-path-bound", K::inequality, "mp <= n - L + 1, sharp for cliques and paths", true,
        "all connected graphs n <= 7, 200 random connected graphs per seed (n 8..14), K_n and P_n n <= 10"},
       check_longest_path_bound},
      {{"path-partition-bound", K::inequality, "mp <= 2 rho", true,
        "all connected graphs n <= 7, 100 random connected graphs per seed (n 8..16)"},
       check_path_partition_bound},
      {{"cubic-bound", K::inequality, "mp <= 2(n - 1)/3 for connected cubic graphs with n >= 7", true,
        "cage fixtures and 100 random cubic graphs per seed (n 8..20)"},
       check_cubic_bound},
      {{"cut-vertex-bound", K::inequality, "mp <= n - c, with a maximum mp-set free of cut vertices", true,
        "all connected graphs n <= 7, 100 sparse random graphs and 60 block graphs per seed"},
       check_cut_vertex_bound},
      {{"simplicial-bound", K::inequality, "mp >= s", true,
        "all graphs n <= 7, 150 random connected graphs and 50 block graphs per seed"},
       check_simplicial_bound},
      {{"pendant-growth", K::inequality, "adding a pendant raises mp by 0 or 1, with the growth criterion", true,
        "300 (graph, vertex) samples per seed, n 2..9"},
       check_pendant_growth},
      {{"pendant-simplicial", K::equality, "a pendant at a simplicial vertex leaves mp unchanged", true,
        "150 (graph, simplicial vertex) samples per seed"},
       check_pendant_simplicial},
      {{"mp-set-structure", K::structural,
        "an mp-set induces disjoint cliques whose pairs share a neighbour outside the set", true, "all connected graphs n <= 7, 150 random connected graphs per seed (n 8..14)"},
       check_mp_set_structure},
      {{"triangle-free-bound", K::inequality, "mp <= alpha for connected triangle-free graphs, equality when L <= 3", true,
        "200 random triangle-free graphs, 50 bipartite graphs per seed, cycles, C_n corona K_1, K_r,r"},
       check_triangle_free},
      {{"unicyclic-formula", K::equality, "five-case formula for unicyclic graphs", true,
        "250 random unicyclic graphs per seed (n 3..14), cycles and fixed cases"},
       check_unicyclic},
      {{"corona-formula", K::equality, "mp(G corona H) = n(G) mp(H) and gp(G corona H) = n(G) alpha^omega(H)", true,
        "120 random factor pairs per seed, connected G of order 2..4, any H of order 1..4"},
       check_corona},
      {{"join-formula", K::equality, "mp and gp of joins", true,
        "120 random factor pairs per seed, orders 1..6"},
       check_join},
      {{"bipartite-complement", K::equality,
        "mp of complements of connected bipartite graphs, trees, grids and hypercubes", true, "150 random bipartite graphs, 60 trees per seed, grids 2..5 x 2..5, Q_3..Q_5"},
       check_bipartite_complement},
      {{"split-graphs", K::equality, "mp = phi on connected split graphs and the matching condition for equality", true,
        "220 random connected split graphs per seed, n <= 16"},
       check_split},
      {{"mp-gp-realization", K::realization, "every 2 <= a <= b <= 8 has a graph with mp = a and gp = b", false,
        "realize_mp_gp(a, b) for 2 <= a <= b <= 8, H_r, W(a)"},
       check_mp_gp_realization},
      {{"igp-mp-realization", K::realization, "every admissible (igp, mp) with parameters up to 8 is realised", false,
        "realize_igp_mp(a, b) for a, b <= 8"},
       check_igp_mp_realization},
      {{"rp-constructions", K::realization, "R(a-1, b-a+1) and P(b-2, a-b+2) have (igp, mp) = (a, b) for 2 <= a, b <= 8",
        false, "R and P graphs with parameters up to 8"},
       check_rp_constructions},
      {{"r-graph-diss-gp2", K::equality, "diss(R(a-2, b-a+2)) = a and gp2(R(a-2, b-a+2)) = b for 2 <= a <= b <= 8", false,
        "R(a-2, b-a+2) for 2 <= a <= b <= 8"},
       check_r_graph_diss_gp2},
      {{"hull-realization", K::realization, "G(a, b, l) has h_m = a, mp = b and order b + l + 1 (order <= 14)", false,
        "G(a, b, l) for 2 <= a <= b, order <= 14"},
       check_hull_realization},
      {{"hull-machinery", K::structural,
        "h_m <= mp, minimum hull sets hold every simplicial vertex and are mp-sets, h_m(tree) = leaves", true, "all connected graphs n <= 7, 150 random connected graphs, family instances, 100 trees per seed"},
       check_hull_machinery},
      {{"parameter-chains", K::inequality, "imp <= mp <= gp, imp <= igp <= gp and diss <= gp2", true,
        "150 random connected graphs per seed (n 3..11)"},
       check_parameter_chains},
      {{"reduction", K::equality, "clique reduction: mp(G') = omega(G) + n and matching yes/no answers", true,
        "100 random source graphs per seed (n 1..8), every k"},
       check_reduction},
      {{"graph6-roundtrip", K::structural, "graph6 round-trip on every corpus graph", true,
        "every graph n <= 7, 300 random graphs per seed (n 8..64), family instances, large fixtures"},
       check_graph6_roundtrip},
  };
  return defs;
}

}  // namespace

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::equality:
      return "equality";
    case CheckKind::inequality:
      return "inequality";
    case CheckKind::structural:
      return "structural";
    case CheckKind::realization:
      return "realization";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

const std::vector<CheckInfo>& check_manifest() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

RunReport run_suite(const std::vector<std::string>& selection, const SuiteOptions& opts) {
  const auto& defs = registry();
  std::vector<const CheckDef*> chosen;
  for (const auto& d : defs) {
    if (selection.empty() || std::find(selection.begin(), selection.end(), d.info.id) != selection.end()) chosen.push_back(&d);
  }
  for (const auto& id : selection) {
    if (std::none_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.info.id == id; })) {
      throw DomainError("unknown check id '" + id + "'");
    }
  }
  if (opts.seeds.empty()) throw DomainError("run_suite needs at least one seed");

  auto t0 = Clock::now();
  // Warm the shared corpora before fanning out.
  small_connected();
  small_all();

  std::vector<CheckResult> results(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      const CheckDef& d = *chosen[i];
      CheckResult& r = results[i];
      r.id = d.info.id;
      r.kind = d.info.kind;
      r.description = d.info.description;
      r.corpus = d.info.corpus;
      auto start = Clock::now();
      try {
        const std::size_t rounds = d.info.seeded ? opts.seeds.size() : 1;
        for (std::size_t s = 0; s < rounds; ++s) {
          Ctx ctx(r, opts.seeds[s]);
          d.run(ctx);
        }
        if (r.failure_count > 0) {
          r.status = CheckStatus::fail;
        } else if (r.instances == 0) {
          r.status = CheckStatus::skipped;
        }
      } catch (const CapExceeded& e) {
        r.status = CheckStatus::skipped;
        r.notes.push_back(std::string("cap: ") + e.what());
      } catch (const LimitExceeded& e) {
        r.status = CheckStatus::skipped;
        r.notes.push_back(std::string("limit: ") + e.what());
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        ++r.failure_count;
        r.notes.push_back(std::string("error: ") + e.what());
      }
      r.ms = ms_since(start);
    }
  };
  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(chosen.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunReport report;
  report.version = kVersion;
  report.seeds = opts.seeds;
  report.checks = std::move(results);
  for (const auto& r : report.checks) {
    report.passed += r.status == CheckStatus::pass;
    report.failed += r.status == CheckStatus::fail;
    report.skipped += r.status == CheckStatus::skipped;
  }
  report.wall_ms = ms_since(t0);
  return report;
}

std::string report_json(const RunReport& r, bool include_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : c.failures) {
      failures.push_back({{"graph6", f.graph6}, {"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
    }
    nlohmann::json j{{"id", c.id},
                     {"kind", to_string(c.kind)},
                     {"description", c.description},
                     {"corpus", c.corpus},
                     {"status", to_string(c.status)},
                     {"instances", c.instances},
                     {"skipped_instances", c.skipped_instances},
                     {"failure_count", c.failure_count},
                     {"failures", failures},
                     {"notes", c.notes}};
    if (include_timing) j["ms"] = c.ms;
    checks.push_back(std::move(j));
  }
  nlohmann::json j{{"schema", kReportSchema},
                   {"version", r.version},
                   {"seeds", r.seeds},
                   {"checks", checks},
                   {"totals", {{"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}}}};
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << to_string(c.status) << "  " << c.id << "  (" << c.instances << " instances";
    if (c.failure_count) out << ", " << c.failure_count << " failures";
    out << ")\n";
    for (const auto& f : c.failures) {
      out << "    " << f.instance << ": expected " << f.expected << ", got " << f.actual << "  [" << f.graph6 << "]\n";
    }
    for (const auto& n : c.notes) out << "    note: " << n << "\n";
  }
  out << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n";
  return out.str();
}

}  // namespace monopos
