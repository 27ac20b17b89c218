#include <doctest.h>

#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/position.hpp"
#include "support.hpp"

using namespace monopos;

namespace {

int solve(const Graph& g, const std::string& param) { return compute_parameter(g, param).value; }

void check_predictions(const Generated& gen) {
  for (const auto& p : predictions_for(gen)) {
    INFO(gen.spec.to_string(), " ", p.parameter, " ", p.rule);
    CHECK(solve(gen.graph, p.parameter) == p.value);
  }
}

bool cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("spec text round-trips") {
  for (const char* text : {"path:5", "G_abl:3,5,2", "random_tree:12:seed=4", "petersen",
                           "corona_of:{cycle:5},{complete:1}", "join_of:{random_tree:4:seed=2},{cycle:4}",
                           "complete_multipartite:3,2,2", "caterpillar:0,1,1,1,0"}) {
    CHECK(parse_family_spec(text).to_string() == text);
  }
  auto s = parse_family_spec("corona_of:{cycle:5},{complete:1}");
  CHECK(s.family == Family::corona_of);
  REQUIRE(s.children.size() == 2);
  CHECK(s.children[0].params == std::vector<int>{5});
}

TEST_CASE("bad specs are rejected") {
  for (const char* text : {"", "nope:3", "path:", "path:x", "path:3,", "corona_of:3,4", "path:{cycle:3}",
                           "cycle:5:seed=", "join_of:{cycle:4", "path:3:seed=1:seed=2", "path:3 "}) {
    CHECK_THROWS_AS(parse_family_spec(text), DomainError);
  }
  for (const char* text : {"path:0", "cycle:2", "half_wheel:1", "half_wheel_pendant:6,5", "wheel_pendant_W:2",
                           "R_graph:-1,2", "P_graph:1,1", "G_abl:4,3,1", "G_abl:2,3,0", "petersen:1", "star:1,2",
                           "corona_of:{complete:1}", "corona_of:{complete_multipartite:3},{path:1}"}) {
    CHECK_THROWS_AS(generate(parse_family_spec(text)), DomainError);
  }
  CHECK_THROWS_AS(generate(parse_family_spec("hypercube:10")), DomainError);
  CHECK_THROWS_AS(generate(parse_family_spec("complete:513")), CapExceeded);
}

TEST_CASE("layouts") {
  Graph h4 = generate("half_wheel:4");
  CHECK(h4.order() == 9);
  CHECK(h4.degree(8) == 4);
  CHECK(h4.neighbors(8) == VertexSet(9, {1, 3, 5, 7}));
  CHECK(generate("R_graph:3,2").order() == 6);
  for (int a = 2; a <= 5; ++a) {
    for (int b = a; b <= 6; ++b) {
      for (int l = 1; l <= 3; ++l) {
        Graph g = generate("G_abl:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(l));
        CHECK(g.order() == b + l + 1);
        CHECK(g.neighbors(b).size() == b - a + 2);
      }
    }
  }
  Graph w = generate("wheel_pendant_W:4");
  CHECK(w.order() == 8);
  CHECK(w.degree(5) == 7);
  Graph p = generate("P_graph:2,3");
  CHECK(p.order() == 9);
  CHECK(p.degree(6) == 5);
  CHECK(generate("half_wheel_pendant:7,3").order() == 2 * 6 + 1 + 1);
  CHECK(generate("caterpillar:0,1,1,1,0").order() == 8);
}

TEST_CASE("cages are the named graphs") {
  Graph p = petersen_graph(), h = heawood_graph(), m = mcgee_graph();
  CHECK(p.order() == 10);
  CHECK(h.order() == 14);
  CHECK(m.order() == 24);
  CHECK(cubic(p));
  CHECK(cubic(h));
  CHECK(cubic(m));
  CHECK(girth(p) == 5);
  CHECK(girth(h) == 6);
  CHECK(girth(m) == 7);
}

TEST_CASE("generation is deterministic") {
  for (const char* text : {"random_tree:20:seed=3", "random_block:15:seed=9", "random_unicyclic:12:seed=1",
                           "random_split:14:seed=7", "random_bipartite:5,6,40:seed=2"}) {
    CHECK(emit_graph6(generate(text)) == emit_graph6(generate(text)));
  }
  CHECK(emit_graph6(generate("random_tree:20:seed=3")) != emit_graph6(generate("random_tree:20:seed=4")));
  auto gen = generate(parse_family_spec("random_tree:6"));
  CHECK(gen.spec.seed == std::uint64_t{0});
}

TEST_CASE("random families have their shapes") {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 15;
    CHECK(is_tree(random_tree(n, rng)));
    Graph u = random_unicyclic(n, rng);
    CHECK(is_connected(u));
    CHECK(static_cast<int>(u.size()) == n);
    Graph b = random_block_graph(n, rng);
    CHECK(b.order() == n);
    CHECK(is_connected(b));
    CHECK(is_block_graph(b));
    Graph s = random_split_graph(1 + t % 5, t % 7, rng);
    CHECK(is_connected(s));
    CHECK(split_partition(s).has_value());
    Graph bi = random_bipartite_graph(1 + t % 4, 1 + t % 5, 30, rng);
    CHECK(is_connected(bi));
    CHECK(bipartition(bi).parts.has_value());
  }
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.below(7) == b.below(7));
}

TEST_CASE("block graph and multipartite predictions") {
  CHECK(predict_block_graph(star_graph(5)).value == 5);
  CHECK(predict_block_graph(complete_graph(6)).value == 6);
  CHECK_THROWS_AS(predict_block_graph(cycle_graph(5)), DomainError);
  CHECK(predict_multipartite({3, 2, 2})[0].value == 3);
  CHECK(predict_multipartite({5, 1})[0].value == 5);
  CHECK(predict_multipartite({1, 1, 1})[1].value == 3);
  for (const char* text : {"complete_multipartite:3,2,2", "complete_multipartite:5,1", "complete_multipartite:1,1,1,1",
                           "complete_multipartite:2,2,2,2,2", "caterpillar:0,1,1,1,0", "star:6", "path:9"}) {
    check_predictions(generate(parse_family_spec(text)));
  }
  for (int seed = 0; seed < 30; ++seed) {
    check_predictions(generate(parse_family_spec("random_tree:" + std::to_string(4 + seed % 12) + ":seed=" + std::to_string(seed))));
    check_predictions(generate(parse_family_spec("random_block:" + std::to_string(4 + seed % 12) + ":seed=" + std::to_string(seed))));
  }
}

TEST_CASE("unicyclic formula") {
  CHECK(predict_unicyclic(cycle_graph(3)).value == 3);
  CHECK(predict_unicyclic(cycle_graph(4)).value == 2);
  CHECK(predict_unicyclic(add_pendant(cycle_graph(4), 0)).value == 3);
  Graph c6 = add_pendant(add_pendant(cycle_graph(6), 0), 3);
  CHECK(predict_unicyclic(c6).value == 3);
  CHECK(solve(c6, "mp") == 3);
  CHECK_THROWS_AS(predict_unicyclic(path_graph(4)), DomainError);
  // Two leaves on v_0 form a path through v_0: no extra vertex.
  Graph cherry = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {2, 6}, {6, 7}, {6, 8}});
  CHECK(unicyclic_shape(cherry).tree_is_path[0]);
  CHECK(!unicyclic_shape(cherry).hangs_as_path[0]);
  CHECK(predict_unicyclic(cherry).value == 4);
  CHECK(solve(cherry, "mp") == 4);
  for (int seed = 0; seed < 120; ++seed) {
    check_predictions(generate(parse_family_spec("random_unicyclic:" + std::to_string(4 + seed % 11) + ":seed=" + std::to_string(seed))));
  }
}

TEST_CASE("corona and join") {
  CHECK(predict_corona(cycle_graph(5), complete_graph(1)).value == 5);
  CHECK(predict_corona(cycle_graph(4), complete_graph(1)).value == 4);
  CHECK(predict_corona(path_graph(3), complete_graph(2)).value == 6);
  CHECK_THROWS_AS(predict_corona(complete_graph(1), complete_graph(4)), DomainError);
  check_predictions(generate(parse_family_spec("corona_of:{complete:1},{complete:4}")));
  CHECK(predict_join(cycle_graph(4), cycle_graph(4)).value == 4);
  CHECK(predict_join(complete_graph(3), complete_graph(4)).value == 7);
  check_predictions(generate(parse_family_spec("corona_of:{cycle:5},{complete:1}")));
  check_predictions(generate(parse_family_spec("corona_of:{path:3},{complete:2}")));
  check_predictions(generate(parse_family_spec("join_of:{cycle:4},{cycle:4}")));
  check_predictions(generate(parse_family_spec("join_of:{complete:1},{complete_multipartite:1,1}")));
  for (int seed = 0; seed < 20; ++seed) {
    const std::string s = std::to_string(seed);
    check_predictions(generate(parse_family_spec("corona_of:{random_tree:4:seed=" + s + "},{random_unicyclic:4:seed=" + s + "}")));
    check_predictions(generate(parse_family_spec("join_of:{random_block:5:seed=" + s + "},{random_unicyclic:5:seed=" + s + "}")));
  }
}

TEST_CASE("bipartite complements") {
  Graph q3 = hypercube(3);
  CHECK(predict_bipartite_complement(q3).value == 4);
  CHECK(predict_hypercube_complement(3).value == 4);
  CHECK(solve(complement(q3), "mp") == 4);
  CHECK(predict_tree_complement(star_graph(4)).value == 5);
  CHECK(solve(complement(star_graph(4)), "mp") == 5);
  CHECK(predict_tree_complement(path_graph(6)).value == 3);
  CHECK(solve(complement(path_graph(6)), "mp") == 3);
  CHECK(predict_grid_complement(2, 2).value == 4);
  for (int r = 2; r <= 4; ++r) {
    for (int c = 2; c <= 4; ++c) CHECK(solve(complement(grid_graph(r, c)), "mp") == predict_grid_complement(r, c).value);
  }
  CHECK_THROWS_AS(predict_bipartite_complement(cycle_graph(5)), DomainError);
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_bipartite_graph(2 + t % 5, 2 + t % 4, 35, rng);
    CHECK(solve(complement(g), "mp") == predict_bipartite_complement(g).value);
  }
}

TEST_CASE("split graphs") {
  auto k13 = predict_split(star_graph(3));
  CHECK(k13.mp.value == 3);
  CHECK(k13.alpha == 3);
  Rng rng(13);
  for (int t = 0; t < 80; ++t) {
    Graph g = random_split_graph(1 + t % 6, t % 8, rng);
    auto pred = predict_split(g);
    const int value = solve(g, "mp");
    CHECK(value == pred.mp.value);
    CHECK(pred.saturation == (value == std::max(pred.omega, pred.alpha)));
  }
  CHECK_THROWS_AS(predict_split(cycle_graph(5)), DomainError);
  // K4 on 0..3 with 4, 5 pendant at 0 and 6 joined to 0, 1, 3. Vertex 2 is
  // divided; only the partition keeping it in the clique reaches mp = 5.
  Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 6}, {2, 3}, {3, 6}});
  CHECK(solve(g, "mp") == 5);
  CHECK(predict_split(g).mp.value == 5);
  CHECK(predict_split(g).partitions >= 2);
}

TEST_CASE("split partitions match exhaustive enumeration") {
  using namespace testsupport;
  Rng rng(14);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_split_graph(1 + t % 6, t % 7, rng);
    const int n = g.order();
    auto adj = masks_of(g);
    int count = 0, best = 0;
    for (Mask c = 0; c < (Mask{1} << n); ++c) {
      const Mask i = ((Mask{1} << n) - 1) & ~c;
      bool ok = true;
      for (Mask r = c; r; r &= r - 1) {
        const int x = std::countr_zero(r);
        if (((adj[static_cast<std::size_t>(x)] | (Mask{1} << x)) & c) != c) ok = false;
      }
      for (Mask r = i; r; r &= r - 1) {
        if (adj[static_cast<std::size_t>(std::countr_zero(r))] & i) ok = false;
      }
      if (!ok) continue;
      ++count;
      best = std::max(best, brute_phi(g, to_set(n, c), to_set(n, i)));
    }
    CHECK(static_cast<int>(all_split_partitions(g).size()) == count);
    CHECK(predict_split(g).mp.value == best);
  }
}

TEST_CASE("realization families") {
  for (const char* text : {"half_wheel:4", "half_wheel:6", "half_wheel_pendant:7,3", "half_wheel_pendant:8,4",
                           "wheel_pendant_W:3", "wheel_pendant_W:5", "R_graph:2,3", "R_graph:3,1", "P_graph:1,3",
                           "P_graph:0,2", "G_abl:3,5,2", "G_abl:2,2,3", "petersen", "heawood", "mcgee"}) {
    check_predictions(generate(parse_family_spec(text)));
  }
  CHECK_THROWS_AS(predict_realization(parse_family_spec("half_wheel:3")), DomainError);
  CHECK_THROWS_AS(predict_realization(parse_family_spec("cycle:5")), DomainError);
}

TEST_CASE("prescribed pairs") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = a; b <= 7; ++b) {
      Graph g = generate(realize_mp_gp(a, b)).graph;
      INFO(a, " ", b);
      CHECK(solve(g, "mp") == a);
      CHECK(solve(g, "gp") == b);
    }
  }
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      if (a >= 2 && b < 2) continue;
      Graph g = generate(realize_igp_mp(a, b)).graph;
      INFO(a, " ", b);
      CHECK(solve(g, "igp") == a);
      CHECK(solve(g, "mp") == b);
    }
  }
  CHECK(solve(generate("P_graph:0,4"), "igp") == 5);
  CHECK(realize_igp_mp(3, 2).to_string() == "cycle:6");
  CHECK(solve(generate("R_graph:0,4"), "mp") == 5);
  CHECK_THROWS_AS(realize_mp_gp(3, 2), DomainError);
  CHECK_THROWS_AS(realize_igp_mp(2, 1), DomainError);
}
