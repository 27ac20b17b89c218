#include <doctest.h>

#include <random>

#include "monopos/cliques.hpp"
#include "monopos/errors.hpp"
#include "monopos/graph.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/invariants.hpp"
#include "support.hpp"

using namespace monopos;
using namespace testsupport;

namespace {

Graph petersen() {
  // Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram.
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

}  // namespace

TEST_CASE("builder rejects loops and out-of-range endpoints") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(b.add_edge(0, 3), DomainError);
  CHECK_THROWS_AS(GraphBuilder(kMaxVertices + 1), CapExceeded);
  b.add_edge(0, 1).add_edge(1, 0);
  CHECK(b.build().size() == 1);
}

TEST_CASE("graph6 small tokens") {
  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);
  CHECK(emit_graph6(k1) == "@");

  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(emit_graph6(g) == "D?{");
  CHECK(emit_graph6(parse_graph6("DQc\n")) == "DQc");
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  CHECK(emit_graph6(path_graph(2)) == "A_");
}

TEST_CASE("graph6 errors name the byte offset") {
  try {
    parse_graph6("D?");
    FAIL("truncated input accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("D?\x20");
    FAIL("out-of-range byte accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // padding bit set
  CHECK_THROWS_AS(parse_graph6("@x"), ParseError);  // trailing byte
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round-trips random graphs, including the long header") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(1, 70);
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_graph(order(rng), 0.3, rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  Graph big = cycle_graph(200);
  std::string s = emit_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);
}

TEST_CASE("edge list text") {
  Graph g = parse_edge_list("# a path\n3 2\n0 1\n1 2\n");
  CHECK(g == path_graph(3));
  CHECK(parse_edge_list(emit_edge_list(petersen())) == petersen());
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), Error);
}

TEST_CASE("constructions") {
  CHECK(complement(complete_graph(5)).size() == 0);
  Graph c4c = complement(cycle_graph(4));
  CHECK(c4c.size() == 2);
  CHECK(components(c4c).size() == 2);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(8, 0.4, rng);
    CHECK(complement(complement(g)) == g);
  }

  CHECK(join(complete_graph(1), empty_graph(4)) == star_graph(4));
  CHECK(join(complete_graph(2), complete_graph(3)) == complete_graph(5));

  Graph c5k1 = corona(cycle_graph(5), complete_graph(1));
  CHECK(c5k1.order() == 10);
  CHECK(c5k1.size() == 10);
  CHECK(leaves(c5k1).size() == 5);
  Graph h = cycle_graph(4);
  CHECK(corona(complete_graph(1), h) == join(complete_graph(1), h));
  CHECK(corona(cycle_graph(3), path_graph(3)).order() == 3 * 4);
  CHECK_THROWS_AS(corona(empty_graph(2), complete_graph(1)), DomainError);

  Graph sq = cartesian_product(path_graph(2), path_graph(2));
  CHECK(sq.order() == 4);
  CHECK(sq.size() == 4);
  CHECK(simplicial_vertices(sq).empty());
  CHECK(cartesian_product(hypercube(2), path_graph(2)) == hypercube(3));
  Graph a = random_graph(5, 0.5, rng), b2 = random_graph(4, 0.5, rng);
  CHECK(cartesian_product(a, b2).size() == a.order() * b2.size() + b2.order() * a.size());

  Graph p5 = add_pendant(path_graph(4), 3);
  CHECK(p5 == path_graph(5));
  CHECK(p5.degree(4) == 1);
  CHECK_THROWS_AS(add_pendant(path_graph(3), 3), DomainError);
}

TEST_CASE("join adds clique numbers") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(5, 0.5, rng), h = random_graph(6, 0.5, rng);
    CHECK(clique_number(join(g, h)).value == brute_clique(g) + brute_clique(h));
  }
}

TEST_CASE("distances") {
  DistanceMatrix d6(cycle_graph(6));
  CHECK(d6(0, 3) == 3);
  DistanceMatrix dk(complete_graph(5));
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) CHECK(dk(u, v) == (u == v ? 0 : 1));
  }
  CHECK(distance_matrix(petersen()).diameter() == 2);
  CHECK(distance_matrix(empty_graph(2)).diameter() == DistanceMatrix::kUnreachable);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(path_graph(5)) == 0);
}

TEST_CASE("cut vertices and blocks") {
  CHECK(cut_vertices(path_graph(5)) == VertexSet(5, {1, 2, 3}));
  CHECK(cut_vertices(cycle_graph(6)).empty());
  CHECK(cut_vertices(star_graph(3)) == VertexSet(4, {0}));
  CHECK_THROWS_AS(cut_vertices(empty_graph(3)), DomainError);
  CHECK(blocks(path_graph(4)).size() == 3);
  CHECK(is_block_graph(star_graph(4)));
  CHECK(!is_block_graph(cycle_graph(4)));
  // Two triangles sharing a vertex.
  Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(is_block_graph(bowtie));
  CHECK(cut_vertices(bowtie) == VertexSet(5, {2}));
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(path_graph(6)).size() == 2);
  CHECK(simplicial_vertices(complete_graph(5)).size() == 5);
  for (int n = 4; n < 9; ++n) CHECK(simplicial_vertices(cycle_graph(n)).empty());
}

TEST_CASE("clique and independence numbers against subset enumeration") {
  CHECK(clique_number(petersen()).value == 2);
  CHECK(clique_number(complete_bipartite(3, 3)).value == 2);
  CHECK(independence_number(cycle_graph(5)).value == 2);
  CHECK(independence_number(complete_graph(6)).value == 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(10, 0.5, rng);
    auto w = clique_number(g);
    auto a = independence_number(g);
    CHECK(w.value == brute_clique(g));
    CHECK(a.value == brute_independent(g));
    CHECK(a.value == clique_number(complement(g)).value);
    CHECK(is_clique(g, w.witness));
    CHECK(is_independent(g, a.witness));
    CHECK(w.witness.size() == w.value);
  }
}

TEST_CASE("witness is the smallest bit pattern among optima") {
  // C6 has maximum independent sets {0,2,4} and {1,3,5}.
  CHECK(independence_number(cycle_graph(6)).witness == VertexSet(6, {0, 2, 4}));
  // Any edge is a maximum clique of a cycle; {0,1} is smallest.
  CHECK(clique_number(cycle_graph(7)).witness == VertexSet(7, {0, 1}));
}

TEST_CASE("grid independence numbers") {
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= 5; ++c) {
      int expect = ((r + 1) / 2) * ((c + 1) / 2) + (r / 2) * (c / 2);
      CHECK(independence_number(grid_graph(r, c)).value == expect);
    }
  }
}

TEST_CASE("alpha_omega and dissociation") {
  CHECK(alpha_omega(complete_graph(6)).value == 6);
  // {0,1,3} induces K2 + K1.
  CHECK(alpha_omega(cycle_graph(5)).value == 3);
  CHECK(dissociation_number(complete_graph(5)).value == 2);
  CHECK(dissociation_number(path_graph(5)).value == brute_dissociation(path_graph(5)));
  CHECK_THROWS_AS(alpha_omega(cycle_graph(21)), CapExceeded);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(9, 0.4, rng);
    auto ao = alpha_omega(g);
    CHECK(ao.value == brute_alpha_omega(g));
    CHECK(is_union_of_cliques(g, ao.witness));
    CHECK(ao.value >= std::max(brute_clique(g), brute_independent(g)));
    CHECK(dissociation_number(g).value == brute_dissociation(g));
  }
}

TEST_CASE("bipartition") {
  auto c6 = bipartition(cycle_graph(6));
  REQUIRE(c6.parts);
  CHECK(c6.parts->side_a == VertexSet(6, {0, 2, 4}));
  CHECK(c6.parts->side_b == VertexSet(6, {1, 3, 5}));
  auto c5 = bipartition(cycle_graph(5));
  CHECK(!c5.parts);
  REQUIRE(c5.odd_cycle.size() % 2 == 1);
  for (std::size_t i = 0; i < c5.odd_cycle.size(); ++i) {
    CHECK(cycle_graph(5).adjacent(c5.odd_cycle[i], c5.odd_cycle[(i + 1) % c5.odd_cycle.size()]));
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_connected(12, 0.15, rng);
    auto r = bipartition(g);
    if (!r.parts) {
      CHECK(r.odd_cycle.size() % 2 == 1);
      for (std::size_t j = 0; j < r.odd_cycle.size(); ++j) {
        CHECK(g.adjacent(r.odd_cycle[j], r.odd_cycle[(j + 1) % r.odd_cycle.size()]));
      }
    } else {
      CHECK(is_independent(g, r.parts->side_a));
      CHECK(is_independent(g, r.parts->side_b));
    }
  }
  CHECK_THROWS_AS(bipartition(empty_graph(2)), DomainError);
}

TEST_CASE("uniform sets") {
  auto c4 = bipartition(cycle_graph(4));
  CHECK(psi_uniform(cycle_graph(4), *c4.parts).value == 4);
  auto k = complete_bipartite(3, 5);
  CHECK(psi_uniform(k, *bipartition(k).parts).value == 8);
  // Paths have no twins once they have at least five vertices.
  for (int n = 5; n < 10; ++n) {
    Graph p = path_graph(n);
    CHECK(psi_uniform(p, *bipartition(p).parts).value == 2);
  }
  // Brute force: a uniform set is one neighbourhood class per side.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(9, 0.1, rng);
    auto bp = bipartition(g);
    if (!bp.parts) continue;
    auto adj = masks_of(g);
    int best = 0;
    for (const auto& side : {bp.parts->side_a, bp.parts->side_b}) {
      int side_best = 0;
      for (Mask m = 1; m < (Mask{1} << g.order()); ++m) {
        if (!to_set(g.order(), m).subset_of(side)) continue;
        Mask first = adj[static_cast<std::size_t>(std::countr_zero(m))];
        bool uniform = true;
        for (Mask r = m; r; r &= r - 1) uniform &= adj[static_cast<std::size_t>(std::countr_zero(r))] == first;
        if (uniform) side_best = std::max(side_best, std::popcount(m));
      }
      best += side_best;
    }
    auto psi = psi_uniform(g, *bp.parts);
    CHECK(psi.value == best);
    CHECK(psi.witness.size() == psi.value);
  }
}

TEST_CASE("Hopcroft-Karp") {
  Graph k23 = complete_bipartite(2, 3);
  CHECK(max_bipartite_matching(k23, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})).size() == 2);
  for (int k = 2; k <= 8; ++k) {
    Graph c = cycle_graph(2 * k);
    auto bp = bipartition(c);
    CHECK(max_bipartite_matching(c, bp.parts->side_a, bp.parts->side_b).size() == k);
  }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 80; ++i) {
    Graph g = random_graph(10, 0.3, rng);
    VertexSet left(10), right(10);
    for (int v = 0; v < 10; ++v) (v % 3 == 0 ? left : right).insert(v);
    auto m = max_bipartite_matching(g, left, right);
    CHECK(m.size() == brute_matching(g, left, right));
    VertexSet used(10);
    for (auto [a, b] : m.pairs) {
      CHECK(g.adjacent(a, b));
      CHECK(left.contains(a));
      CHECK(right.contains(b));
      CHECK(!used.contains(a));
      CHECK(!used.contains(b));
      used.insert(a);
      used.insert(b);
    }
  }
}

TEST_CASE("Konig: matching size plus independence number equals order on bipartite graphs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_connected(10, 0.2, rng);
    auto bp = bipartition(g);
    if (!bp.parts) continue;
    auto m = max_bipartite_matching(g, bp.parts->side_a, bp.parts->side_b);
    CHECK(m.size() + brute_independent(g) == g.order());
  }
}

TEST_CASE("split partitions") {
  auto star = split_partition(star_graph(3));
  REQUIRE(star);
  CHECK(star->clique == VertexSet(4, {0}));
  CHECK(star->independent == VertexSet(4, {1, 2, 3}));
  CHECK(!split_partition(cycle_graph(4)));
  CHECK(!split_partition(cycle_graph(5)));

  // Threshold graphs: add isolated or dominating vertices one at a time.
  std::mt19937_64 rng(12);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 10;
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
      if (coin(rng)) {
        for (int u = 0; u < v; ++u) b.add_edge(u, v);
      }
    }
    Graph g = b.build();
    auto sp = split_partition(g);
    REQUIRE(sp);
    CHECK(is_clique(g, sp->clique));
    CHECK(is_independent(g, sp->independent));
    CHECK((sp->clique | sp->independent) == g.vertices());
    CHECK(!sp->clique.intersects(sp->independent));
    const int omega = brute_clique(g);
    if (sp->divided) {
      CHECK(sp->independent.contains(*sp->divided));
      CHECK(omega == sp->clique.size() + 1);
    } else {
      CHECK(omega == sp->clique.size());
      CHECK(brute_independent(g) == sp->independent.size());
    }
  }
}

TEST_CASE("separated subgraphs") {
  Graph star = star_graph(3);
  auto sp = split_partition(star);
  CHECK(phi_separated(star, *sp).value == 3);
  CHECK(brute_phi(star, sp->clique, sp->independent) == 3);

  // Complete split graphs K_c joined with an independent I.
  for (int c = 1; c <= 5; ++c) {
    for (int i = 1; i <= 5; ++i) {
      Graph g = join(complete_graph(c), empty_graph(i));
      auto p = split_partition(g);
      REQUIRE(p);
      const int phi = phi_separated(g, *p).value;
      CHECK(phi == brute_phi(g, p->clique, p->independent));
      CHECK(phi == std::max(i, c + 1));
    }
  }

  std::mt19937_64 rng(13);
  std::bernoulli_distribution coin(0.4);
  for (int t = 0; t < 150; ++t) {
    const int c = 1 + t % 5, i = 1 + (t / 5) % 6;
    GraphBuilder b(c + i);
    for (int x = 0; x < c; ++x) {
      for (int y = x + 1; y < c; ++y) b.add_edge(x, y);
    }
    for (int y = c; y < c + i; ++y) {
      for (int x = 0; x < c; ++x) {
        if (coin(rng)) b.add_edge(x, y);
      }
    }
    Graph g = b.build();
    auto p = split_partition(g);
    REQUIRE(p);
    auto phi = phi_separated(g, *p);
    CHECK(phi.value == brute_phi(g, p->clique, p->independent));
    CHECK(phi.witness.size() == phi.value);
    CHECK(phi.value >= std::max(brute_clique(g), brute_independent(g)));
  }
}

TEST_CASE("distance-hereditary recognition against the definition") {
  CHECK(is_distance_hereditary(cycle_graph(4)));
  CHECK(!is_distance_hereditary(cycle_graph(5)));
  CHECK(is_distance_hereditary(path_graph(7)));
  CHECK(!is_distance_hereditary(petersen()));
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 6;
    Graph g = random_connected(n, 0.15 + 0.1 * (t % 4), rng);
    CHECK(is_distance_hereditary(g) == brute_distance_hereditary(g));
  }
  CHECK_THROWS_AS(is_distance_hereditary(empty_graph(2)), DomainError);
}
