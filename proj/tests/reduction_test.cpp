#include <doctest.h>

#include <random>

#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/reduction.hpp"
#include "support.hpp"

using namespace monopos;
using namespace testsupport;

TEST_CASE("product layout") {
  auto inst = reduce_clique_to_mp(cycle_graph(5), 3);
  CHECK(inst.product.order() == 10);
  CHECK(inst.k_prime == 8);
  CHECK(inst.product.size() == 5 + 10 + 25);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 5; v < 10; ++v) CHECK(inst.product.adjacent(u, v));
  }
  CHECK(inst.product.induced(VertexSet(10, {0, 1, 2, 3, 4})) == cycle_graph(5));
  CHECK_THROWS_AS(reduce_clique_to_mp(cycle_graph(5), 0), DomainError);
  CHECK_THROWS_AS(reduce_clique_to_mp(cycle_graph(5), 6), DomainError);
}

TEST_CASE("worked instances") {
  auto k3 = verify_reduction(reduce_clique_to_mp(complete_graph(3), 3));
  CHECK(k3.mp_product == 6);
  CHECK(k3.mp_yes);
  CHECK(k3.ok());
  auto c5 = verify_reduction(reduce_clique_to_mp(cycle_graph(5), 3));
  CHECK(c5.mp_product == 7);
  CHECK(!c5.mp_yes);
  CHECK(!c5.clique_yes);
  CHECK(c5.ok());
  auto p2 = verify_reduction(reduce_clique_to_mp(petersen_graph(), 2));
  CHECK(p2.clique_yes);
  CHECK(p2.mp_yes);
  auto p3 = verify_reduction(reduce_clique_to_mp(petersen_graph(), 3));
  CHECK(!p3.clique_yes);
  CHECK(!p3.mp_yes);
  CHECK_THROWS_AS(verify_reduction(reduce_clique_to_mp(cycle_graph(11), 2)), CapExceeded);
}

TEST_CASE("random sources") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 8;
    Graph g = random_graph(n, 0.45, rng);
    for (int k = 1; k <= n; ++k) {
      auto r = verify_reduction(reduce_clique_to_mp(g, k));
      CHECK(r.omega_source == brute_clique(g));
      CHECK(r.ok());
    }
  }
}
