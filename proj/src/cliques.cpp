#include "monopos/cliques.hpp"

#include <algorithm>
#include <numeric>

#include "monopos/errors.hpp"
#include "monopos/subset_search.hpp"

namespace monopos {

namespace {

template <std::size_t W>
struct CliqueModel {
  std::vector<Bits<W>> adj;

  Bits<W> include(const Bits<W>&, const Bits<W>& cand, int v) const { return cand & adj[static_cast<std::size_t>(v)]; }

  // Greedy colouring: each colour class is an independent set, so a clique
  // takes at most one vertex per class.
  int bound(const Bits<W>& cand) const {
    int colours = 0;
    Bits<W> rest = cand;
    while (rest.any()) {
      ++colours;
      Bits<W> q = rest;
      while (q.any()) {
        const int v = q.lowest();
        rest.reset(v);
        q.reset(v);
        q.remove(adj[static_cast<std::size_t>(v)]);
      }
    }
    return colours;
  }
};

// G[chosen + y] stays a disjoint union of cliques iff y's neighbours in the
// new set form exactly one whole component or nothing.
template <std::size_t W>
struct ClusterModel {
  std::vector<Bits<W>> adj;

  Bits<W> include(const Bits<W>& chosen, const Bits<W>& cand, int v) const {
    Bits<W> s = chosen;
    s.set(v);
    Bits<W> bad;
    Bits<W> touched_once;
    Bits<W> touched_twice;
    Bits<W> left = s;
    while (left.any()) {
      const int x = left.lowest();
      const Bits<W> comp = (adj[static_cast<std::size_t>(x)] & s) | Bits<W>::single(x);
      left.remove(comp);
      Bits<W> any_nbr;
      Bits<W> all_nbr = Bits<W>::prefix(Bits<W>::capacity());
      comp.for_each([&](int c) {
        any_nbr |= adj[static_cast<std::size_t>(c)];
        all_nbr &= adj[static_cast<std::size_t>(c)];
      });
      bad |= minus(any_nbr, all_nbr);
      touched_twice |= touched_once & any_nbr;
      touched_once |= any_nbr;
    }
    Bits<W> out = cand;
    out.reset(v);
    out.remove(s);
    out.remove(bad);
    out.remove(touched_twice);
    return out;
  }

  int bound(const Bits<W>& cand) const { return cand.count(); }
};

template <std::size_t W>
struct DissociationModel {
  std::vector<Bits<W>> adj;

  Bits<W> include(const Bits<W>& chosen, const Bits<W>& cand, int v) const {
    Bits<W> s = chosen;
    s.set(v);
    Bits<W> once;
    Bits<W> twice;
    Bits<W> saturated_nbrs;
    s.for_each([&](int x) {
      const auto& nx = adj[static_cast<std::size_t>(x)];
      twice |= once & nx;
      once |= nx;
      if (nx.intersects(s)) saturated_nbrs |= nx;
    });
    Bits<W> out = cand;
    out.remove(s);
    out.remove(twice);
    out.remove(saturated_nbrs);
    return out;
  }

  int bound(const Bits<W>& cand) const { return cand.count(); }
};

std::vector<int> by_degree_desc(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Value by a fast branch-and-bound, then the lexicographically first witness
// at that size.
template <std::size_t W, class Model>
SetResult solve_two_phase(const Graph& g, const Model& model, std::vector<int> fast_order, std::uint64_t limit) {
  const int n = g.order();
  const auto universe = Bits<W>::prefix(n);
  SubsetSearch<W, Model> fast(model, std::move(fast_order), limit);
  fast.maximize(universe);
  const int k = fast.best_size();
  SubsetSearch<W, Model> lex(model, descending_ids(n), limit - fast.expansions());
  auto witness = lex.first_of_size(universe, k);
  if (!witness) throw InternalError("no witness found at the optimal size");
  return {k, VertexSet::from_bits(n, *witness), fast.expansions() + lex.expansions()};
}

}  // namespace

SetResult clique_number(const Graph& g, std::uint64_t node_limit) {
  return with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    CliqueModel<W> model{g.adjacency_bits<W>()};
    return solve_two_phase<W>(g, model, by_degree_desc(g), node_limit);
  });
}

SetResult independence_number(const Graph& g, std::uint64_t node_limit) {
  return clique_number(complement(g), node_limit);
}

SetResult alpha_omega(const Graph& g, int cap) {
  if (g.order() > cap) throw CapExceeded("alpha_omega: order " + std::to_string(g.order()) + " exceeds cap");
  return with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    ClusterModel<W> model{g.adjacency_bits<W>()};
    return solve_two_phase<W>(g, model, by_degree_desc(g), kDefaultNodeLimit);
  });
}

SetResult dissociation_number(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("dissociation_number: order " + std::to_string(g.order()) + " exceeds cap");
  }
  return with_word_count(g.order(), [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    DissociationModel<W> model{g.adjacency_bits<W>()};
    return solve_two_phase<W>(g, model, by_degree_desc(g), kDefaultNodeLimit);
  });
}

}  // namespace monopos
