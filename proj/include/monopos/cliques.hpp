#pragma once

#include <cstdint>

#include "monopos/graph.hpp"

namespace monopos {

/// Optimum of a maximisation over vertex sets. The witness is the optimal set
/// with the smallest bit pattern.
struct SetResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t expansions = 0;
};

inline constexpr int kOracleCap = 20;
inline constexpr std::uint64_t kDefaultNodeLimit = 500'000'000;

/// Maximum clique by branch and bound with a greedy-colouring bound.
SetResult clique_number(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);

/// Maximum independent set as a maximum clique of the complement.
SetResult independence_number(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);

/// Largest S with G[S] a disjoint union of cliques. Throws CapExceeded above cap.
SetResult alpha_omega(const Graph& g, int cap = kOracleCap);

/// Largest S with G[S] of maximum degree at most one. Throws CapExceeded above cap.
SetResult dissociation_number(const Graph& g, int cap = kOracleCap);

}  // namespace monopos
