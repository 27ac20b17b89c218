#pragma once

#include <cstdint>

#include "monopos/cliques.hpp"
#include "monopos/graph.hpp"

namespace monopos {

/// Clique instance (g, k) mapped to the position instance (product, k_prime):
/// a copy of g on 0..n-1 joined to K_n on n..2n-1, with k_prime = n + k.
struct ReductionInstance {
  Graph source;
  int k = 0;
  Graph product;
  int k_prime = 0;
};

/// Throws DomainError unless 1 <= k <= n.
ReductionInstance reduce_clique_to_mp(const Graph& g, int k);

inline constexpr int kReductionCap = 10;

struct ReductionReport {
  int n = 0;
  int k = 0;
  int k_prime = 0;
  int omega_source = 0;
  int omega_product = 0;
  int mp_product = 0;
  VertexSet mp_witness;
  bool clique_yes = false;
  bool mp_yes = false;
  /// mp(product) = omega(source) + n.
  bool mp_identity = false;
  /// omega(product) = omega(source) + n.
  bool omega_identity = false;
  bool answers_agree = false;
  bool ok() const { return mp_identity && omega_identity && answers_agree; }
};

/// Solves both sides exactly (mp by the generic solver, not by a join
/// formula). Throws CapExceeded when the source has more than
/// kReductionCap vertices and LimitExceeded when a solver runs out of nodes.
ReductionReport verify_reduction(const ReductionInstance& inst, std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace monopos
