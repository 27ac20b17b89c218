#include "monopos/reduction.hpp"

#include <string>

#include "monopos/errors.hpp"
#include "monopos/position.hpp"

namespace monopos {

ReductionInstance reduce_clique_to_mp(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw DomainError("reduce: k must lie in 1.." + std::to_string(n) + ", got " + std::to_string(k));
  if (2 * n > kMaxVertices) throw CapExceeded("reduce: product order " + std::to_string(2 * n) + " exceeds " + std::to_string(kMaxVertices));
  return {g, k, join(g, complete_graph(n)), n + k};
}

ReductionReport verify_reduction(const ReductionInstance& inst, std::uint64_t node_limit) {
  const int n = inst.source.order();
  if (n > kReductionCap) {
    throw CapExceeded("verify_reduction: source order " + std::to_string(n) + " exceeds " + std::to_string(kReductionCap));
  }
  ReductionReport r;
  r.n = n;
  r.k = inst.k;
  r.k_prime = inst.k_prime;
  r.omega_source = clique_number(inst.source, node_limit).value;
  r.omega_product = clique_number(inst.product, node_limit).value;
  SolverOptions opts;
  opts.node_limit = node_limit;
  auto mp = position_number(inst.product, PathMode::monophonic, opts);
  r.mp_product = mp.value;
  r.mp_witness = mp.witness;
  r.clique_yes = r.omega_source >= inst.k;
  r.mp_yes = r.mp_product >= inst.k_prime;
  r.mp_identity = r.mp_product == r.omega_source + n;
  r.omega_identity = r.omega_product == r.omega_source + n;
  r.answers_agree = r.clique_yes == r.mp_yes;
  return r;
}

}  // namespace monopos
