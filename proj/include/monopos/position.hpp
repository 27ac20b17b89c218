#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monopos/cliques.hpp"
#include "monopos/graph.hpp"
#include "monopos/mono_paths.hpp"
#include "monopos/oracles.hpp"

namespace monopos {

enum class PathMode { monophonic, geodesic, geodesic_len2 };

std::string_view to_string(PathMode m);
/// "mono", "geo", "geo2" (and the long names).
PathMode parse_path_mode(std::string_view s);

/// For every pair {x,z}, the vertices y that lie strictly inside a
/// qualifying x,z-path. conflicts(a,b) collects every y for which
/// {a,b,y} is a forbidden triple in any order.
class ForbiddenTripleIndex {
 public:
  ForbiddenTripleIndex() = default;
  ForbiddenTripleIndex(int n, PathMode mode);

  int order() const { return n_; }
  PathMode mode() const { return mode_; }
  const VertexSet& witnesses(Vertex x, Vertex z) const { return witness_[at(x, z)]; }
  const VertexSet& conflicts(Vertex a, Vertex b) const { return conflict_[at(a, b)]; }
  /// Number of forbidden triples (unordered) containing v.
  int witness_degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

  void add_witnesses(Vertex x, Vertex z, const VertexSet& ys);
  void finalize();

 private:
  std::size_t at(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  PathMode mode_ = PathMode::monophonic;
  std::vector<VertexSet> witness_;
  std::vector<VertexSet> conflict_;
  std::vector<int> degree_;
};

inline constexpr int kPositionCap = kMaxVertices;

ForbiddenTripleIndex build_triple_index(const Graph& g, PathMode mode,
                                        std::uint64_t path_budget = kDefaultPathBudget);
ForbiddenTripleIndex build_triple_index(IntervalCache& cache);
/// Index from a precomputed interval table (used by the oracles).
ForbiddenTripleIndex triple_index_from_table(const Graph& g, PathMode mode, const oracle::IntervalTable& t);

struct Triple {
  Vertex x;
  Vertex y;
  Vertex z;
};

struct PositionCheck {
  bool ok = true;
  /// y lies inside a qualifying x,z-path.
  std::optional<Triple> violation;
  explicit operator bool() const { return ok; }
};

PositionCheck is_position_set(const ForbiddenTripleIndex& idx, const VertexSet& s);

enum class Method { closed_form, branch_and_bound, oracle };
std::string_view to_string(Method m);

struct SolverOptions {
  bool require_independent = false;
  std::uint64_t node_limit = kDefaultNodeLimit;
  /// Restrict the search to these vertices.
  std::optional<VertexSet> allowed;
  /// Run the second pass that fixes the witness to the smallest bit pattern.
  bool canonical_witness = true;
};

struct ParameterReport {
  std::string graph_id;
  std::string parameter;
  int value = 0;
  VertexSet witness;
  Method method = Method::branch_and_bound;
  std::uint64_t expansions = 0;
  double ms = 0.0;
  /// Empty on success, else the reason the value is missing ("cap", "limit").
  std::string skipped;
};

/// Largest set in position for idx's mode. The graph is needed only for the
/// independence constraint.
ParameterReport max_position_set(const Graph& g, const ForbiddenTripleIndex& idx, const SolverOptions& opts = {});

/// Convenience: builds the index for mode, then solves.
ParameterReport position_number(const Graph& g, PathMode mode, const SolverOptions& opts = {});

inline constexpr int kBruteForceCap = 12;

/// Subset enumeration over independently computed intervals (induced subsets
/// for the monophonic mode, Floyd-Warshall for the geodesic ones).
ParameterReport brute_force_position(const Graph& g, PathMode mode, const SolverOptions& opts = {});

inline constexpr int kHullCap = 64;

/// Smallest M with [M]_m = V. Throws DomainError when g is disconnected.
ParameterReport hull_number(const Graph& g, int cap = kHullCap);

/// mp, gp, gp2, imp, igp, diss, hm, alpha, omega, alpha_omega, s, L, rho.
/// Parameters beyond their caps come back with skipped = "cap".
std::vector<ParameterReport> parameter_suite(const Graph& g, const std::string& graph_id = "");

/// Canonical parameter name for the CLI ("mp", "gp", "gp2", "imp", "igp",
/// "diss", "hm", "alpha", "omega", "alpha_omega", "s", "L", "rho").
ParameterReport compute_parameter(const Graph& g, std::string_view name, const std::string& graph_id = "");

const std::vector<std::string>& parameter_names();

}  // namespace monopos
