#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

inline constexpr std::uint64_t kDefaultPathBudget = 10'000'000;
inline constexpr int kLongestPathCap = 30;
inline constexpr int kPathPartitionCap = 16;

enum class PathQueryMode { collect_all, early_exit, count_only };

struct InducedPathQuery {
  Vertex u = 0;
  Vertex v = 0;
  PathQueryMode mode = PathQueryMode::collect_all;
  /// The vertex w of early_exit mode.
  Vertex target = -1;
  std::uint64_t budget = kDefaultPathBudget;
};

struct InducedPathResult {
  /// Set when the budget ran out; the other fields are then incomplete.
  bool truncated = false;
  /// Paths reported. Exact in count_only mode; collect_all and early_exit
  /// skip branches that cannot change their answer.
  std::uint64_t count = 0;
  VertexSet vertices;
  bool hit = false;
  std::uint64_t expansions = 0;
};

using PathCallback = std::function<void(std::span<const Vertex>)>;

/// Depth-first search over induced u,v-paths, neighbours in ascending order.
/// The callback (if any) sees every completed path in count_only mode.
InducedPathResult enumerate_induced_paths(const Graph& g, const InducedPathQuery& q,
                                          const PathCallback& on_path = {});

/// Memoised monophonic intervals of one graph. Safe for concurrent use.
class IntervalCache {
 public:
  explicit IntervalCache(const Graph& g, std::uint64_t budget = kDefaultPathBudget);

  const Graph& graph() const { return g_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// K[u,v]; throws LimitExceeded when the pair's search exceeds the budget.
  VertexSet get(Vertex u, Vertex v);
  void compute_all();

 private:
  std::size_t slot(Vertex u, Vertex v) const;

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t fingerprint_;
  std::mutex mu_;
  std::vector<VertexSet> table_;
  std::vector<char> ready_;
};

std::uint64_t graph_fingerprint(const Graph& g);

/// All vertices on induced u,v-paths; {u,v} when u and v lie in different
/// components. Requires u != v.
VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v);
VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v, IntervalCache& cache);

/// M together with K[x,y] for every pair x, y of M.
VertexSet monophonic_closure(const Graph& g, const VertexSet& m);
VertexSet monophonic_closure(IntervalCache& cache, const VertexSet& m);

struct HullResult {
  VertexSet hull;
  /// Number of closure steps that grew the set.
  int iterations = 0;
};

HullResult monophonic_hull(const Graph& g, const VertexSet& m);
HullResult monophonic_hull(IntervalCache& cache, const VertexSet& m);

/// Members u of M with u in K[M - u].
VertexSet interior_vertices(const Graph& g, const VertexSet& m);

struct LongestPath {
  int length = 0;
  std::vector<Vertex> path;
};

/// Longest induced path, length counted in edges.
LongestPath longest_induced_path(const Graph& g, int cap = kLongestPathCap);
inline int longest_induced_path_length(const Graph& g, int cap = kLongestPathCap) {
  return longest_induced_path(g, cap).length;
}

struct PathPartition {
  int value = 0;
  std::vector<VertexSet> parts;
};

/// Fewest vertex-disjoint induced paths covering V.
PathPartition induced_path_partition(const Graph& g, int cap = kPathPartitionCap);

}  // namespace monopos
