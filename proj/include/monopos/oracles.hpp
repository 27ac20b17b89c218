#pragma once

#include <vector>

#include "monopos/graph.hpp"

namespace monopos::oracle {

inline constexpr int kSubsetIntervalCap = 16;
inline constexpr int kSimplePathCap = 9;

/// Interval table indexed [u * n + v], u != v.
using IntervalTable = std::vector<VertexSet>;

/// K[u,v] from every vertex subset that induces a path; {u,v} for pairs in
/// different components.
IntervalTable intervals_by_induced_subsets(const Graph& g);

/// K[u,v] from every simple u,v-path that has no chord.
IntervalTable intervals_by_simple_paths(const Graph& g);

/// Geodesic intervals from Floyd-Warshall distances.
IntervalTable geodesic_intervals(const Graph& g);

/// Floyd-Warshall distances, -1 for unreachable pairs.
std::vector<int> floyd_warshall(const Graph& g);

}  // namespace monopos::oracle
