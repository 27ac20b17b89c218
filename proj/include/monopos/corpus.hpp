#pragma once

#include <cstdint>
#include <vector>

#include "monopos/families.hpp"
#include "monopos/graph.hpp"

namespace monopos {

inline constexpr int kExhaustiveCap = 8;

/// Canonical code of a graph of order <= 8: the smallest upper-triangle
/// adjacency word over relabellings that keep vertices sorted by a degree
/// invariant.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// One graph per isomorphism class of order n (sorted by canonical code),
/// built by vertex augmentation with canonical deduplication.
std::vector<Graph> all_graphs(int n, bool connected_only = false);

/// Random spanning tree plus each remaining pair with probability percent / 100.
Graph random_connected_graph(int n, int percent, Rng& rng);
/// Pendant, true-twin and false-twin extensions from K_1.
Graph random_distance_hereditary(int n, Rng& rng);
/// Connected cubic graph from the pairing model (n even, n >= 4).
Graph random_cubic_graph(int n, Rng& rng);
/// Connected triangle-free graph: random tree, then random pairs added when
/// they close no triangle.
Graph random_triangle_free(int n, int extra_edges, Rng& rng);

}  // namespace monopos
