#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

/// All-pairs hop distances by BFS.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  /// kUnreachable when the graph is disconnected.
  int diameter() const;

 private:
  int n_;
  std::vector<int> d_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g);
/// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Articulation points (DFS low-point). Throws DomainError if g is disconnected.
VertexSet cut_vertices(const Graph& g);

/// Vertex sets of the biconnected components (bridges give 2-sets).
std::vector<VertexSet> blocks(const Graph& g);
/// Connected and every block induces a clique.
bool is_block_graph(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);
VertexSet leaves(const Graph& g);

bool is_triangle_free(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// True when every component of G[s] is complete.
bool is_union_of_cliques(const Graph& g, const VertexSet& s);
bool is_tree(const Graph& g);

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  /// Vertices of an odd cycle in cyclic order when parts is empty.
  std::vector<Vertex> odd_cycle;
};

/// BFS 2-colouring; vertex 0 lands in side_a. Throws DomainError if g is
/// disconnected.
BipartitionResult bipartition(const Graph& g);

struct CountWitness {
  int value = 0;
  VertexSet witness;
};

/// Largest uniform set: the union of the largest neighbourhood class on each
/// side. Ties go to the class with the smaller bit pattern.
CountWitness psi_uniform(const Graph& g, const Bipartition& bp);

struct Matching {
  std::vector<Edge> pairs;  // (left vertex, right vertex)
  int size() const { return static_cast<int>(pairs.size()); }
};

/// Hopcroft-Karp on the edges between left and right (edges inside either
/// side are ignored).
Matching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
  std::optional<Vertex> divided;
};

/// Recognises split graphs by the degree-sequence test, extends the clique
/// to a maximum one, then moves a divided vertex (if any) into the
/// independent side.
std::optional<SplitPartition> split_partition(const Graph& g);

struct PhiResult {
  int value = 0;
  VertexSet witness;
  /// Order of the best separated subgraph without C'-I' edges,
  /// |C| + |I| - (maximum C-I matching).
  int deficiency_branch = 0;
  /// Best |N(v) & C| + 1 over v in I (the clique branch).
  int clique_branch = 0;
  int matching_size = 0;
};

/// Largest separated subgraph of a split graph.
PhiResult phi_separated(const Graph& g, const SplitPartition& sp);

/// Pruning-sequence test (pendant vertices and twins). Throws DomainError if
/// g is disconnected.
bool is_distance_hereditary(const Graph& g);

/// Length of a shortest cycle, or 0 for forests.
int girth(const Graph& g);

}  // namespace monopos
