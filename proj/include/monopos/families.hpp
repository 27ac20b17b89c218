#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "monopos/graph.hpp"
#include "monopos/invariants.hpp"

namespace monopos {

enum class Family {
  path,
  cycle,
  complete,
  complete_multipartite,
  star,
  caterpillar,
  random_tree,
  random_block,
  random_unicyclic,
  hypercube,
  grid,
  half_wheel,
  half_wheel_pendant,
  wheel_pendant_W,
  R_graph,
  P_graph,
  G_abl,
  petersen,
  heawood,
  mcgee,
  random_split,
  random_bipartite,
  corona_of,
  join_of,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// A generated graph described symbolically. Text form:
///   family[:p,p,...][:seed=k]
/// with nested specs in braces for corona_of and join_of, e.g.
///   "G_abl:3,5,2", "random_tree:12:seed=4", "corona_of:{cycle:5},{complete:1}".
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
  std::vector<FamilySpec> children;
  std::optional<std::uint64_t> seed;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws DomainError naming the offending part.
FamilySpec parse_family_spec(std::string_view text);

/// Portable generator: std::mt19937_64 (fixed by the standard) with our own
/// bounded draws, so a seed gives the same graph on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Vertex layouts (documented per family):
///   path / cycle      0..n-1 in order
///   star              centre 0, leaves 1..k
///   caterpillar       spine 0..k-1, then the legs of spine vertex 0, 1, ...
///   half_wheel:r      cycle label i at id i-1 (ids 0..2r-1), hub 2r joined to odd ids
///   half_wheel_pendant:b,a   half_wheel:b-a+2, then a-2 pendants on the hub
///   wheel_pendant_W:a 5-cycle 0..4, hub 5, pendants 6..a+3
///   R_graph:r,s       clique 0..s, leaves s+1..s+r on vertex 0
///   P_graph:r,s       sides 0..s-1 and s..2s-1 (i ~ s+j for i != j), apex 2s
///                     joined to 0..s-1, leaves 2s+1..2s+r on the apex
///   G_abl:a,b,l       clique 0..b-1 with X = 0..a-2 and Y = a-1..b-1, path
///                     x_0..x_l at ids b..b+l, x_0 joined to Y
///   corona_of / join_of   first factor's vertices first
struct Generated {
  Graph graph;
  FamilySpec spec;
};

Generated generate(const FamilySpec& spec);
inline Graph generate(std::string_view spec_text) { return generate(parse_family_spec(spec_text)).graph; }

Graph petersen_graph();
Graph heawood_graph();
Graph mcgee_graph();

// -- random families ---------------------------------------------------------

Graph random_tree(int n, Rng& rng);
/// Random tree plus one edge between a random non-adjacent pair (n >= 3).
Graph random_unicyclic(int n, Rng& rng);
/// Tree of cliques: each step glues a clique of random size onto an existing
/// vertex until the order reaches n.
Graph random_block_graph(int n, Rng& rng);
/// Connected split graph with clique 0..c-1 and independent set c..c+i-1,
/// each independent vertex joined to a random non-empty part of the clique.
Graph random_split_graph(int c, int i, Rng& rng);
/// Connected bipartite graph on sides 0..a-1 and a..a+b-1; edges beyond a
/// spanning tree appear with probability percent / 100.
Graph random_bipartite_graph(int a, int b, int percent, Rng& rng);

// -- closed forms ------------------------------------------------------------

struct PredictedValue {
  std::string parameter;
  int value = 0;
  /// Short name of the closed form used ("block-simplicial", ...).
  std::string rule;
  /// Why the rule applies to this instance.
  std::string applicability;
};

/// mp = number of simplicial vertices. Throws DomainError for non-block graphs.
PredictedValue predict_block_graph(const Graph& g);

/// mp = gp = max(largest part, number of parts).
std::vector<PredictedValue> predict_multipartite(std::vector<int> parts);

struct UnicyclicShape {
  std::vector<Vertex> cycle;  // v_0..v_{s-1} in cyclic order
  std::vector<int> heavy;     // R: indices i with deg(v_i) >= 3
  int leaves = 0;
  /// Per index in heavy: T_i is a path graph.
  std::vector<bool> tree_is_path;
  /// T_i is a path with v_i as an end (deg(v_i) = 3), so it holds one leaf.
  std::vector<bool> hangs_as_path;
};

/// Throws DomainError when g is not connected with exactly one cycle.
UnicyclicShape unicyclic_shape(const Graph& g);
/// The r = 2 path case needs the path to end at v_i: a path through v_i
/// carries two leaves and the extra cycle vertex is not gained (C_4 with two
/// leaves on v_0 and a cherry on v_2 has mp = l = 4).
PredictedValue predict_unicyclic(const Graph& g);

/// n(G) * mp(H), with mp(H) from the exact solver. Needs n(G) >= 2: for
/// G = K_1 the vertex of G is no cut vertex and K_1 corona K_4 = K_5 has mp 5.
PredictedValue predict_corona(const Graph& g, const Graph& h);
/// gp(G corona H) = n(G) * alpha^omega(H).
PredictedValue predict_corona_gp(const Graph& g, const Graph& h);
/// mp = max(omega(G) + omega(H), mp(G), mp(H)).
PredictedValue predict_join(const Graph& g, const Graph& h);
/// gp = max(omega(G) + omega(H), alpha^omega(G), alpha^omega(H)).
PredictedValue predict_join_gp(const Graph& g, const Graph& h);

/// mp of the complement of a connected bipartite graph: max(alpha, psi).
PredictedValue predict_bipartite_complement(const Graph& g);
/// Tree shortcut: n when diam <= 2, else alpha(T).
PredictedValue predict_tree_complement(const Graph& t);
/// Complement of the rows x cols vertex grid: 4 for 2 x 2, otherwise
/// ceil(r/2)ceil(c/2) + floor(r/2)floor(c/2).
PredictedValue predict_grid_complement(int rows, int cols);
/// 2^(k-1) for k >= 3.
PredictedValue predict_hypercube_complement(int k);

struct SplitPrediction {
  /// phi, maximised over every split partition of g. With a divided vertex
  /// the partitions give different separated subgraphs and only the best
  /// one matches mp.
  PredictedValue mp;
  int partitions = 0;
  int omega = 0;
  int alpha = 0;
  /// The Hall-saturation condition holds, which predicts mp = max(omega, alpha).
  bool saturation = false;
};

/// Every (clique, independent set) partition of a split graph; empty when g
/// is not split. divided marks a clique vertex moved to the independent side.
std::vector<SplitPartition> all_split_partitions(const Graph& g);

/// Throws DomainError for disconnected or non-split graphs.
SplitPrediction predict_split(const Graph& g);

/// Full predicted tuple for half_wheel, half_wheel_pendant, wheel_pendant_W,
/// R_graph, P_graph, G_abl and the named cages. Throws DomainError outside
/// the families' domains.
/// R(0, s) is K_(s+1), so its mp and gp2 are s + 1 rather than r + s, and
/// P(0, s) has igp = s + 1; those entries are omitted at r = 0.
std::vector<PredictedValue> predict_realization(const FamilySpec& spec);

/// All predictions that apply to a generated instance (possibly none).
std::vector<PredictedValue> predictions_for(const Generated& gen);

/// Generators realising prescribed pairs.
/// (mp, gp) = (a, b) for 2 <= a <= b.
FamilySpec realize_mp_gp(int a, int b);
/// (igp, mp) = (a, b) for 1 = a <= b or 2 <= a, b.
FamilySpec realize_igp_mp(int a, int b);

}  // namespace monopos
