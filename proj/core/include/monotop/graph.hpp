#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotop/bigint.hpp"
#include "monotop/homology.hpp"
#include "monotop/ideal.hpp"
#include "monotop/polynomial.hpp"
#include "monotop/resolution.hpp"

namespace monotop {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph whose vertices are the variables of a universe.
/// Vertex sets are represented as monomials.
class Graph {
 public:
  /// Rejects loops, repeated edges and out-of-range endpoints.
  Graph(UniversePtr vertices, std::vector<Edge> edges);

  const VariableUniverse& vertices() const { return *vertices_; }
  const UniversePtr& universe_ptr() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_->size(); }
  /// Sorted, each edge with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  Monomial all() const { return vertices_->all(); }
  /// Open neighborhood of one vertex.
  Monomial neighbors(std::size_t v) const { return Monomial{adjacency_.at(v)}; }
  std::size_t degree(std::size_t v) const { return neighbors(v).degree(); }
  bool has_edge(std::size_t u, std::size_t v) const { return neighbors(u).has(v); }

  /// N[S] = S together with every neighbor of S.
  Monomial closed_neighborhood(Monomial s) const;
  bool is_dominating(Monomial s) const { return closed_neighborhood(s) == all(); }
  bool is_independent(Monomial s) const;
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  UniversePtr vertices_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Induced subgraph on V \ S over a universe of the remaining names.
Graph delete_vertices(const Graph& g, Monomial s);
/// Induced subgraph on S over a universe of the names in S.
Graph induced_subgraph(const Graph& g, Monomial s);

/// Generated by x_i x_j over the edges.
MonomialIdeal edge_ideal(const Graph& g);
/// Generated by the products over N[x_i], minimalized.
MonomialIdeal star_ideal(const Graph& g);

inline constexpr std::size_t kDefaultMaxInvariantVertices = 20;
inline constexpr std::size_t kDefaultMaxCoverEdges = 24;

struct GraphInvariants {
  std::size_t domination = 0;              // gamma
  std::size_t independent_domination = 0;  // i
  std::size_t vertex_cover = 0;            // alpha_0
  std::size_t matching = 0;                // beta_1
  /// alpha_1; absent when some vertex is isolated.
  std::optional<std::size_t> edge_cover;
};

/// Exact search. Throws BudgetExceeded above `max_vertices`.
GraphInvariants invariants(const Graph& g, std::size_t max_vertices = kDefaultMaxInvariantVertices);

/// cov_G(t) = sum of t^|S| over edge covers S. Zero when a vertex is isolated.
UnivariatePolynomial edge_cover_polynomial(const Graph& g,
                                           std::size_t max_edges = kDefaultMaxCoverEdges);

/// Sum of (-1)^|S| over dominating sets S.
BigInt dominating_sign_sum(const Graph& g, std::size_t max_vertices = kDefaultMaxCoverEdges);

struct GraphStructure {
  std::size_t components = 0;
  /// kappa + |E| - |V|
  long long h1 = 0;
  bool is_forest = false;
  /// The unique cycle in walking order when h1 == 1.
  std::optional<std::vector<std::size_t>> cycle;
};

GraphStructure structure(const Graph& g);

/// For a graph with one cycle: every tree attached to a cycle vertex v through
/// a non-cycle neighbor, with v included as a leaf.
std::vector<Graph> tree_tentacles(const Graph& g);

/// Leaf-stripping test for forests: repeatedly remove N[a] for a vertex a
/// adjacent to a leaf; true iff an isolated vertex shows up.
bool leaf_stripping_reaches_isolated(const Graph& forest);

// Standard families. Vertices are named by `prefix` followed by 1, 2, ...
Graph path_graph(std::size_t n, const std::string& prefix = "v");
Graph cycle_graph(std::size_t n, const std::string& prefix = "v");
Graph empty_graph(std::size_t n, const std::string& prefix = "v");
/// Vertices of `b` are renamed with a suffix when names clash.
Graph disjoint_union(const Graph& a, const Graph& b);
/// n disjoint triangles.
Graph disjoint_triangles(std::size_t n);
/// n disjoint edges.
Graph disjoint_edges(std::size_t n);
/// Two adjacent centers, each carrying k + 1 leaves.
Graph spider(std::size_t k);

struct FaccoChecks {
  bool conical = false;
  bool contractible = false;
  bool euler_even = false;
  bool cover_at_minus_one_zero = false;
  bool cover_count_even = false;
  bool leaf_stripping = false;
  bool some_vertex_agrees = false;
  bool every_vertex_agrees = false;

  /// All eight statements agree (only meaningful for nonempty forests).
  bool consistent() const;
};

struct ForestReport {
  GraphInvariants invariants;
  Classification edge;
  HomologyProfile edge_homology;
  /// Conical gives zero homology, spherical of depth d gives Z in degree d - 1.
  bool edge_homology_ok = false;
  /// Spherical edge ideal: d = i = gamma.
  bool edge_depth_ok = false;
  Classification star;
  HomologyProfile star_homology;
  /// Spherical, simple, depth = beta_1 = alpha_0 and Z in degree beta_1 - 1.
  bool star_ok = false;
  BigInt euler;
  UnivariatePolynomial cover_polynomial;
  FaccoChecks facco;
  BigInt dominating_sum;
  bool sign_identity_ok = false;
  bool konig_ok = false;
  /// Absent when a vertex is isolated.
  std::optional<bool> gallai_ok;

  bool consistent() const;
};

/// Throws PreconditionError if `forest` has a cycle.
ForestReport forest_report(const Graph& forest, std::size_t max_faces = kDefaultMaxFaces);

enum class UnicyclicCase { Contractible, Sphere, Wedge };
std::string to_string(UnicyclicCase c);

struct UnicyclicReport {
  std::vector<std::size_t> cycle;
  BigInt euler;
  BigInt cover_at_minus_one;
  UnicyclicCase predicted = UnicyclicCase::Contractible;
  HomologyProfile homology;
  bool homology_ok = false;
  /// Present when the graph is a bare cycle.
  std::optional<bool> cycle_table_ok;
  std::vector<bool> tentacles_conical;
  /// Wedge case only with every tentacle conical and cycle length 0 mod 3.
  bool wedge_condition_ok = false;

  bool consistent() const;
};

/// Throws PreconditionError unless h1 == 1.
UnicyclicReport unicyclic_report(const Graph& g, std::size_t max_faces = kDefaultMaxFaces);

struct BoundsReport {
  long long h1 = 0;
  std::size_t vertices = 0;
  HomologySize size;
  bool h_bound_ok = false;
  bool hd_bound_ok = false;

  bool consistent() const { return h_bound_ok && hd_bound_ok; }
};

BoundsReport bounds_check(const Graph& g, std::size_t max_faces = kDefaultMaxFaces);

}  // namespace monotop
