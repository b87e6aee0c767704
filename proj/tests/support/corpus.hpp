#pragma once

#include <cstdint>
#include <vector>

#include "monotop/graph.hpp"
#include "monotop/ideal.hpp"
#include "rng.hpp"

namespace monotop::testing {

/// n in [min_vars, max_vars], |B| in [0, max_gens], generators of degree 1..3
/// mostly, occasionally 1 (the unit ideal).
MonomialIdeal random_ideal(Rng& rng, std::size_t min_vars, std::size_t max_vars,
                           std::size_t max_gens);

/// Random graph on n in [1, max_vertices] vertices with a random edge density.
Graph random_graph(Rng& rng, std::size_t max_vertices);

/// Random recursive forest on n in [1, max_vertices] vertices; each vertex
/// after the first attaches to an earlier one with probability 4/5. Vertex
/// labels are shuffled.
Graph random_forest(Rng& rng, std::size_t max_vertices);

/// Every tree on 1..max_vertices vertices up to isomorphism.
std::vector<Graph> unlabeled_trees(std::size_t max_vertices);

/// Forest corpus shared by the forest criteria: all trees on at most 9
/// vertices followed by 300 random forests on at most 14 vertices (seed 0).
std::vector<Graph> forest_corpus(std::uint64_t seed = 0);

}  // namespace monotop::testing
