#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw bit masks and dense matrices and share no code with the library
// algorithms they check.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "monotop/bigint.hpp"
#include "monotop/graph.hpp"
#include "monotop/ideal.hpp"

namespace monotop::oracle {

using Mask = std::uint64_t;
using DenseMatrix = std::vector<std::vector<BigInt>>;

/// Square-free monomials in n variables divisible by no generator.
std::set<Mask> faces(const std::vector<Mask>& generators, std::size_t n);
std::set<Mask> faces(const MonomialIdeal& ideal);

/// Minimal square-free m with m * x in I (squares included), by enumeration.
std::set<Mask> colon_generators(const MonomialIdeal& ideal, Mask x);

/// { m : m in D, m coprime to x, m * x in D }
std::set<Mask> link(const std::set<Mask>& complex, Mask x);

/// Determinant by cofactor expansion.
BigInt determinant(const DenseMatrix& m);
/// Invariant factors d_k = D_k / D_{k-1} from gcds of all k x k minors.
std::vector<BigInt> invariant_factors_by_minors(const DenseMatrix& m);
/// Textbook Smith reduction: pivot on the first nonzero entry, clear its row
/// and column with division with remainder, repeat.
std::vector<BigInt> invariant_factors_by_reduction(DenseMatrix m);

struct Group {
  int degree;
  std::size_t rank;
  std::vector<BigInt> torsion;
  bool operator==(const Group&) const = default;
};

/// Reduced homology by building dense boundary matrices and reducing them.
/// Only nonzero groups are listed.
std::vector<Group> homology(const std::set<Mask>& complex);

/// All free pairs (tau, sigma): sigma maximal, tau a codimension-one face of
/// sigma contained in no other face.
std::set<std::pair<Mask, Mask>> free_pairs(const std::set<Mask>& complex);

/// Replays a collapse sequence with the definition; returns the final complex
/// or nothing at the first invalid step.
std::optional<std::set<Mask>> replay(std::set<Mask> complex,
                                     const std::vector<std::pair<Mask, Mask>>& steps);

struct Invariants {
  std::size_t gamma, i, alpha0, beta1;
  std::optional<std::size_t> alpha1;
};

/// Subset enumeration over vertices and edges.
Invariants invariants(const Graph& g);
std::vector<Mask> dominating_sets(const Graph& g);

}  // namespace monotop::oracle
