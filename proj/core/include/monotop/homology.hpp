#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "monotop/bigint.hpp"
#include "monotop/complex.hpp"
#include "monotop/smith.hpp"

namespace monotop {

/// Integer chain on faces of one common degree. `dimension` is the face
/// degree minus one, so the empty face lives in dimension -1.
class Chain {
 public:
  explicit Chain(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  const std::map<Monomial, BigInt, GradedLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(Monomial face) const;

  /// Throws PreconditionError when the face degree does not match.
  void add(Monomial face, const BigInt& c);

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int dimension_;
  std::map<Monomial, BigInt, GradedLexLess> terms_;
};

/// d(v0...vk) = sum_i (-1)^i v0..^vi..vk with vertices in universe order; a
/// vertex maps to the empty face. Throws PreconditionError when a face of the
/// chain is not in the complex.
Chain boundary(const Chain& chain, const SimplicialComplex& complex);
bool is_cycle(const Chain& chain, const SimplicialComplex& complex);

/// Matrix of the boundary from faces of degree `face_degree` to faces of degree
/// `face_degree - 1`, with rows and columns in graded-lex face order.
SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t face_degree);

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integer homology of the augmented chain complex. Holds one entry
/// per degree from -1 up to the dimension of the complex; the empty complex
/// has no entries.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  const HomologyGroup* find(int degree) const;
  std::size_t rank(int degree) const;
  bool is_zero() const;
  /// Rank 1 in `degree`, no torsion, zero elsewhere.
  bool is_sphere(int degree) const;
  /// Sum over degrees of (-1)^k rank_k.
  long long euler() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& complex);

struct HomologySize {
  /// Sum of free ranks.
  std::size_t h_free = 0;
  /// Free ranks plus the number of torsion summands.
  std::size_t h_inclusive = 0;
  /// Top degree with a nonzero group; empty stands for minus infinity.
  std::optional<int> hd;
};

HomologySize h_and_hd(const HomologyProfile& profile);

/// True iff z is a cycle whose class generates H_k = Z. Throws
/// PreconditionError unless the profile is exactly Z in degree k.
bool generates_top_class(const Chain& z, const SimplicialComplex& complex, int k);

}  // namespace monotop
