#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monotop/ideal.hpp"
#include "monotop/polynomial.hpp"

namespace monotop {

inline constexpr std::size_t kDefaultMaxFaces = std::size_t{1} << 20;

using FaceSet = std::unordered_set<Monomial, MonomialHash>;

/// A simplicial complex as a downward-closed set of square-free monomials.
/// Either it is empty (the (-1)-simplex) or it contains 1.
class SimplicialComplex {
 public:
  /// The empty complex over `universe`.
  explicit SimplicialComplex(UniversePtr universe);

  /// Validates downward closure; throws PreconditionError otherwise.
  static SimplicialComplex from_faces(UniversePtr universe, std::vector<Monomial> faces);
  /// The complex generated by `facets` (all their divisors).
  static SimplicialComplex generated_by(UniversePtr universe, std::span<const Monomial> facets);

  const VariableUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  /// Faces sorted by (degree, lexicographic support).
  const std::vector<Monomial>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool is_empty() const { return faces_.empty(); }
  bool contains(Monomial m) const { return index_.contains(m); }
  const FaceSet& face_set() const { return index_; }

  /// Largest face degree (number of vertices), -1 for the empty complex.
  int max_degree() const;
  /// Product of all vertices.
  Monomial vertex_mask() const;
  std::vector<Monomial> faces_of_degree(std::size_t d) const;
  std::vector<Monomial> facets() const;
  bool is_maximal(Monomial face) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  SimplicialComplex(UniversePtr universe, std::vector<Monomial> sorted_faces, FaceSet index);

  UniversePtr universe_;
  std::vector<Monomial> faces_;
  FaceSet index_;
};

/// R(I): all square-free monomials outside I. Enumerated by increasing degree,
/// never extending a non-face. Throws BudgetExceeded past `max_faces`.
SimplicialComplex realize(const MonomialIdeal& ideal, std::size_t max_faces = kDefaultMaxFaces);

/// (D : x) = { m in D : xm in D }
SimplicialComplex link(const SimplicialComplex& complex, Monomial x);
/// (D , x) = { m in D : x does not divide m }
SimplicialComplex deletion(const SimplicialComplex& complex, Monomial x);

/// { lcm(m_1, ..., m_k) : m_i in D_i }. Throws PreconditionError for an empty
/// list, which has no universe.
SimplicialComplex join(std::span<const SimplicialComplex> complexes);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// A_x(D) = join(D, {1, x}). With `require_coprime`, x must avoid every face.
SimplicialComplex cone(const SimplicialComplex& complex, Monomial x, bool require_coprime = false);
/// Sigma_{x,y}(D) = join(D, {1, x, y}).
SimplicialComplex suspension(const SimplicialComplex& complex, Monomial x, Monomial y,
                             bool require_coprime = false);

/// Every face f has f * x_v in the complex (and the complex is not empty).
bool is_cone_with_apex(const SimplicialComplex& complex, std::size_t v);

/// D == A_x(D : x) u (D, x)
bool decompose_check(const SimplicialComplex& complex, Monomial x);

MultigradedPolynomial face_polynomial(const SimplicialComplex& complex);
/// F_D(t) = sum of t^deg(m) over faces.
UnivariatePolynomial face_counts(const SimplicialComplex& complex);
/// -F_D(-1)
long long reduced_euler(const SimplicialComplex& complex);

/// Removal of the free pair tau < sigma = tau * a.
struct CollapseStep {
  Monomial tau;
  Monomial sigma;

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

/// Mutable face set for running long collapse sequences without copying.
class CollapseWorkspace {
 public:
  explicit CollapseWorkspace(const SimplicialComplex& start);
  CollapseWorkspace(UniversePtr universe, FaceSet faces);

  bool contains(Monomial m) const { return faces_.contains(m); }
  std::size_t size() const { return faces_.size(); }
  const FaceSet& faces() const { return faces_; }

  /// Empty string when (tau, sigma) is a free pair; otherwise the reason.
  std::string check(const CollapseStep& step) const;
  /// Throws InvalidCollapse when the step is not a free pair.
  void apply(const CollapseStep& step);
  /// Puts back a collapsed pair (used for backtracking searches).
  void undo(const CollapseStep& step);

  SimplicialComplex to_complex() const;

 private:
  UniversePtr universe_;
  FaceSet faces_;
};

SimplicialComplex apply_collapse(const SimplicialComplex& complex, const CollapseStep& step);

struct CollapseVerdict {
  bool ok = true;
  /// Index of the first invalid step, or steps.size() when the sequence is
  /// valid but ends elsewhere.
  std::optional<std::size_t> failed_at;
  std::string reason;
};

CollapseVerdict verify_collapse_sequence(const SimplicialComplex& from,
                                         std::span<const CollapseStep> steps,
                                         const SimplicialComplex& to);

/// join({1, a_1, b_1}, ..., {1, a_r, b_r}); requires distinct a_i and
/// a_j != b_i for j <= i.
SimplicialComplex cross_polytope_boundary(UniversePtr universe,
                                          std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// All divisors of `vertices`.
SimplicialComplex simplex(UniversePtr universe, Monomial vertices);
/// All proper divisors of `vertices`.
SimplicialComplex simplex_boundary(UniversePtr universe, Monomial vertices);
/// {1}
SimplicialComplex sphere_minus_one(UniversePtr universe);

}  // namespace monotop
