#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monotop/complex.hpp"
#include "monotop/homology.hpp"
#include "monotop/ideal.hpp"

namespace monotop {

/// True iff x_a divides no minimal generator. Throws PreconditionError when
/// x_a lies in the ideal.
bool is_cone_apex(const MonomialIdeal& ideal, std::size_t a);

/// Every generator divisible by x_b is divisible by x_a, and there is at least
/// one. Throws PreconditionError if a == b or either variable lies in the ideal.
bool dominates(const MonomialIdeal& ideal, std::size_t a, std::size_t b);

/// Same relation through the cone formulation: R(I) is not a cone with apex
/// x_b while R(I, x_a) is. Works on the generators, used as a cross-check.
bool dominates_by_cones(const MonomialIdeal& ideal, std::size_t a, std::size_t b);

struct ResolutionStep {
  std::size_t a = 0;
  /// Dominated variable; empty for a cone-apex step.
  std::optional<std::size_t> b;

  bool is_cone() const { return !b.has_value(); }
  friend bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

struct Resolution {
  std::vector<ResolutionStep> steps;
  /// (I : a_1 ... a_r)
  MonomialIdeal core;
  /// No cone step; for a maximal resolution this also means the core is not
  /// a cone.
  bool spherical = true;

  std::size_t depth() const { return steps.size(); }
  /// The dominating prefix as (a_i, b_i) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
};

/// Throws PreconditionError unless `steps` is a valid resolution of `ideal`.
/// Returns the resolution with its core.
Resolution make_resolution(const MonomialIdeal& ideal, std::vector<ResolutionStep> steps);

/// Steps that can extend a resolution whose current ideal is `current`.
struct Extensions {
  std::vector<std::size_t> cone_apexes;
  /// (a, smallest b dominated by a), for every dominating a.
  std::vector<std::pair<std::size_t, std::size_t>> dominations;

  bool empty() const { return cone_apexes.empty() && dominations.empty(); }
};

Extensions extensions(const MonomialIdeal& current);

enum class Strategy {
  /// Stop at the first cone apex found; otherwise the smallest dominating pair.
  ConeFirst,
  /// Follow dominations while any exist; a cone step only when nothing else
  /// applies.
  DominationFirst,
};

/// Greedy maximal resolution. Ends at the first cone step, or when no
/// variable dominates and none is a cone apex.
Resolution find_resolution(const MonomialIdeal& ideal, Strategy strategy = Strategy::ConeFirst);

enum class Verdict { Spherical, Conical };

struct Classification {
  Verdict verdict = Verdict::Spherical;
  Resolution resolution;
  /// d(I); only set for spherical ideals.
  std::optional<std::size_t> depth;
  /// Core contains every variable, so R(core) = {1}.
  bool simple = false;
};

/// The unit ideal (empty complex) is reported conical.
Classification classify(const MonomialIdeal& ideal, Strategy strategy = Strategy::ConeFirst);

struct ResolutionSearch {
  /// One resolution per distinct terminal state: maximal spherical ones first,
  /// then conical ones cut at their first cone step, each ordered by steps.
  std::vector<Resolution> resolutions;
  std::size_t nodes_visited = 0;

  bool has_spherical() const;
  bool has_conical() const;
};

/// Exhaustive depth-first search over resolutions. Resolutions reaching the
/// same set of variables share a state, so each state is expanded once.
/// Throws BudgetExceeded after `max_nodes` states.
ResolutionSearch all_maximal_resolutions(const MonomialIdeal& ideal, std::size_t max_nodes = 100000);

/// Core uniqueness over a search: never both spherical and conical, and all
/// spherical resolutions share one depth and permutation-equivalent cores.
bool cores_consistent(const ResolutionSearch& search);

/// True iff some bijection of the variables maps the generators of `a` onto
/// those of `b`. Both ideals must have universes of the same size.
bool permutation_equivalent(const MonomialIdeal& a, const MonomialIdeal& b);

struct CollapsePlan {
  std::vector<CollapseStep> steps;
  /// join(Sigma, R(core)) for spherical resolutions, a single edge-free point
  /// {1, v} for conical ones.
  SimplicialComplex target;
};

/// Explicit elementary collapses from R(I) to the target of the resolution.
/// Each dominating step collapses R(J) onto Sigma_{a,b} R(J : a) and the inner
/// plan is lifted through the suspension; a conical resolution finishes with a
/// cone collapse. Throws PreconditionError for the unit ideal and
/// InternalError if a produced step is invalid.
CollapsePlan witness_collapse(const MonomialIdeal& ideal, const Resolution& resolution,
                              std::size_t max_faces = kDefaultMaxFaces);

/// Re-chooses the dominated variables of a spherical resolution so that all
/// a_i and b_i are pairwise distinct, trying the original b_i first. The
/// sequence of a_i, and so the core, is unchanged. Empty when no such choice
/// exists.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> distinct_pairs(
    const MonomialIdeal& ideal, const Resolution& resolution);

/// z = prod (a_i - b_i), expanded with orientation signs in universe order,
/// for pairs from distinct_pairs. Requires a spherical resolution whose core
/// contains every variable; every term is checked to be a face.
Chain generator_cycle(const MonomialIdeal& ideal, const Resolution& resolution);

}  // namespace monotop
