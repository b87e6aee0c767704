#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monotop/bigint.hpp"
#include "monotop/complex.hpp"
#include "monotop/ideal.hpp"
#include "monotop/polynomial.hpp"

namespace monotop {

inline constexpr std::size_t kDefaultMaxFactors = 24;

/// (1 - m_1) * ... * (1 - m_r) where * is the bilinear extension of
/// m * m' = lcm(m, m'). With `exponent_cap`, exponents are clamped after every
/// lcm. Throws BudgetExceeded when |M| > max_factors.
MultigradedPolynomial covering_polynomial(std::span<const Exponents> elements, std::size_t num_vars,
                                          std::optional<std::uint8_t> exponent_cap = std::nullopt,
                                          std::size_t max_factors = kDefaultMaxFactors);

struct CoverCount {
  /// c_M(p): sum of (-1)^|S| over subsets S with lcm(S) = p.
  BigInt coefficient;
  /// Number of such subsets.
  BigInt covers;
};

/// Direct enumeration of the subsets of M whose lcm is p. Elements not
/// dividing p are skipped, and branches that can no longer reach p are cut.
CoverCount count_covers(std::span<const Exponents> elements, const Exponents& p);
BigInt cover_coefficient(std::span<const Exponents> elements, const Exponents& p);

/// B together with the squares x_1^2, ..., x_n^2.
std::vector<Exponents> generators_with_squares(const MonomialIdeal& ideal);

struct HilbertCheck {
  bool holds = false;
  MultigradedPolynomial covering;      // C_{B u squares}
  MultigradedPolynomial face_product;  // F_{R(I)} * prod (1 - x_s)
};

/// Compares C_{B u squares} with F_{R(I)} * prod (1 - x_s) exactly.
HilbertCheck hilbert_identity_check(const MonomialIdeal& ideal,
                                    std::size_t max_faces = kDefaultMaxFaces,
                                    std::size_t max_factors = kDefaultMaxFactors);

/// (-1)^(n-1) c_B(x_1 ... x_n). Degree-1 generators may stay in B; the value
/// is the same as for the canonical ideal.
BigInt euler_via_covers(const MonomialIdeal& ideal, std::size_t max_factors = kDefaultMaxFactors);

/// Number of covers of x_1 ... x_n by B; congruent to the reduced Euler
/// characteristic mod 2.
BigInt top_cover_count(const MonomialIdeal& ideal);

}  // namespace monotop
