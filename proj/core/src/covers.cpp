#include "monotop/covers.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace monotop {

MultigradedPolynomial covering_polynomial(std::span<const Exponents> elements, std::size_t num_vars,
                                          std::optional<std::uint8_t> exponent_cap,
                                          std::size_t max_factors) {
  if (elements.size() > max_factors) {
    throw BudgetExceeded("covering polynomial has " + std::to_string(elements.size()) +
                         " factors, budget is " + std::to_string(max_factors));
  }
  auto clamp = [&](Exponents e) {
    if (exponent_cap) {
      for (auto& x : e) x = std::min(x, *exponent_cap);
    }
    return e;
  };
  MultigradedPolynomial acc = MultigradedPolynomial::constant(num_vars, 1);
  for (const auto& m : elements) {
    if (m.size() != num_vars) throw UniverseMismatch("covering_polynomial: arity mismatch");
    MultigradedPolynomial next = acc;
    for (const auto& [e, c] : acc.terms()) next.add_term(clamp(lcm(e, m)), -c);
    acc = std::move(next);
  }
  return acc;
}

CoverCount count_covers(std::span<const Exponents> elements, const Exponents& p) {
  std::vector<const Exponents*> usable;
  for (const auto& m : elements) {
    if (m.size() != p.size()) throw UniverseMismatch("count_covers: arity mismatch");
    if (divides(m, p)) usable.push_back(&m);
  }
  const std::size_t k = usable.size();
  // suffix[i] = lcm of usable[i..k)
  std::vector<Exponents> suffix(k + 1, Exponents(p.size(), 0));
  for (std::size_t i = k; i-- > 0;) suffix[i] = lcm(suffix[i + 1], *usable[i]);

  CoverCount out;
  std::function<void(std::size_t, const Exponents&, bool)> walk =
      [&](std::size_t i, const Exponents& current, bool odd) {
        if (lcm(current, suffix[i]) != p) return;
        if (i == k) {
          out.coefficient += odd ? -1 : 1;
          out.covers += 1;
          return;
        }
        walk(i + 1, current, odd);
        walk(i + 1, lcm(current, *usable[i]), !odd);
      };
  walk(0, Exponents(p.size(), 0), false);
  return out;
}

BigInt cover_coefficient(std::span<const Exponents> elements, const Exponents& p) {
  return count_covers(elements, p).coefficient;
}

std::vector<Exponents> generators_with_squares(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_variables();
  std::vector<Exponents> out;
  for (Monomial g : ideal.generators()) out.push_back(exponents_of(g, n));
  for (std::size_t s = 0; s < n; ++s) out.push_back(square_of(s, n));
  return out;
}

HilbertCheck hilbert_identity_check(const MonomialIdeal& ideal, std::size_t max_faces,
                                    std::size_t max_factors) {
  const std::size_t n = ideal.num_variables();
  HilbertCheck out;
  out.covering = covering_polynomial(generators_with_squares(ideal), n, std::nullopt, max_factors);
  MultigradedPolynomial rhs = face_polynomial(realize(ideal, max_faces));
  for (std::size_t s = 0; s < n; ++s) {
    MultigradedPolynomial factor = MultigradedPolynomial::constant(n, 1);
    factor.add_term(exponents_of(Monomial::variable(s), n), -1);
    rhs = rhs * factor;
  }
  out.face_product = std::move(rhs);
  out.holds = out.covering == out.face_product;
  return out;
}

BigInt euler_via_covers(const MonomialIdeal& ideal, std::size_t max_factors) {
  const auto& gens = ideal.generators();
  if (gens.size() > max_factors) {
    throw BudgetExceeded("covering polynomial has " + std::to_string(gens.size()) +
                         " factors, budget is " + std::to_string(max_factors));
  }
  // Square-free star product keyed by support bits.
  std::unordered_map<std::uint64_t, BigInt> acc{{0, BigInt{1}}};
  for (Monomial g : gens) {
    std::unordered_map<std::uint64_t, BigInt> next = acc;
    for (const auto& [bits, c] : acc) {
      auto& slot = next[bits | g.bits()];
      slot -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  const std::size_t n = ideal.num_variables();
  auto it = acc.find(ideal.universe().all().bits());
  const BigInt c = it == acc.end() ? BigInt{0} : it->second;
  // (-1)^(n-1); for n = 0 this is -1.
  return (n % 2 == 1) ? c : BigInt{-c};
}

BigInt top_cover_count(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_variables();
  std::vector<Exponents> elems;
  for (Monomial g : ideal.generators()) elems.push_back(exponents_of(g, n));
  return count_covers(elems, exponents_of(ideal.universe().all(), n)).covers;
}

}  // namespace monotop
