#include <gtest/gtest.h>

#include "corpus.hpp"
#include "monotop/covers.hpp"
#include "oracles.hpp"

namespace monotop {
namespace {

// Sum of (-1)^|S| and count over subsets S of `elems` with lcm(S) = p.
std::pair<BigInt, BigInt> subsets_with_lcm(const std::vector<Exponents>& elems, const Exponents& p) {
  BigInt signed_sum = 0;
  BigInt count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << elems.size()); ++s) {
    Exponents l(p.size(), 0);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if ((s >> k) & 1U) l = lcm(l, elems[k]);
    }
    if (l != p) continue;
    ++count;
    signed_sum += (__builtin_popcountll(s) % 2 == 0) ? 1 : -1;
  }
  return {signed_sum, count};
}

long long oracle_euler(const MonomialIdeal& ideal) {
  long long f = 0;
  for (auto face : oracle::faces(ideal)) f += (__builtin_popcountll(face) % 2 == 0) ? 1 : -1;
  return -f;
}

TEST(CoveringPolynomial, TwoElements) {
  // (1 - x)(1 - y) under lcm: 1 - x - y + lcm(x, y)
  const std::vector<Exponents> m = {{1, 0}, {1, 1}};
  const auto c = covering_polynomial(m, 2);
  EXPECT_EQ(c.coefficient({0, 0}), 1);
  EXPECT_EQ(c.coefficient({1, 0}), -1);
  EXPECT_EQ(c.coefficient({1, 1}), 0);
  EXPECT_EQ(c.size(), 2u);
}

TEST(CoveringPolynomial, CoefficientsAreCoverSums) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.between(1, 4);
    std::vector<Exponents> elems(rng.between(0, 7), Exponents(n, 0));
    for (auto& e : elems) {
      for (auto& x : e) x = static_cast<std::uint8_t>(rng.below(3));
    }
    const auto c = covering_polynomial(elems, n);
    for (const auto& [p, coeff] : c.terms()) {
      EXPECT_EQ(coeff, subsets_with_lcm(elems, p).first);
      const auto counted = count_covers(elems, p);
      EXPECT_EQ(counted.coefficient, coeff);
      EXPECT_EQ(counted.covers, subsets_with_lcm(elems, p).second);
    }
  }
}

TEST(CoveringPolynomial, Budget) {
  const std::vector<Exponents> many(25, Exponents{1});
  EXPECT_THROW(covering_polynomial(many, 1), BudgetExceeded);
  EXPECT_NO_THROW(covering_polynomial(many, 1, std::nullopt, 30));
}

TEST(CoveringPolynomial, CapClampsExponents) {
  const std::vector<Exponents> m = {{2}, {3}};
  const auto c = covering_polynomial(m, 1, std::uint8_t{1});
  EXPECT_EQ(c.coefficient({1}), -1);  // -x - x + x
}

TEST(EulerViaCovers, TriangleEdgeIdeal) {
  const auto u = VariableUniverse::numbered(3);
  const MonomialIdeal c3(u, {Monomial{0b011}, Monomial{0b101}, Monomial{0b110}});
  EXPECT_EQ(euler_via_covers(c3), 2);
  EXPECT_EQ(top_cover_count(c3), 4);
}

TEST(EulerViaCovers, MatchesFaceCount) {
  testing::Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 9, 12);
    const BigInt e = euler_via_covers(ideal);
    EXPECT_EQ(e, oracle_euler(ideal)) << ideal.to_string();
    EXPECT_EQ((top_cover_count(ideal) - e) % 2, 0);
  }
}

TEST(EulerViaCovers, CanonicalizationDoesNotChangeIt) {
  testing::Rng rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 8, 10);
    if (ideal.is_unit()) continue;
    EXPECT_EQ(euler_via_covers(ideal), euler_via_covers(canonicalize(ideal).ideal));
  }
}

TEST(HilbertIdentity, HoldsOnRandomIdeals) {
  testing::Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 5, 6);
    const auto h = hilbert_identity_check(ideal);
    EXPECT_TRUE(h.holds) << ideal.to_string();
    EXPECT_EQ(h.covering, h.face_product);
  }
}

TEST(GeneratorsWithSquares, AppendsSquares) {
  const auto u = VariableUniverse::numbered(2);
  const auto g = generators_with_squares(MonomialIdeal(u, {Monomial{0b11}}));
  EXPECT_EQ(g, (std::vector<Exponents>{{1, 1}, {2, 0}, {0, 2}}));
}

}  // namespace
}  // namespace monotop
