#include <gtest/gtest.h>

#include "corpus.hpp"
#include "monotop/ideal.hpp"
#include "oracles.hpp"

namespace monotop {
namespace {

Monomial mono(const VariableUniverse& u, std::vector<std::string> names) {
  return u.monomial(names);
}

TEST(Monomial, BitOperations) {
  const Monomial a{0b0110};
  const Monomial b{0b0011};
  EXPECT_EQ(a.degree(), 2u);
  EXPECT_EQ(a.lcm(b).bits(), 0b0111u);
  EXPECT_EQ(a.gcd(b).bits(), 0b0010u);
  EXPECT_EQ(a.without(b).bits(), 0b0100u);
  EXPECT_TRUE(Monomial{0b0010}.divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_TRUE(Monomial::one().divides(a));
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(Monomial::first(64).degree(), 64u);
}

TEST(Monomial, GradedLexOrder) {
  // 1 < x1 < x2 < x1x2 < x1x3 < x2x3
  const std::vector<Monomial> sorted = {Monomial{0}, Monomial{1}, Monomial{2},
                                        Monomial{3}, Monomial{5}, Monomial{6}};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      EXPECT_EQ(graded_lex_less(sorted[i], sorted[j]), i < j) << i << " " << j;
    }
  }
}

TEST(VariableUniverse, NamesAndLookup) {
  const auto u = VariableUniverse::numbered(3);
  EXPECT_EQ(u->names(), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(u->index_of("x2"), 1u);
  EXPECT_FALSE(u->index_of("y").has_value());
  EXPECT_THROW(u->require_index("y"), UniverseMismatch);
  EXPECT_EQ(u->format(Monomial{0b101}, "*"), "x1*x3");
  EXPECT_TRUE(u->fits(Monomial{0b111}));
  EXPECT_FALSE(u->fits(Monomial{0b1000}));
  EXPECT_THROW(VariableUniverse::make({"a", "a"}), PreconditionError);
}

TEST(MonomialIdeal, MinimalizesAndSorts) {
  const auto u = VariableUniverse::numbered(4);
  const MonomialIdeal i(u, {mono(*u, {"x1", "x2", "x3"}), mono(*u, {"x3", "x4"}),
                            mono(*u, {"x1", "x2"}), mono(*u, {"x1", "x2"})});
  ASSERT_EQ(i.generators().size(), 2u);
  EXPECT_EQ(i.to_string(), "(x1*x2, x3*x4)");
  EXPECT_TRUE(i.contains(mono(*u, {"x1", "x2", "x4"})));
  EXPECT_FALSE(i.contains(mono(*u, {"x1", "x3"})));
}

TEST(MonomialIdeal, UnitAndZero) {
  const auto u = VariableUniverse::numbered(2);
  const auto unit = MonomialIdeal::unit(u);
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(unit.contains(Monomial::one()));
  EXPECT_EQ(unit.variables_in_ideal(), u->all());
  const auto zero = MonomialIdeal::zero(u);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.contains(u->all()));
  // 1 together with anything is the unit ideal
  EXPECT_TRUE(MonomialIdeal(u, {Monomial{1}, Monomial::one()}).is_unit());
  EXPECT_TRUE(MonomialIdeal().is_zero());
}

TEST(MonomialIdeal, RejectsForeignMonomials) {
  const auto u = VariableUniverse::numbered(2);
  EXPECT_THROW(MonomialIdeal(u, {Monomial{0b100}}), UniverseMismatch);
}

TEST(Colon, SquaresBecomeVariables) {
  const auto u = VariableUniverse::numbered(3);
  const MonomialIdeal i(u, {mono(*u, {"x1", "x2"})});
  // (x1x2, x1^2, ...) : x1 = (x1, x2)
  EXPECT_EQ(colon(i, Monomial{1}).to_string(), "(x1, x2)");
  EXPECT_EQ(colon(i, Monomial::one()), i);
}

TEST(Colon, MatchesEnumeration) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 7, 8);
    const Monomial x{rng.below(std::uint64_t{1} << ideal.num_variables())};
    std::set<std::uint64_t> got;
    const MonomialIdeal quotient = colon(ideal, x);
    for (Monomial g : quotient.generators()) got.insert(g.bits());
    EXPECT_EQ(got, oracle::colon_generators(ideal, x.bits())) << ideal.to_string();
  }
}

TEST(Colon, ComposesOverProducts) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ideal = testing::random_ideal(rng, 2, 7, 8);
    const std::size_t n = ideal.num_variables();
    const std::size_t a = rng.below(n);
    const std::size_t b = rng.below(n);
    if (a == b) continue;
    EXPECT_EQ(colon(colon(ideal, Monomial::variable(a)), Monomial::variable(b)),
              colon(ideal, Monomial::variable(a).with_var(b)));
  }
}

TEST(Add, AddsAndMinimalizes) {
  const auto u = VariableUniverse::numbered(3);
  const MonomialIdeal i(u, {mono(*u, {"x1", "x2"}), mono(*u, {"x2", "x3"})});
  EXPECT_EQ(add(i, Monomial{0b010}).to_string(), "(x2)");
}

TEST(Canonicalize, DropsIdealVariables) {
  const auto u = VariableUniverse::numbered(4);
  const MonomialIdeal i(u, {Monomial{0b0001}, mono(*u, {"x2", "x3"})});
  const auto c = canonicalize(i);
  EXPECT_EQ(c.kept, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(c.ideal.num_variables(), 3u);
  EXPECT_EQ(c.ideal.to_string(), "(x2*x3)");
  EXPECT_EQ(lift_monomial(Monomial{0b011}, c.kept).bits(), 0b0110u);
  EXPECT_EQ(restrict_monomial(Monomial{0b0110}, c.kept).bits(), 0b011u);
}

TEST(Canonicalize, PreservesFaces) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 7, 8);
    if (ideal.is_unit()) continue;
    const auto c = canonicalize(ideal);
    std::set<std::uint64_t> lifted;
    for (auto f : oracle::faces(c.ideal)) lifted.insert(lift_monomial(Monomial{f}, c.kept).bits());
    EXPECT_EQ(lifted, oracle::faces(ideal));
  }
}

TEST(Permute, MovesVariables) {
  const std::vector<std::size_t> perm = {2, 0, 1};
  EXPECT_EQ(permute(Monomial{0b011}, perm).bits(), 0b101u);
}

}  // namespace
}  // namespace monotop
