#include <gtest/gtest.h>

#include "corpus.hpp"
#include "monotop/graph.hpp"
#include "monotop/io.hpp"
#include "monotop/resolution.hpp"
#include "oracles.hpp"

namespace monotop {
namespace {

MonomialIdeal load(const std::string& name) {
  return parse_ideal(read_text_file(std::string(MONOTOP_TEST_DATA) + "/" + name));
}

std::vector<std::string> core_strings(const Resolution& r) {
  std::vector<std::string> out;
  for (Monomial g : r.core.generators()) out.push_back(r.core.universe().format(g, ""));
  return out;
}

std::set<std::uint64_t> masks(const SimplicialComplex& c) {
  std::set<std::uint64_t> out;
  for (Monomial f : c.faces()) out.insert(f.bits());
  return out;
}

// Replays a plan with the definition of a free pair and compares the result
// with the plan's target.
bool plan_replays(const MonomialIdeal& ideal, const CollapsePlan& plan) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> steps;
  for (const auto& s : plan.steps) steps.emplace_back(s.tau.bits(), s.sigma.bits());
  const auto end = oracle::replay(oracle::faces(ideal), steps);
  return end && *end == masks(plan.target);
}

TEST(Domination, DefinitionAndCones) {
  const auto ideal = load("seven.ideal");
  const auto& u = ideal.universe();
  const auto x = [&](const char* n) { return u.require_index(n); };
  EXPECT_TRUE(dominates(ideal, x("x3"), x("x4")));
  EXPECT_FALSE(dominates(ideal, x("x4"), x("x3")));
  EXPECT_TRUE(dominates(ideal, x("x5"), x("x6")));
  EXPECT_FALSE(is_cone_apex(ideal, x("x1")));
  EXPECT_THROW(dominates(ideal, 0, 0), PreconditionError);
}

TEST(Domination, AgreesWithConeFormulation) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 2, 8, 9);
    if (ideal.is_unit()) continue;
    const std::size_t n = ideal.num_variables();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || ideal.contains_variable(a) || ideal.contains_variable(b)) continue;
        EXPECT_EQ(dominates(ideal, a, b), dominates_by_cones(ideal, a, b)) << ideal.to_string();
      }
    }
  }
}

TEST(MakeResolution, ValidatesSteps) {
  const auto ideal = load("seven.ideal");
  const auto& u = ideal.universe();
  const auto x = [&](const char* n) { return u.require_index(n); };
  const auto r = make_resolution(ideal, {{x("x5"), x("x6")}, {x("x4"), x("x3")}});
  EXPECT_EQ(r.depth(), 2u);
  EXPECT_TRUE(r.spherical);
  EXPECT_EQ(core_strings(r),
            (std::vector<std::string>{"x4", "x5", "x6", "x7", "x1x2", "x1x3", "x2x3"}));
  EXPECT_THROW(make_resolution(ideal, {{x("x4"), x("x3")}}), PreconditionError);
  EXPECT_THROW(make_resolution(ideal, {{x("x1"), std::nullopt}}), PreconditionError);
  EXPECT_THROW(make_resolution(ideal, {{x("x5"), x("x6")}, {x("x5"), x("x7")}}),
               PreconditionError);
}

TEST(Classify, SevenVariableExampleHasTwoCores) {
  const auto ideal = load("seven.ideal");
  const auto c = classify(ideal);
  EXPECT_EQ(c.verdict, Verdict::Spherical);
  EXPECT_EQ(c.depth, 2u);
  EXPECT_FALSE(c.simple);
  const auto search = all_maximal_resolutions(ideal);
  EXPECT_FALSE(search.has_conical());
  std::set<std::vector<std::string>> cores;
  for (const auto& r : search.resolutions) {
    EXPECT_EQ(r.depth(), 2u);
    cores.insert(core_strings(r));
  }
  const std::set<std::vector<std::string>> expected = {
      {"x4", "x5", "x6", "x7", "x1x2", "x1x3", "x2x3"},
      {"x3", "x5", "x6", "x7", "x1x2", "x1x4", "x2x4"}};
  EXPECT_EQ(cores, expected);
  EXPECT_TRUE(cores_consistent(search));
  EXPECT_TRUE(permutation_equivalent(search.resolutions.front().core,
                                     search.resolutions.back().core));
}

TEST(Classify, DepthCanExceedHalfTheVariables) {
  const auto c = classify(load("depth3.ideal"));
  EXPECT_EQ(c.verdict, Verdict::Spherical);
  EXPECT_EQ(c.depth, 3u);
  EXPECT_TRUE(c.simple);
}

TEST(Classify, UnitZeroAndCone) {
  const auto u = VariableUniverse::numbered(3);
  EXPECT_EQ(classify(MonomialIdeal::unit(u)).verdict, Verdict::Conical);
  const auto zero = classify(MonomialIdeal::zero(u));
  EXPECT_EQ(zero.verdict, Verdict::Conical);
  ASSERT_EQ(zero.resolution.steps.size(), 1u);
  EXPECT_TRUE(zero.resolution.steps[0].is_cone());
  // (x1, x2, x3): R = {1}, spherical of depth 0 and simple
  const auto all = classify(MonomialIdeal(u, {Monomial{1}, Monomial{2}, Monomial{4}}));
  EXPECT_EQ(all.verdict, Verdict::Spherical);
  EXPECT_EQ(all.depth, 0u);
  EXPECT_TRUE(all.simple);
}

TEST(Classify, StrategiesAgree) {
  testing::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 8, 9);
    const auto a = classify(ideal, Strategy::ConeFirst);
    const auto b = classify(ideal, Strategy::DominationFirst);
    EXPECT_EQ(a.verdict, b.verdict) << ideal.to_string();
    EXPECT_EQ(a.depth, b.depth) << ideal.to_string();
    if (a.verdict == Verdict::Spherical) {
      EXPECT_TRUE(permutation_equivalent(a.resolution.core, b.resolution.core));
    }
  }
}

TEST(Classify, VerdictPredictsHomology) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 8, 9);
    const auto c = classify(ideal);
    const auto h = reduced_homology(realize(ideal));
    if (c.verdict == Verdict::Conical) {
      EXPECT_TRUE(h.is_zero()) << ideal.to_string();
    } else if (c.simple) {
      EXPECT_TRUE(h.is_sphere(static_cast<int>(*c.depth) - 1)) << ideal.to_string();
    }
  }
}

TEST(AllMaximalResolutions, CoresConsistentOnRandomIdeals) {
  testing::Rng rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 7, 8);
    const auto search = all_maximal_resolutions(ideal);
    EXPECT_TRUE(cores_consistent(search)) << ideal.to_string();
    EXPECT_EQ(search.has_spherical(), classify(ideal).verdict == Verdict::Spherical)
        << ideal.to_string();
  }
}

TEST(AllMaximalResolutions, Budget) {
  const auto u = VariableUniverse::numbered(12);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < 6; ++k) gens.push_back(Monomial::variable(2 * k).with_var(2 * k + 1));
  EXPECT_THROW(all_maximal_resolutions(MonomialIdeal(u, gens), 5), BudgetExceeded);
}

TEST(PermutationEquivalent, DetectsRelabelings) {
  const auto u = VariableUniverse::numbered(4);
  const MonomialIdeal a(u, {Monomial{0b0011}, Monomial{0b0110}});
  const MonomialIdeal b(u, {Monomial{0b1001}, Monomial{0b1100}});
  const MonomialIdeal c(u, {Monomial{0b0011}, Monomial{0b1100}});
  EXPECT_TRUE(permutation_equivalent(a, b));
  EXPECT_FALSE(permutation_equivalent(a, c));
  testing::Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 8, 8);
    const std::size_t n = ideal.num_variables();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Monomial> moved;
    for (Monomial g : ideal.generators()) moved.push_back(permute(g, perm));
    EXPECT_TRUE(permutation_equivalent(ideal, MonomialIdeal(ideal.universe_ptr(), moved)));
  }
}

TEST(WitnessCollapse, ReplaysOnRandomIdeals) {
  testing::Rng rng(56);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = testing::random_ideal(rng, 1, 8, 9);
    if (ideal.is_unit()) {
      EXPECT_THROW(witness_collapse(ideal, classify(ideal).resolution), PreconditionError);
      continue;
    }
    const auto c = classify(ideal);
    const auto plan = witness_collapse(ideal, c.resolution);
    EXPECT_TRUE(plan_replays(ideal, plan)) << ideal.to_string();
    if (c.verdict == Verdict::Conical) {
      EXPECT_EQ(plan.target.size(), 2u);
    } else {
      const auto sigma = cross_polytope_boundary(ideal.universe_ptr(), c.resolution.pairs());
      EXPECT_EQ(plan.target, join(sigma, realize(c.resolution.core)));
    }
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(WitnessCollapse, SevenVariableExampleReachesCore) {
  const auto ideal = load("seven.ideal");
  const auto c = classify(ideal);
  const auto plan = witness_collapse(ideal, c.resolution);
  EXPECT_TRUE(verify_collapse_sequence(realize(ideal), plan.steps, plan.target).ok);
  EXPECT_TRUE(plan_replays(ideal, plan));
}

TEST(GeneratorCycle, CrossPolytopeClass) {
  const auto u = VariableUniverse::numbered(4);
  // (x1 x2, x3 x4): R is the square, depth 2 and simple
  const MonomialIdeal ideal(u, {Monomial{0b0011}, Monomial{0b1100}});
  const auto c = classify(ideal);
  ASSERT_TRUE(c.simple);
  const Chain z = generator_cycle(ideal, c.resolution);
  EXPECT_EQ(z.terms().size(), 4u);
  EXPECT_TRUE(generates_top_class(z, realize(ideal), 1));
  EXPECT_THROW(generator_cycle(ideal, find_resolution(MonomialIdeal::zero(u))),
               PreconditionError);
}

TEST(GeneratorCycle, RejectsSharedVariables) {
  const auto ideal = load("depth3.ideal");
  EXPECT_THROW(generator_cycle(ideal, classify(ideal).resolution), PreconditionError);
}

}  // namespace
}  // namespace monotop

namespace monotop {
namespace {

TEST(DistinctPairs, RechoosesSharedDominatedVariables) {
  // Star ideal of the path v4 - v2 - v1 - v3 - v5: greedy picks v1 twice.
  const auto u = VariableUniverse::numbered(5, "v");
  const Graph path(u, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  const auto ideal = star_ideal(path);
  const auto c = classify(ideal);
  ASSERT_EQ(c.verdict, Verdict::Spherical);
  const auto pairs = c.resolution.pairs();
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].second, pairs[1].second);
  const auto distinct = distinct_pairs(ideal, c.resolution);
  ASSERT_TRUE(distinct.has_value());
  EXPECT_NE((*distinct)[0].second, (*distinct)[1].second);
  EXPECT_EQ((*distinct)[0].first, pairs[0].first);
  EXPECT_TRUE(generates_top_class(generator_cycle(ideal, c.resolution), realize(ideal), 1));
}

}  // namespace
}  // namespace monotop
