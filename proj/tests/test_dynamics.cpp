#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "medianlab/dynamics.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/tree_model.hpp"
#include "medianlab/walk.hpp"

namespace medianlab {
namespace {

using testing::p3;

GroupAction parity() {
  Permutation a(8), b(8);
  for (Point v = 0; v < 8; ++v) {
    a[v] = v ^ 6u;
    b[v] = v ^ 5u;
  }
  return GroupAction::validated(MedianAlgebra::cube(3), {"a", "b"}, {a, b});
}

TEST(Action, Validation) {
  EXPECT_NO_THROW(parity());
  EXPECT_NO_THROW(GroupAction::validated(p3(), {"e"}, {{0, 1, 2}}));
  try {
    GroupAction::validated(p3(), {"t"}, {{1, 0, 2}});
    FAIL();
  } catch (const MedianError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
  }
  EXPECT_THROW(GroupAction::validated(p3(), {"bad"}, {{0, 0, 2}}), MedianError);
  EXPECT_THROW(GroupAction::validated(p3(), {"short"}, {{0, 1}}), MedianError);
}

TEST(Action, EvaluateWords) {
  const auto g = parity();
  EXPECT_EQ(g.evaluate("e"), identity_permutation(8));
  EXPECT_EQ(g.evaluate("a a"), identity_permutation(8));
  EXPECT_EQ(g.evaluate("a*b"), g.evaluate("b.a"));
  EXPECT_EQ(g.evaluate("a^-1"), g.evaluate("a'"));
  EXPECT_THROW(g.evaluate("c"), MedianError);
}

TEST(Action, GeneratedGroup) {
  const auto g = parity();
  EXPECT_EQ(generated_semigroup(g.generators()).size(), 4u);
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal(parity()).minimal);
  const auto t = is_minimal(GroupAction::trivial(p3()));
  EXPECT_FALSE(t.minimal);
  EXPECT_EQ(t.witness, std::optional<PointSet>(make_set(3, {0})));
  const auto f = is_minimal(GroupAction::validated(p3(), {"r"}, {{2, 1, 0}}));
  EXPECT_FALSE(f.minimal);
  EXPECT_EQ(f.witness, std::optional<PointSet>(make_set(3, {1})));
}

TEST(Minimal, ConjugationInvariant) {
  const auto g = parity();
  const Permutation relabel = {3, 7, 1, 0, 6, 2, 4, 5};
  const auto m2 = g.algebra().relabel(relabel);
  std::vector<Permutation> gens;
  const auto inv = inverse(relabel);
  for (const auto& p : g.generators()) gens.push_back(compose(relabel, compose(p, inv)));
  const auto h = GroupAction::validated(m2, {"a", "b"}, gens);
  EXPECT_EQ(is_minimal(g).minimal, is_minimal(h).minimal);
  const auto f = GroupAction::validated(p3(), {"r"}, {{2, 1, 0}});
  const auto q = p3().relabel({1, 2, 0});
  const auto fq = GroupAction::validated(q, {"r"}, {{1, 0, 2}});
  EXPECT_EQ(is_minimal(f).minimal, is_minimal(fq).minimal);
  EXPECT_EQ(is_minimal(fq).witness, std::optional<PointSet>(make_set(3, {2})));
}

TEST(Orbits, Closure) {
  const auto g = parity();
  EXPECT_EQ(orbit(g, 0), make_set(8, {0, 3, 5, 6}));
  EXPECT_EQ(invariant_closure(g, singleton(8, 0)), full_set(8));
}

TEST(InducedActions, Examples) {
  const auto g = parity();
  const auto ind = induced_cube_action(g, cubical_factor(g.algebra()));
  EXPECT_EQ(ind.on_prime.algebra().size(), 1u);
  EXPECT_EQ(ind.on_cube.generator_count(), 2u);

  const auto t = induced_cube_action(GroupAction::trivial(p3()), cubical_factor(p3()));
  EXPECT_EQ(t.on_prime.generator_count(), 0u);

  const auto m = testing::p3_times_edge();  // index 2a + s
  const auto sign = GroupAction::validated(m, {"s"}, {{1, 0, 3, 2, 5, 4}});
  const auto dec = cubical_factor(m);
  const auto i2 = induced_cube_action(sign, dec);
  EXPECT_EQ(i2.on_prime.generator(0), identity_permutation(3));
  EXPECT_EQ(i2.on_cube.generator(0), (Permutation{1, 0}));
}

TEST(InducedActions, RejectsNonEquivariant) {
  // swapping the two factors of the square moves the wall set but square walls are all in W1
  const auto sq = testing::square();
  const auto sw = GroupAction::validated(sq, {"s"}, {{0, 2, 1, 3}});
  EXPECT_NO_THROW(induced_cube_action(sw, cubical_factor(sq)));
  // P3 x edge with a decomposition whose W1 is faked to a W2 wall
  const auto m = testing::p3_times_edge();
  auto dec = cubical_factor(m);
  const auto flip = GroupAction::validated(m, {"f"}, {{4, 5, 2, 3, 0, 1}});
  EXPECT_TRUE(is_equivariant_decomposition(flip, dec));
  dec.w1 = {dec.w2.front()};
  EXPECT_FALSE(is_equivariant_decomposition(flip, dec));
  EXPECT_THROW(induced_cube_action(flip, dec), MedianError);
}

TEST(GateEquivariance, UnderActions) {
  const auto g = parity();
  const auto& m = g.algebra();
  for (unsigned long mask = 1; mask < 256; ++mask) {
    const PointSet c(8, mask);
    if (!is_convex(m, c)) continue;
    for (const auto& p : g.generators())
      for (Point x = 0; x < 8; ++x) EXPECT_EQ(p[gate(m, x, c)], gate(m, p[x], medianlab::apply(p, c)));
  }
}

TEST(TreeModel, Shapes) {
  const auto t1 = tree_model(1, false);
  EXPECT_EQ(t1.algebra.size(), 5u);
  EXPECT_EQ(t1.labels[0], "e");
  // a, A, b at indices 1, 2, 3: their median is the root
  EXPECT_EQ(t1.algebra.median(1, 2, 3), 0u);
  EXPECT_EQ(tree_model(1, true).algebra.size(), 10u);
  EXPECT_EQ(tree_model(0, false).algebra.size(), 1u);
  EXPECT_EQ(tree_model(0, true).algebra.size(), 2u);
  EXPECT_EQ(tree_model(3, false).algebra.size(), 1u + 2u * (27u - 1u));
  EXPECT_THROW(tree_model(6, false), MedianError);
}

TEST(TreeModel, MedianIsTreeMedian) {
  const auto t = tree_model(2, false);
  // label -> index
  auto at = [&](const std::string& w) {
    return static_cast<Point>(std::find(t.labels.begin(), t.labels.end(), w) - t.labels.begin());
  };
  EXPECT_EQ(t.algebra.median(at("ab"), at("aB"), at("A")), at("a"));
  EXPECT_EQ(t.algebra.median(at("ab"), at("aa"), at("a")), at("a"));
  EXPECT_EQ(t.algebra.median(at("bA"), at("Ba"), at("e")), at("e"));
}

TEST(Walk, ExactPredictionsForUniformLaw) {
  WalkConfig c;
  c.depth = 3;
  const auto p = predict_walk(c);
  ASSERT_EQ(p.cylinders.size(), 36u);
  for (double v : p.cylinders) EXPECT_NEAR(v, 0.25 / 9.0, 1e-12);
  EXPECT_NEAR(p.sign_plus, 0.5, 1e-12);
  for (std::size_t k = 0; k < p.constant_sign.size(); ++k) {
    EXPECT_NEAR(p.constant_sign[k], std::ldexp(1.0, -static_cast<int>(k + 1)), 1e-12);
  }
}

TEST(Walk, PredictionsSumToOneForSkewedLaw) {
  WalkConfig c;
  c.depth = 3;
  c.mu = StepDistribution::parse("a+=1/4,a-=1/8,A+=1/16,A-=1/16,b+=1/8,b-=1/8,B+=1/8,B-=1/8");
  const auto p = predict_walk(c);
  double total = 0;
  for (double v : p.cylinders) total += v;
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_NEAR(p.sign_plus, 0.5 * (1 + std::pow(2 * (9.0 / 16.0) - 1, 200.0)), 1e-12);
}

TEST(Walk, SmallSimulationIsReproducibleAndConsistent) {
  WalkConfig c;
  c.depth = 1;
  c.steps = 30;
  c.trajectories = 20000;
  c.seed = 5;
  const auto a = simulate_walk(c);
  const auto b = simulate_walk(c);
  EXPECT_EQ(a.prefix_counts, b.prefix_counts);
  EXPECT_EQ(a.sign_counts, b.sign_counts);
  std::uint64_t total = a.unresolved;
  for (auto v : a.prefix_counts) total += v;
  EXPECT_EQ(total, c.trajectories);
  EXPECT_EQ(a.sign_counts[0] + a.sign_counts[1], c.trajectories);
  for (double v : a.prefix_distribution()) EXPECT_NEAR(v, 0.25, 0.02);
  EXPECT_NEAR(a.sign_plus_fraction(), 0.5, 0.02);
}

TEST(Walk, ConfigValidation) {
  WalkConfig c;
  c.depth = 0;
  EXPECT_THROW(c.validate(), MedianError);
  c.depth = 5;
  c.steps = 5;
  EXPECT_THROW(c.validate(), MedianError);
  EXPECT_THROW(StepDistribution::parse("a+=1/2"), MedianError);
  EXPECT_THROW(StepDistribution::parse("x+=1"), MedianError);
}

}  // namespace
}  // namespace medianlab
