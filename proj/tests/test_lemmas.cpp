#include <gtest/gtest.h>

#include "mcf/mcf.hpp"

using namespace mcf;

namespace {
Ring make(const char* text) { return build_ring(parse_ring_spec(text)); }
}  // namespace

TEST(Lemmas, IdentitySuite) {
  auto c = identity_suite(make("Z/2[x]/(x^2)"), 3, 500, 1);
  EXPECT_TRUE(c.passed) << c.detail;
  EXPECT_EQ(c.cases, 16u + 500u);
}

TEST(Lemmas, SuslinEquivalence) {
  auto r = make("UT2(Z/2)");
  auto c = suslin_equivalence(parse_ideal_spec("(E12)", r), 3);
  EXPECT_TRUE(c.passed) << c.detail;
  EXPECT_TRUE(suslin_equivalence(parse_ideal_spec("(3)", make("Z/9")), 3).passed);
}

TEST(Lemmas, ChainOrders) {
  auto r = make("Z/8");
  auto two = parse_ideal_spec("(2)", r);
  HabdankOrders ord;
  auto c = habdank_chain(two, two, 3, {}, &ord);
  EXPECT_TRUE(c.passed) << c.detail;
  EXPECT_EQ(ord.congruence, 512u);
  EXPECT_LE(ord.relative_sym, ord.level);
  EXPECT_LE(ord.level, ord.relative);
}

TEST(Lemmas, GlGenerators) {
  auto c = gl_generator_validation(parse_ideal_spec("(x)", make("Z/2[x]/(x^2)")), 3);
  EXPECT_TRUE(c.passed) << c.detail;
  EXPECT_EQ(c.cases, 512u);
  EXPECT_TRUE(gl_generator_validation(unit_ideal(make("Z/3")), 3).passed);
}

TEST(Lemmas, RewritingWithProperIdeals) {
  auto r = make("Z/8");
  auto c = comgenerator_exhaustive(parse_ideal_spec("(2)", r), parse_ideal_spec("(4)", r), 3);
  EXPECT_TRUE(c.passed) << c.detail;
  EXPECT_EQ(c.cases, 36u * 4 * 2 * 8);
}

TEST(Lemmas, Expansion) {
  auto r = make("UT2(Z/2)");
  auto c = expansion_suite(parse_ideal_spec("(E11)", r), parse_ideal_spec("(E12)", r), 3, 1000, 4);
  EXPECT_TRUE(c.passed) << c.detail;
}
