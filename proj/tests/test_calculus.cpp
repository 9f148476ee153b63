#include <gtest/gtest.h>

#include <random>

#include "mcf/mcf.hpp"

using namespace mcf;

namespace {
Ring make(const char* text) { return build_ring(parse_ring_spec(text)); }
}  // namespace

TEST(Calculus, GroupIdentities) {
  std::mt19937_64 rng(17);
  for (const char* t : {"Z/4", "UT2(Z/2)", "M2(Z/2)"}) {
    auto r = make(t);
    for (int s = 0; s < 300; ++s) {
      auto rep = check_group_identities(random_invertible(r, 3, rng), random_invertible(r, 3, rng),
                                        random_invertible(r, 3, rng));
      ASSERT_TRUE(rep.all()) << t << " c1..c5,variant " << rep.c1 << rep.c2 << rep.c3 << rep.c4 << rep.c5
                             << rep.hall_witt_variant;
    }
  }
}

TEST(Calculus, IdentitiesCatchANonInvertible) {
  auto r = make("Z/4");
  Mat singular = Mat::zero(r.get(), 3);
  EXPECT_THROW(check_group_identities(singular, singular, singular), Error);
}

TEST(Calculus, ElementaryRelations) {
  auto r = make("UT2(Z/2)");
  for (int a = 0; a < r->order(); ++a)
    for (int b = 0; b < r->order(); ++b)
      EXPECT_TRUE(check_elementary_relations(r, 4, static_cast<Elem>(a), static_cast<Elem>(b)).all());
}

TEST(Calculus, ComgeneratorCases) {
  auto r = make("Z/8");
  using C = ComgenCase;
  EXPECT_EQ(classify({2, 1, 1, 2}), C::transpose);
  EXPECT_EQ(classify({2, 3, 1, 2}), C::left_adjacent);
  EXPECT_EQ(classify({3, 1, 1, 2}), C::right_adjacent);
  EXPECT_EQ(classify({1, 2, 1, 2}), C::same);
  EXPECT_EQ(classify({1, 3, 1, 2}), C::shared_row);
  EXPECT_EQ(classify({3, 2, 1, 2}), C::shared_column);
  EXPECT_EQ(classify({3, 4, 1, 2}), C::disjoint);
  for (ComgenIndices ix : std::vector<ComgenIndices>{{2, 1, 1, 2}, {2, 3, 1, 2}, {3, 1, 1, 2}, {1, 2, 1, 2},
                                                      {1, 3, 1, 2}, {3, 2, 1, 2}})
    EXPECT_NO_THROW(comgenerator_decompose(r, 3, ix, 2, 3, 6)) << to_string(classify(ix));
  auto d = comgenerator_decompose(r, 4, {3, 4, 1, 2}, 2, 3, 6);
  EXPECT_TRUE(d.commutator.is_identity());
  EXPECT_EQ(render(*r, *d.word), "1");
}

TEST(Calculus, SharedColumnTargetsRowIprime) {
  // [e_32(a), ^{e_12(x)} e_21(b)] rewrites to ^{e_12(x)} e_31(ab)
  auto r = make("Z/8");
  auto d = comgenerator_decompose(r, 3, {3, 2, 1, 2}, 2, 1, 3);
  EXPECT_EQ(render(*r, *d.word), "^{e(1,2;1)}e(3,1;6)");
}

TEST(Calculus, ComgeneratorNoncommutative) {
  auto r = make("UT2(Z/2)");
  for (int ip = 1; ip <= 3; ++ip)
    for (int jp = 1; jp <= 3; ++jp)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (ip == jp || i == j) continue;
          for (int al = 0; al < 8; ++al)
            for (int a = 0; a < 8; ++a)
              for (int be = 0; be < 8; ++be)
                ASSERT_NO_THROW(comgenerator_decompose(r, 3, {ip, jp, i, j}, static_cast<Elem>(al),
                                                       static_cast<Elem>(a), static_cast<Elem>(be)));
        }
}

TEST(Calculus, ComgeneratorPreconditions) {
  auto r = make("Z/8");
  auto two = parse_ideal_spec("(2)", r);
  EXPECT_THROW(comgenerator_decompose(r, 3, {1, 1, 1, 2}, 2, 1, 2), Error);
  EXPECT_THROW(comgenerator_decompose(r, 3, {1, 4, 1, 2}, 2, 1, 2), Error);
  EXPECT_THROW(comgenerator_decompose(r, 3, {2, 1, 1, 2}, 3, 1, 2, &two, &two), Error);
}

TEST(Calculus, WordsEvaluateIndependently) {
  auto r = make("Z/4");
  auto w = word_comm(r, 3, word_elem(r, 3, 1, 2, 1), word_elem(r, 3, 2, 3, 1));
  EXPECT_EQ(evaluate(r, 3, *w), elementary(r, 3, 1, 3, 1));
  EXPECT_EQ(w->value, evaluate(r, 3, *w));
  EXPECT_EQ(render(*r, *w), "[e(1,2;1),e(2,3;1)]");
}

TEST(Calculus, SevenTermExpansion) {
  std::mt19937_64 rng(23);
  auto r = make("Z/2[x]/(x^3)");
  auto i = parse_ideal_spec("(x)", r);
  auto j = parse_ideal_spec("(x^2)", r);
  for (int s = 0; s < 500; ++s) {
    auto rep = expansion_check(random_congruence(j, 3, rng), random_congruence(i, 3, rng), i, j);
    ASSERT_TRUE(rep.ok());
    // (x)(x^2) = 0 here, so every such commutator is trivial
    EXPECT_TRUE(rep.commutator.is_identity());
  }
  EXPECT_THROW(expansion_check(Mat::identity(r.get(), 3), elementary(r, 3, 1, 2, 1), i, j), Error);
}
