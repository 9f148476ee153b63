#include <gtest/gtest.h>

#include "mcf/parse.hpp"

using namespace mcf;

namespace {
Ring make(const char* text) { return build_ring(parse_ring_spec(text)); }

std::vector<std::string> names(const IdealSet& i) {
  std::vector<std::string> out;
  for (Elem e : i.members()) out.push_back(i.ring()->name(e));
  return out;
}
}  // namespace

TEST(Ideal, PrincipalModular) {
  auto r = make("Z/8");
  EXPECT_EQ(names(parse_ideal_spec("(2)", r)), (std::vector<std::string>{"0", "2", "4", "6"}));
  EXPECT_EQ(parse_ideal_spec("(6)", r), parse_ideal_spec("(2)", r));
  EXPECT_TRUE(parse_ideal_spec("(3)", r).is_unit());
  EXPECT_TRUE(parse_ideal_spec("(0)", r).is_zero());
  EXPECT_EQ(render_members(parse_ideal_spec("(2)", r)), "[0,2,4,6]");
}

TEST(Ideal, PolynomialQuotient) {
  auto r = make("Z/2[x]/(x^3)");
  auto i = parse_ideal_spec("(x)", r);
  std::vector<std::string> got = names(i);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"0", "x", "x+x^2", "x^2"}));
  EXPECT_EQ(ideal_product(i, i).size(), 2u);
}

TEST(Ideal, TwoSidedInNoncommutativeRing) {
  auto r = make("UT2(Z/2)");
  // E11 generates a two-sided ideal containing E12
  auto i = parse_ideal_spec("(E11)", r);
  EXPECT_TRUE(i.contains(*r->find("E12")));
  EXPECT_EQ(i.size(), 4u);
  auto j = parse_ideal_spec("(E12)", r);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_TRUE(ideal_product(j, j).is_zero());
  EXPECT_TRUE(sym_product(j, unit_ideal(r)) == j);
}

TEST(Ideal, SymmetrizedProduct) {
  auto r = make("Z/16");
  auto two = parse_ideal_spec("(2)", r);
  EXPECT_EQ(sym_product(two, two), parse_ideal_spec("(4)", r));
  EXPECT_EQ(sym_product(sym_product(two, two), two), parse_ideal_spec("(8)", r));
  EXPECT_EQ(ideal_sum(parse_ideal_spec("(4)", r), parse_ideal_spec("(8)", r)), parse_ideal_spec("(4)", r));
}

TEST(Ideal, Lattices) {
  EXPECT_EQ(ideal_lattice(make("Z/8")).size(), 4u);
  EXPECT_EQ(ideal_lattice(make("Z/6")).size(), 4u);
  EXPECT_EQ(ideal_lattice(make("M2(Z/2)")).size(), 2u);  // simple ring
  for (const auto& i : ideal_lattice(make("UT2(Z/2)"))) EXPECT_TRUE(is_ideal(i));
}

TEST(Ideal, UnknownElement) {
  auto r = make("Z/8");
  EXPECT_THROW(parse_ideal_spec("(x)", r), Error);
  EXPECT_THROW(parse_ideal_spec("2", r), Error);
}
