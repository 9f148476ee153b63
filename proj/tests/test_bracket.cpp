#include <gtest/gtest.h>

#include <set>

#include "mcf/bracket.hpp"

using namespace mcf;

TEST(Bracket, CatalanCounts) {
  const int catalan[] = {0, 1, 2, 5, 14};
  for (int m = 1; m <= 4; ++m) {
    auto trees = enumerate_bracketings(m);
    EXPECT_EQ(static_cast<int>(trees.size()), catalan[m]);
    std::set<std::string> distinct;
    for (const auto& t : trees) {
      distinct.insert(t.render());
      EXPECT_EQ(t.first_leaf(), 0);
      EXPECT_EQ(t.last_leaf(), m);
      EXPECT_EQ(parse_tree(t.render()), t);
    }
    EXPECT_EQ(static_cast<int>(distinct.size()), catalan[m]);
  }
  EXPECT_THROW(enumerate_bracketings(0), Error);
  EXPECT_THROW(enumerate_bracketings(5), Error);
}

TEST(Bracket, OrderAndStandardForm) {
  auto two = enumerate_bracketings(2);
  EXPECT_EQ(two[0].render(), "[[0,1],2]");
  EXPECT_EQ(two[1].render(), "[0,[1,2]]");
  EXPECT_EQ(standard_form(3).render(), "[[[0,1],2],3]");
  EXPECT_EQ(enumerate_bracketings(3).front(), standard_form(3));
}

TEST(Bracket, Parse) {
  EXPECT_EQ(parse_tree(" [ [0, 1] , [2,3] ] ").render(), "[[0,1],[2,3]]");
  EXPECT_EQ(parse_tree("0").leaf_count(), 1);
  for (const char* bad : {"", "[0,2]", "[1,0]", "[0,1", "[0,1]]", "[0;1]", "[1,2]", "[[0,1],x]"})
    EXPECT_THROW(parse_tree(bad), Error) << bad;
}
