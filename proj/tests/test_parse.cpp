#include <gtest/gtest.h>

#include "mcf/parse.hpp"

using namespace mcf;

TEST(Parse, CanonicalRoundTrip) {
  const std::vector<std::pair<std::string, std::string>> corpus{
      {"Z/8", "Z/8"},
      {" Z / 8 ", "Z/8"},
      {"Z/2", "Z/2"},
      {"F_2", "Z/2"},
      {"F_3", "Z/3"},
      {"Z/16", "Z/16"},
      {"Z/2[x]/(x^3)", "Z/2[x]/(x^3)"},
      {"Z/2 [x] / (x^2)", "Z/2[x]/(x^2)"},
      {"F_2[x]/(x^2)", "Z/2[x]/(x^2)"},
      {"Z/2[x]/(1+x+x^2)", "Z/2[x]/(1+x+x^2)"},
      {"Z/2[x]/(x^2+x+1)", "Z/2[x]/(1+x+x^2)"},
      {"Z/3[x]/(x^2-1)", "Z/3[x]/(2+x^2)"},
      {"Z/4[x]/(x^2+2x)", "Z/4[x]/(2x+x^2)"},
      {"Z/3[x]/(x^2+x+x+2)", "Z/3[x]/(2+2x+x^2)"},
      {"Z/2[x]/(3x^2+x^2+x^3)", "Z/2[x]/(x^3)"},
      {"UT2(Z/2)", "UT2(Z/2)"},
      {"UT2(F_2)", "UT2(Z/2)"},
      {"UT3(Z/2)", "UT3(Z/2)"},
      {"M2(Z/2)", "M2(Z/2)"},
      {"Z/2 x Z/4", "Z/2 x Z/4"},
      {"Z/2xZ/3xZ/2", "Z/2 x Z/3 x Z/2"},
      {"Z/2[x]/(x^2) x Z/2", "Z/2[x]/(x^2) x Z/2"},
      {"UT2(Z/2 x Z/2)", "UT2(Z/2 x Z/2)"},
      {"(Z/3)", "Z/3"},
  };
  for (const auto& [text, canonical] : corpus) {
    RingSpec spec = parse_ring_spec(text);
    EXPECT_EQ(render(spec), canonical) << text;
    EXPECT_EQ(parse_ring_spec(render(spec)), spec) << text;
  }
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "Z/1", "Z/0", "Z/", "Z8", "F_4", "Z/2[x]/(2x^2+1)", "Z/4[x]/(2x)", "Z/2[x]/(1)",
                          "Z/2[x]/(x^2", "UT(Z/2)", "UT1(Z/2)", "M2Z/2", "Z/8 x", "Z/8 y", "Q"}) {
    EXPECT_THROW(parse_ring_spec(bad), Error) << bad;
  }
  try {
    parse_ring_spec("Z/8 ? Z/2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
  }
}

TEST(Parse, IdealLists) {
  auto r = build_ring(parse_ring_spec("Z/8"));
  auto ideals = parse_ideal_list("(2), (4),(0),(1),(2,4)", r);
  ASSERT_EQ(ideals.size(), 5u);
  EXPECT_EQ(ideals[0].size(), 4u);
  EXPECT_EQ(ideals[1].size(), 2u);
  EXPECT_TRUE(ideals[2].is_zero());
  EXPECT_TRUE(ideals[3].is_unit());
  EXPECT_EQ(ideals[4], ideals[0]);
}

TEST(Parse, IdealNamesWithCommas) {
  auto r = build_ring(parse_ring_spec("Z/2 x Z/4"));
  auto i = parse_ideal_spec("((0,2))", r);
  EXPECT_EQ(i.size(), 2u);
  auto j = parse_ideal_spec("((1,0), (0,2))", r);
  EXPECT_EQ(j.size(), 4u);
  auto p = build_ring(parse_ring_spec("Z/2[x]/(x^3)"));
  EXPECT_EQ(parse_ideal_spec("(x + x^2)", p).size(), 4u);
  EXPECT_THROW(parse_ideal_spec("(x^2+x)", p), Error);  // names are canonical only
}

TEST(Parse, Slots) {
  EXPECT_EQ(parse_slots("E, GL,GL"), (std::vector<SlotKind>{SlotKind::E, SlotKind::GL, SlotKind::GL}));
  EXPECT_EQ(render_slots(parse_slots("GL,E")), "GL,E");
  EXPECT_THROW(parse_slots("E,SL"), Error);
}
