#include <gtest/gtest.h>

#include "aln/reasoner.hpp"
#include "fixtures.hpp"

using namespace aln;
using aln::testing::P;

TEST(Reasoner, Satisfiability) {
  EXPECT_FALSE(is_satisfiable(P("(and A (not A))"), {}));
  EXPECT_TRUE(is_satisfiable(Concept::top(), {}));
  auto kb = aln::testing::load_kb("computers.kb");
  EXPECT_FALSE(is_satisfiable(P("(and HomePC (all hasMonitor LCDmonitor) Server "
                                "(all hasMonitor CRTmonitor))"),
                              kb.tbox));
}

TEST(Reasoner, Subsumption) {
  EXPECT_TRUE(subsumes(P("A"), P("(and A B)"), {}));
  EXPECT_FALSE(subsumes(P("(and A B)"), P("A"), {}));
  EXPECT_TRUE(subsumes(P("(at-least 1 R)"), P("(at-least 2 R)"), {}));
  EXPECT_TRUE(subsumes(P("(at-most 2 R)"), P("(at-most 1 R)"), {}));
  EXPECT_TRUE(subsumes(P("(all R A)"), P("(at-most 0 R)"), {}));
  EXPECT_TRUE(subsumes(P("A"), P("BOTTOM"), {}));
  EXPECT_TRUE(subsumes(Concept::top(), P("A"), {}));
  EXPECT_FALSE(subsumes(P("(all R A)"), P("(at-least 1 R)"), {}));
  auto kb = aln::testing::load_kb("computers.kb");
  EXPECT_TRUE(subsumes(P("Computer"), P("Server"), kb.tbox));
  EXPECT_TRUE(subsumes(P("(at-least 1 hasStorageDevice)"), P("Server"), kb.tbox));
  EXPECT_TRUE(equivalent(P("Server"), P("(and Computer (at-least 2 hasCPU))"), kb.tbox));
}

TEST(Reasoner, MatchTypes) {
  EXPECT_EQ(classify_match(P("A"), P("A"), {}), MatchType::Exact);
  EXPECT_EQ(classify_match(P("(and A B)"), P("A"), {}), MatchType::Full);
  EXPECT_EQ(classify_match(P("A"), P("(and A B)"), {}), MatchType::PlugIn);
  EXPECT_EQ(classify_match(P("A"), P("B"), {}), MatchType::Potential);
  EXPECT_EQ(classify_match(P("A"), P("(not A)"), {}), MatchType::Partial);
  EXPECT_THROW(classify_match(P("BOTTOM"), P("A"), {}), UnsatisfiableAdvertisement);
  auto kb = aln::testing::load_kb("computers.kb");
  EXPECT_EQ(classify_match(aln::testing::instance(kb, "sup"),
                           aln::testing::instance(kb, "dem"), kb.tbox),
            MatchType::Partial);
}

TEST(Reasoner, MatchTypeStrings) {
  for (auto m : {MatchType::Exact, MatchType::Full, MatchType::PlugIn,
                 MatchType::Potential, MatchType::Partial})
    EXPECT_EQ(match_type_from_string(to_string(m)), m);
  EXPECT_FALSE(match_type_from_string("nope").has_value());
  EXPECT_LT(precedence(MatchType::Exact), precedence(MatchType::Full));
  EXPECT_LT(precedence(MatchType::PlugIn), precedence(MatchType::Potential));
}
