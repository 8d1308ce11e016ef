#include <gtest/gtest.h>

#include "aln/checkers.hpp"
#include "aln/normal_form.hpp"
#include "fixtures.hpp"

using namespace aln;
using aln::testing::P;

TEST(Checkers, CapSolution) {
  EXPECT_TRUE(is_cap_solution(P("B"), P("A"), P("(and A B)"), {}));
  EXPECT_FALSE(is_cap_solution(P("C"), P("A"), P("(and A B)"), {}));
  EXPECT_FALSE(is_cap_solution(P("(not A)"), P("A"), P("(not A)"), {}));
}

TEST(Checkers, DemandIsSolutionIffConsistent) {
  EXPECT_TRUE(is_cap_solution(P("(and B C)"), P("A"), P("(and B C)"), {}));
  EXPECT_FALSE(is_cap_solution(P("(not A)"), P("A"), P("(not A)"), {}));
}

TEST(Checkers, Irreducible) {
  EXPECT_TRUE(is_irreducible(P("B"), P("A"), P("(and A B)"), {}));
  EXPECT_FALSE(is_irreducible(P("(and A B)"), P("A"), P("(and A B)"), {}));
  // Nested: B inside the filler is redundant.
  EXPECT_FALSE(is_irreducible(P("(all R (and A B))"), P("(all R B)"),
                              P("(all R (and A B))"), {}));
}

TEST(Checkers, SingleDeletionsTreatZeroUnitAsOne) {
  auto n = cnf(P("(and A (at-most 0 R))"), {});
  EXPECT_EQ(single_deletions(n).size(), 2u);
}

TEST(Checkers, MaximalVsLengthMinimal) {
  auto kb = aln::testing::load_kb("maximal-solution.kb");
  const auto& c = aln::testing::instance(kb, "c");
  const auto& d = aln::testing::instance(kb, "d");
  auto pool = candidate_pool(c, d, kb.tbox);
  auto a23 = P("(and A2 A3)"), b = P("B");
  EXPECT_TRUE(is_subsumption_maximal_witness(a23, c, d, kb.tbox, pool));
  EXPECT_FALSE(is_length_minimal_witness(a23, c, d, kb.tbox, pool));
  EXPECT_FALSE(is_subsumption_maximal_witness(b, c, d, kb.tbox, pool));
  EXPECT_TRUE(is_length_minimal_witness(b, c, d, kb.tbox, pool));
}

TEST(Checkers, PoolBudget) {
  EXPECT_THROW(candidate_pool(P("A"), P("(and B C D E F)"), {}, 3),
               EnumerationBudgetExceeded);
}

TEST(Checkers, SplitContractions) {
  auto kb = aln::testing::load_kb("computers.kb");
  const auto& dem = aln::testing::instance(kb, "dem");
  const auto& sup = aln::testing::instance(kb, "sup");
  auto g_ge = P("HomePC");
  auto k_ge = P("(and PC (at-least 1 hasSoftware) (exactly 1 hasOS) (all hasMonitor LCDmonitor))");
  auto g_all = P("(all hasMonitor LCDmonitor)");
  auto k_all = P("HomePC");
  EXPECT_TRUE(is_contraction(g_ge, k_ge, dem, sup, kb.tbox));
  EXPECT_TRUE(is_contraction(g_all, k_all, dem, sup, kb.tbox));
  EXPECT_TRUE(is_nmin_contraction(g_all, k_all, dem, sup, kb.tbox));
  EXPECT_FALSE(is_nmin_contraction(g_ge, k_ge, dem, sup, kb.tbox));
  EXPECT_FALSE(is_contraction(P("TOP"), dem, dem, sup, kb.tbox));
}
