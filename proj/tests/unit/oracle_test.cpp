#include <gtest/gtest.h>

#include "aln/oracle.hpp"
#include "fixtures.hpp"

using namespace aln;
using aln::testing::P;

TEST(Oracle, BuildsVerifiedModels) {
  auto c = P("(and A (at-least 2 R) (at-most 3 R) (all R (and B (not C))))");
  auto m = oracle_model(c);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(holds(m->interpretation, m->root, c));
  EXPECT_GE(m->interpretation.successors("R", m->root), 2u);
}

TEST(Oracle, Unsatisfiable) {
  EXPECT_FALSE(oracle_satisfiable(P("(and A (not A))")));
  EXPECT_FALSE(oracle_satisfiable(P("(and (at-least 1 R) (all R (and A (not A))))")));
  EXPECT_TRUE(oracle_satisfiable(P("(all R (and A (not A)))")));
}

TEST(Oracle, Countermodels) {
  EXPECT_FALSE(oracle_countermodel(P("(and A B)"), P("A")).has_value());
  auto m = oracle_countermodel(P("A"), P("(and A B)"));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(holds(m->interpretation, m->root, P("A")));
  EXPECT_FALSE(holds(m->interpretation, m->root, P("(and A B)")));
  EXPECT_FALSE(oracle_countermodel(P("(at-most 0 R)"), P("(all R C)")).has_value());
}

TEST(Oracle, Bounds) {
  OracleBounds tight;
  tight.max_number = 2;
  EXPECT_THROW(oracle_satisfiable(P("(at-least 3 R)"), tight), OracleBudgetExceeded);
  tight.max_nesting = 1;
  tight.max_number = 4;
  EXPECT_THROW(oracle_satisfiable(P("(all R (all S A))"), tight), OracleBudgetExceeded);
}

TEST(Oracle, Holds) {
  Interpretation i;
  auto x = i.fresh(), y = i.fresh();
  i.concepts["A"].insert(y);
  i.roles["R"].insert({x, y});
  EXPECT_TRUE(holds(i, x, P("(and (all R A) (at-least 1 R) (at-most 1 R) (not A))")));
  EXPECT_FALSE(holds(i, x, P("(at-least 2 R)")));
  EXPECT_FALSE(holds(i, x, Concept::bottom()));
}
