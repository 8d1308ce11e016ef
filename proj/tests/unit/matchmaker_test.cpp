#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "aln/matchmaker.hpp"
#include "aln/syntax.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace aln;
using aln::testing::P;

namespace {
std::vector<std::string> ids(const RankedList& r) {
  std::vector<std::string> out;
  for (const auto& m : r.reports) out.push_back(m.offer_id);
  return out;
}
}  // namespace

TEST(Rank, SmallPool) {
  std::vector<Offer> offers = {{"o1", P("(and A B)")}, {"o2", P("A")}, {"o3", P("TOP")}};
  auto r = rank_offers(P("A"), offers, {});
  EXPECT_EQ(ids(r), (std::vector<std::string>{"o2", "o1", "o3"}));
  EXPECT_EQ(r.reports[0].match_type, MatchType::Exact);
  EXPECT_EQ(r.reports[1].match_type, MatchType::Full);
  EXPECT_EQ(r.reports[2].match_type, MatchType::PlugIn);
  EXPECT_EQ(r.reports[2].penalty, 1u);
  EXPECT_EQ(std::get<Hypothesis>(r.reports[2].explanation).h, P("A"));
}

TEST(Rank, SelfIsExact) {
  auto r = rank_offers(P("(and A (all R B))"), {{"x", P("(and (all R B) A)")}}, {});
  ASSERT_EQ(r.reports.size(), 1u);
  EXPECT_EQ(r.reports[0].match_type, MatchType::Exact);
  EXPECT_EQ(r.reports[0].penalty, 0u);
}

TEST(Rank, MonitorPool) {
  auto kb = aln::testing::load_kb("computers.kb");
  std::vector<Offer> offers = {{"dem2", aln::testing::instance(kb, "dem2")},
                               {"dem1", aln::testing::instance(kb, "dem1")}};
  auto r = rank_offers(aln::testing::instance(kb, "sup4"), offers, kb.tbox);
  EXPECT_EQ(ids(r), (std::vector<std::string>{"dem1", "dem2"}));
  EXPECT_EQ(r.reports[0].penalty, 1u);
  EXPECT_EQ(r.reports[1].penalty, 3u);
  EXPECT_TRUE(std::holds_alternative<Contraction>(r.reports[0].explanation));
}

TEST(Rank, OrderingInvariantsAndDeterminism) {
  std::vector<Offer> offers = {
      {"a", P("(not A)")},        {"b", P("B")},
      {"c", P("(and A B C)")},    {"d", P("(and (not A) (not B))")},
      {"e", P("(and A C)")},      {"f", P("(and B (not C))")},
      {"g", P("(and A B)")},      {"h", P("(and A (not B))")},
      {"bad", P("(and A (not A))")}};
  auto request = P("(and A B)");
  auto base = rank_offers(request, offers, {}, 1);
  bool seen_partial = false;
  for (std::size_t i = 0; i < base.reports.size(); ++i) {
    const auto& m = base.reports[i];
    bool partial = m.match_type == MatchType::Partial;
    EXPECT_FALSE(seen_partial && !partial);
    seen_partial |= partial;
    if (m.match_type == MatchType::Exact || m.match_type == MatchType::Full)
      EXPECT_EQ(m.penalty, 0u);
    if (partial) EXPECT_GE(m.penalty, 1u);
    if (i > 0 && (base.reports[i - 1].match_type == MatchType::Partial) == partial)
      EXPECT_LE(base.reports[i - 1].penalty, m.penalty);
  }
  ASSERT_EQ(base.rejected.size(), 1u);
  EXPECT_EQ(base.rejected[0].offer_id, "bad");
  EXPECT_EQ(base.rejected[0].code, "unsatisfiable-advertisement");

  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(offers.begin(), offers.end(), rng);
    auto r = rank_offers(request, offers, {}, 4);
    EXPECT_EQ(ids(r), ids(base));
    EXPECT_EQ(format_table(r), format_table(base));
  }
}

TEST(Rank, FreshConjunctKeepsPosition) {
  std::vector<Offer> offers = {{"a", P("A")}, {"b", P("TOP")}, {"c", P("(and A B C)")}};
  auto request = P("(and A B (all R D))");
  auto before = ids(rank_offers(request, offers, {}));
  for (auto& o : offers) {
    auto saved = o.second;
    o.second = Concept::conj({o.second, P("Unrelated")});
    EXPECT_EQ(ids(rank_offers(request, offers, {})), before) << o.first;
    o.second = saved;
  }
}

// Within one penalty the class decides; a fresh name can demote plug-in to
// potential and so reorder offers of equal penalty.
TEST(Rank, FreshConjunctMayReorderEqualPenalties) {
  std::vector<Offer> offers = {{"a", P("(and A Unrelated)")}, {"b", P("B")}};
  auto r = rank_offers(P("(and A B)"), offers, {});
  EXPECT_EQ(ids(r), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(r.reports[0].penalty, r.reports[1].penalty);
}

TEST(Rank, TieGroups) {
  std::vector<Offer> offers = {{"y", P("A")}, {"x", P("B")}, {"z", P("(and A B)")}};
  auto r = rank_offers(P("(and A B)"), offers, {});
  ASSERT_EQ(r.tie_groups.size(), 2u);
  EXPECT_EQ(r.tie_groups[1], (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_EQ(r.reports[1].offer_id, "x");
}

TEST(Rank, UnsatisfiableRequest) {
  EXPECT_THROW(rank_offers(P("BOTTOM"), {{"a", P("A")}}, {}), UnsatisfiableAdvertisement);
}

TEST(Format, TableAndJson) {
  std::vector<Offer> offers = {{"o1", P("A")}, {"o2", P("(not B)")}, {"o3", P("BOTTOM")}};
  auto r = rank_offers(P("(and A B)"), offers, {});
  EXPECT_EQ(format_table(r),
            "rank\tid\tclass\tpenalty\texplanation\n"
            "1\to1\tplug-in\t1\tH=B\n"
            "2\to2\tpartial\t1\tG=(not B) K=TOP\n"
            "-\to3\trejected\t-\tunsatisfiable-advertisement\n");
  auto j = nlohmann::json::parse(format_json(r));
  EXPECT_EQ(j["reports"][0]["hypothesis"], "B");
  EXPECT_EQ(j["reports"][1]["give_up"], "(not B)");
  EXPECT_EQ(j["reports"][1]["class"], "partial");
  EXPECT_EQ(j["ties"].size(), 2u);
  EXPECT_EQ(j["rejected"][0]["id"], "o3");
}

TEST(Rnorm, Basics) {
  Preference abc{{"a"}, {"b"}, {"c"}};
  EXPECT_EQ(rnorm({"a", "b", "c"}, abc), make_rational(1, 1));
  EXPECT_EQ(rnorm({"c", "b", "a"}, abc), make_rational(0, 1));
  EXPECT_EQ(rnorm({"a", "c", "b"}, abc), make_rational(2, 3));
  EXPECT_EQ(rnorm({"a", "c", "b"}, abc).str(), "2/3");
}

TEST(Rnorm, TiesAndReversal) {
  Preference p{{"a", "b"}, {"c"}, {"d", "e"}};
  std::vector<std::string> sys{"b", "d", "a", "c", "e"};
  auto fwd = rnorm(sys, p);
  auto rev = rnorm(std::vector<std::string>(sys.rbegin(), sys.rend()), p);
  EXPECT_EQ(fwd.num * rev.den + rev.num * fwd.den, fwd.den * rev.den);
  // Relabeling.
  Preference q{{"x", "y"}, {"z"}, {"u", "v"}};
  EXPECT_EQ(rnorm({"y", "u", "x", "z", "v"}, q), fwd);
}

TEST(Rnorm, Errors) {
  EXPECT_THROW(rnorm({"a", "b"}, {{"a", "b"}}), EmptyPreference);
  EXPECT_THROW(rnorm({"a", "c"}, {{"a"}, {"b"}}), Error);
  EXPECT_THROW(rnorm({"a", "a"}, {{"a"}, {"b"}}), Error);
}

TEST(Vsm, Basics) {
  std::vector<Offer> offers = {{"same", P("(and A B)")}, {"other", P("C")}, {"half", P("A")}};
  auto s = vsm_rank(P("(and A B)"), offers, {});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].id, "same");
  EXPECT_NEAR(s[0].score, 1.0, 1e-12);
  EXPECT_EQ(s.back().id, "other");
  EXPECT_EQ(s.back().score, 0.0);
}

TEST(Vsm, TermsFromNormalForm) {
  auto terms = vsm_terms(P("(and (not A) (all R (and B (at-least 1 S))))"), {});
  std::sort(terms.begin(), terms.end());
  EXPECT_EQ(terms, (std::vector<std::string>{"A", "B", "R", "S"}));
}

TEST(Vsm, MonitorPool) {
  auto kb = aln::testing::load_kb("computers.kb");
  std::vector<Offer> offers = {{"dem2", aln::testing::instance(kb, "dem2")},
                               {"dem1", aln::testing::instance(kb, "dem1")}};
  auto s = vsm_rank(aln::testing::instance(kb, "sup4"), offers, kb.tbox);
  EXPECT_EQ(s[0].id, "dem1");
  EXPECT_GT(s[0].score, s[1].score);
}
