#include <gtest/gtest.h>

#include <random>

#include "cgv/genus.hpp"
#include "cgv/parser.hpp"

namespace cgv {
namespace {

BinaryForm form(const char* text) { return BinaryForm::from_poly(parse_poly(text)); }

TEST(CompleteIntersection, Genus) {
  EXPECT_EQ(ci_genus(5, 5), 76);
  EXPECT_EQ(ci_genus(2, 2), 1);
  EXPECT_EQ(ci_genus(1, 1), 0);
  for (long a = 1; a < 8; ++a) {
    for (long b = 1; b < 8; ++b) EXPECT_EQ(ci_genus(a, b), ci_genus(b, a));
  }
  EXPECT_THROW(ci_genus(0, 5), std::invalid_argument);
}

TEST(RiemannHurwitz, Relation) {
  EXPECT_EQ(rh_relation(3, 1), 4);
  EXPECT_EQ(rh_relation(1, 1), 0);
  EXPECT_EQ(rh_relation(76, 0), 154);
  try {
    rh_relation(1, 2);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.constraint(), "nonnegativity");
  }
}

TEST(QuotientFeasibility, RamificationFour) {
  const auto r = quotient_feasibility({76, 4, 4});
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.budget, 150);
  EXPECT_NE(r.obstruction.find("divisib"), std::string::npos);
  EXPECT_NE(r.obstruction.find("75"), std::string::npos);
}

TEST(QuotientFeasibility, RamificationTwo) {
  const auto r = quotient_feasibility({76, 4, 2});
  EXPECT_TRUE(r.feasible);
  ASSERT_TRUE(r.s_q);
  EXPECT_EQ(*r.s_q, 19);
  EXPECT_TRUE(r.obstruction.empty());
}

TEST(QuotientFeasibility, RoundTrip) {
  for (long p_a = 0; p_a < 120; ++p_a) {
    for (long ram = 0; ram <= 12; ram += 2) {
      const auto r = quotient_feasibility({p_a, 1, ram});
      if (!r.feasible) continue;
      EXPECT_EQ(rh_relation(p_a - 4 * *r.s_q, 0), ram);
    }
  }
  EXPECT_FALSE(quotient_feasibility({76, 4, 3}).feasible);
  EXPECT_FALSE(quotient_feasibility({76, 4, -2}).feasible);
}

TEST(BinaryForm, Parsing) {
  const auto f = form("X^3 - X*Y^2");
  EXPECT_EQ(f.degree, 3);
  EXPECT_EQ(f.to_poly(), parse_poly("X^3 - X*Y^2"));
  EXPECT_THROW(form("X^2 + Y"), std::invalid_argument);
  EXPECT_THROW(form("X*Z"), std::invalid_argument);
  EXPECT_THROW(form("0"), std::invalid_argument);
}

TEST(DistinctPoints, KnownForms) {
  EXPECT_EQ(distinct_points(form("X^3 - X*Y^2")), 3);
  EXPECT_EQ(distinct_points(form("(X - Y)^3")), 1);
  EXPECT_EQ(distinct_points(form("X^2*Y^3")), 2);
  EXPECT_EQ(distinct_points(form("Y^5")), 1);
  EXPECT_EQ(distinct_points(form("X^2 + Y^2")), 2);
  EXPECT_EQ(distinct_points(form("X^3 - r*Y^3")), 3);
  EXPECT_EQ(root_pattern(form("(X - Y)^3*(X + Y)^2")), (std::vector<int>{3, 2}));
}

TEST(DistinctPoints, ScalingAndSwapInvariance) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> root(-4, 4);
  std::uniform_int_distribution<int> count(1, 5);
  const MPoly x = MPoly::variable(Var::X), y = MPoly::variable(Var::Y);
  for (int k = 0; k < 300; ++k) {
    MPoly f(1);
    std::vector<long> roots;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const long a = root(rng);
      roots.push_back(a);
      f = f * (x - MPoly(a) * y);
    }
    std::sort(roots.begin(), roots.end());
    const auto expected = std::unique(roots.begin(), roots.end()) - roots.begin();
    const auto bf = BinaryForm::from_poly(f);
    ASSERT_EQ(distinct_points(bf), expected);
    ASSERT_EQ(distinct_points(BinaryForm::from_poly(f * MPoly(NFElem(-3, 1, 2)))), expected);
    Substitution swap;
    swap.set(Var::X, y).set(Var::Y, x);
    ASSERT_EQ(distinct_points(BinaryForm::from_poly(mp_substitute(f, swap))), expected);
  }
}

TEST(RootConditions, Quintuple) {
  EXPECT_TRUE(quintuple_root_condition(quintuple_family()));
  EXPECT_EQ(quintuple_root_check().agreement, Agreement::confirmed);
  const auto f = form("(X - 2*Y)^5");
  EXPECT_TRUE(quintuple_root_condition(f));
  auto scaled = f;
  for (auto& c : scaled.a) c = c * MPoly(7);
  EXPECT_TRUE(quintuple_root_condition(scaled));
}

TEST(RootConditions, ThreeTwoPrintedFormFails) {
  EXPECT_FALSE(three_two_root_condition(three_two_family()));
  EXPECT_FALSE(three_two_root_condition(three_two_member(NFElem(2))));
  EXPECT_EQ(three_two_root_check().agreement, Agreement::refuted);
  EXPECT_THROW(three_two_member(NFElem()), std::invalid_argument);
}

TEST(Pencil, FactorizationIdentity) {
  const auto p = pencil_restriction();
  EXPECT_TRUE(p.identity_holds);
  EXPECT_EQ(p.unit, NFElem(1));
  const auto reports = witness_pencil_analysis(NFElem(1));
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].computed, "holds");
  EXPECT_EQ(reports[1].computed, "[1:0:-1:0], [0:1:0:-1]");
  EXPECT_EQ(reports[2].computed, "2");
}

TEST(Pencil, WitnessSearch) {
  const auto w = z4_witness_search(5, NFElem(1));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->lambda, NFElem(1));
  EXPECT_EQ(w->mu, NFElem(-5));
  EXPECT_EQ(w->points, 5);
  EXPECT_EQ(z4_witness_report(5, NFElem(1)).computed, "non-empty");
  EXPECT_THROW(z4_witness_search(0, NFElem(1)), std::invalid_argument);
  EXPECT_EQ(pencil_member(NFElem(1), NFElem(0), NFElem(1)).points, 4);
  EXPECT_THROW(pencil_member(NFElem(0), NFElem(0), NFElem(1)), std::invalid_argument);
}

TEST(CubicProbe, ConditionIsNotSufficient) {
  const auto probe = cubic_probe(form("X^3 - X*Y^2"));
  EXPECT_TRUE(probe.condition.is_zero());
  EXPECT_TRUE(probe.condition_says_one_root);
  EXPECT_FALSE(probe.has_one_root);
  EXPECT_TRUE(cubic_probe(form("(X - Y)^3")).agree());
  EXPECT_THROW(cubic_probe(form("X^2")), std::invalid_argument);
}

TEST(GenusReports, Anchors) {
  const auto reports = genus_reports();
  auto find = [&](const std::string& id) {
    for (const auto& r : reports) {
      if (r.check_id == id) return r;
    }
    throw std::runtime_error("missing " + id);
  };
  EXPECT_EQ(find("genus.complete-intersection").agreement, Agreement::confirmed);
  EXPECT_EQ(find("genus.rh-relation").computed, "4");
  EXPECT_EQ(find("genus.ramification.4").computed, "infeasible");
  EXPECT_EQ(find("genus.ramification.4").agreement, Agreement::confirmed);
  EXPECT_EQ(find("genus.ramification.2").agreement, Agreement::indeterminate);
  EXPECT_EQ(find("genus.anchor.delta-sum").agreement, Agreement::refuted);
}

}  // namespace
}  // namespace cgv
