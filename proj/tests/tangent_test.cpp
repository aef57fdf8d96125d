#include <gtest/gtest.h>

#include "cgv/tangent.hpp"
#include "random_values.hpp"

namespace cgv {
namespace {

TEST(TangentForm, PrintedRowOfC0Matches) {
  const auto form = tangent_form(0, ChartPoint::symbolic());
  const auto printed = printed_tangent_row(0);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(form.affine[k], printed[k]) << k;
  EXPECT_EQ(printed_tangent_check(0).agreement, Agreement::confirmed);
}

TEST(TangentForm, PrintedRowsOfC1C2DisagreeInOneEntry) {
  EXPECT_EQ(printed_tangent_check(1).computed, "matches printed in Y, Z");
  EXPECT_EQ(printed_tangent_check(2).computed, "matches printed in X, Z");
  EXPECT_EQ(printed_tangent_check(1).agreement, Agreement::refuted);
  EXPECT_THROW(printed_tangent_row(3), std::invalid_argument);
}

TEST(TangentForm, EulerRelation) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 50; ++k) {
    const auto p = ChartPoint::at(Var::T, testing::random_nf(rng), testing::random_nf(rng), testing::random_nf(rng));
    for (std::size_t i = 0; i < 4; ++i) {
      Substitution s;
      const auto h = p.homogeneous();
      const Var vars[4] = {Var::X, Var::Y, Var::Z, Var::T};
      for (std::size_t c = 0; c < 4; ++c) s.set(vars[c], h[c]);
      ASSERT_EQ(euler_contraction(i, p), MPoly(3) * mp_substitute(cubic_family().cubics[i], s));
    }
  }
  const auto sym = ChartPoint::symbolic();
  EXPECT_FALSE(euler_contraction(0, sym).is_zero());
}

TEST(TangentForm, SigmaEquivariance) {
  // C_i o sigma = C_{i-1}, so grad C_{i-1}(p) = grad C_i(sigma p) composed with sigma.
  std::mt19937_64 rng(53);
  const auto s = CoordMap::sigma();
  for (int k = 0; k < 20; ++k) {
    const ProjPoint p{testing::random_nonzero_nf(rng), testing::random_nonzero_nf(rng),
                      testing::random_nonzero_nf(rng), testing::random_nonzero_nf(rng)};
    const ProjPoint q = s.apply(p);
    for (std::size_t i = 1; i < 4; ++i) {
      const auto at_p = tangent_form(i - 1, ChartPoint::from_projective(Var::T, p)).projective;
      const auto at_q = tangent_form(i, ChartPoint::from_projective(Var::T, q)).projective;
      // sigma sends coordinate k to position k + 1, so d/dx_k (C_i o sigma) = (dC_i/dx_{k+1}) o sigma.
      const NFElem scale_p = NFElem(1) / p[3];
      const NFElem scale_q = NFElem(1) / q[3];
      for (std::size_t c = 0; c < 4; ++c) {
        const auto lhs = at_p[c] * MPoly(scale_p.pow(2).inverse());
        const auto rhs = at_q[(c + 1) % 4] * MPoly(scale_q.pow(2).inverse());
        ASSERT_EQ(lhs, rhs) << i << " " << c;
      }
    }
  }
}

TEST(Pairs, GenericallyIndependent) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(pairwise_independence(i, j).computed, "independent");
  }
  EXPECT_EQ(pairwise_independence(2, 2).computed, "dependent");
}

TEST(Lambda, ObstructionIsInvertible) {
  EXPECT_EQ(lambda_obstruction(), NFElem(4, -4, -3));
  EXPECT_EQ(lambda_replay().agreement, Agreement::confirmed);
}

TEST(ReferencePoint, StackedRankIsZero) {
  const auto report = reference_point_rank();
  EXPECT_EQ(report.computed, "0");
  EXPECT_EQ(report.agreement, Agreement::refuted);
}

TEST(StackedRank, GenericPoint) {
  const auto p = ChartPoint::at(Var::T, NFElem(1), NFElem(2), NFElem(3));
  EXPECT_EQ(stacked_rank({0, 1, 2}, p, NFElem(1)), 3u);
}

TEST(Lcg, KnownSequence) {
  Lcg g(1);
  EXPECT_EQ(g.next(), 7806831264735756412ULL);
  Lcg h(1);
  const long expected[] = {13, -9, 3, -19, -1, 6};
  for (long e : expected) EXPECT_EQ(h.coordinate(), e);
}

TEST(Survey, FullRankEverywhere) {
  const auto s = rank_survey(100, 1, NFElem(1));
  EXPECT_EQ(s.requested, 100u);
  EXPECT_EQ(s.skipped, 0u);
  ASSERT_EQ(s.histogram.size(), 1u);
  EXPECT_EQ(s.histogram.begin()->first, 3u);
  EXPECT_EQ(s.histogram.begin()->second, 100u);
  EXPECT_EQ(s.points.front(), (std::array<long, 3>{13, -9, 3}));
  EXPECT_EQ(s.report.computed, "3");
  EXPECT_THROW(rank_survey(0, 1, NFElem(1)), std::invalid_argument);
}

TEST(Survey, Deterministic) {
  const auto a = rank_survey(30, 99, NFElem(2));
  const auto b = rank_survey(30, 99, NFElem(2));
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.report, b.report);
}

}  // namespace
}  // namespace cgv
