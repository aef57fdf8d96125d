#include <gtest/gtest.h>

#include "cgv/geometry.hpp"
#include "cgv/parser.hpp"
#include "random_values.hpp"

namespace cgv {
namespace {

TEST(Sigma, OrderAndInvolution) {
  const auto s = CoordMap::sigma();
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s.power(2).order(), 2u);
  EXPECT_EQ(s.power(4), CoordMap::identity());
  EXPECT_EQ(s.apply(reference_point(0)), reference_point(1));
}

TEST(Sigma, FixesBothLinesPointwise) {
  const auto s2 = CoordMap::sigma().power(2);
  for (const auto& line : {line_r(), line_r_prime()}) {
    const auto report = fixed_line_check(s2, line);
    EXPECT_EQ(report.computed, "fixed pointwise") << line.name();
    EXPECT_EQ(report.agreement, Agreement::confirmed);
  }
  EXPECT_EQ(fixed_line_check(CoordMap::sigma(), line_r()).computed, "not fixed pointwise");
}

TEST(Sigma, PermutesTheCubics) {
  const auto& f = cubic_family();
  const auto s = CoordMap::sigma();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = find_in_family(apply_map(f.cubics[i], s), f.cubics);
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(*j, (i + 3) % 4);
  }
}

TEST(Sigma, ActionComposes) {
  std::mt19937_64 rng(41);
  const auto s = CoordMap::sigma();
  const CoordMap flip({SignedCoord{0, 1}, SignedCoord{1, -1}, SignedCoord{3, 1}, SignedCoord{2, -1}});
  for (int k = 0; k < 100; ++k) {
    auto f = testing::random_mpoly(rng) * MPoly::variable(Var::T);
    ASSERT_EQ(apply_map(apply_map(f, s), flip), apply_map(f, s.compose(flip)));
    ASSERT_EQ(apply_map(f, s.power(4)), f);
  }
}

TEST(CoordMap, RejectsNonPermutations) {
  EXPECT_THROW(CoordMap({SignedCoord{0, 1}, SignedCoord{0, 1}, SignedCoord{2, 1}, SignedCoord{3, 1}}),
               std::invalid_argument);
  EXPECT_THROW(CoordMap({SignedCoord{0, 2}, SignedCoord{1, 1}, SignedCoord{2, 1}, SignedCoord{3, 1}}),
               std::invalid_argument);
}

TEST(Cubics, FactorizationIdentities) {
  const auto& f = cubic_family();
  const MPoly b(bracket_factor());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f.cubics[i], MPoly::variable(f.cofactors[i]) * f.quadrics[i]);
    EXPECT_EQ(f.quadrics[i], b * f.brackets[i] + f.outer[i]);
    EXPECT_EQ(parse_poly(f.printed[i]), f.cubics[i]);
    EXPECT_TRUE(f.cubics[i].is_homogeneous_in(std::array{Var::X, Var::Y, Var::Z, Var::T}));
  }
  EXPECT_EQ(f.quadrics[0].to_string(), parse_poly("(3*r-2)*((X+m*Y+r^2*Z)*T+(r+1)*X*Y)+(-6*r^2+2*r+2)*X*Z"
                                                  "+(-2*r^2-5*r+5)*Y*Z")
                                           .to_string());
}

TEST(Cubics, VanishAtReferencePoints) {
  const auto& f = cubic_family();
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& c : f.cubics) EXPECT_TRUE(evaluate_at(c, reference_point(k)).is_zero());
  }
}

TEST(Points, Normalization) {
  const ProjPoint p{NFElem(0), NFElem(2), NFElem(4), NFElem(0)};
  EXPECT_EQ(point_to_string(p), "[0:1:2:0]");
  EXPECT_TRUE(same_point(p, ProjPoint{NFElem(0), NFElem(-1), NFElem(-2), NFElem(0)}));
  EXPECT_THROW(normalized(ProjPoint{}), std::invalid_argument);
}

TEST(Lines, Parametrizations) {
  const auto p = line_r().point(NFElem(1), NFElem(2));
  EXPECT_EQ(point_to_string(p), "[1:2:-1:-2]");
  const auto q = line_r_prime().point(NFElem(1), NFElem(2));
  EXPECT_EQ(point_to_string(q), "[1:2:1:2]");
}

}  // namespace
}  // namespace cgv
