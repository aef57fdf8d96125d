#include <gtest/gtest.h>

#include "cgv/matrix.hpp"
#include "cgv/parser.hpp"
#include "random_values.hpp"

namespace cgv {
namespace {

using testing::random_mpoly;
using testing::random_nf;
using testing::random_nonzero_nf;

constexpr int kCases = 1000;

TEST(FieldAxioms, Random) {
  std::mt19937_64 rng(20240101);
  for (int k = 0; k < kCases; ++k) {
    const auto a = random_nf(rng), b = random_nf(rng), c = random_nf(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + NFElem(), a);
    ASSERT_EQ(a * NFElem(1), a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), NFElem(1));
      ASSERT_EQ(nf_invert(a), a.inverse());
    }
  }
}

TEST(NFReduce, IsRingHomomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(0, 8);
  auto random_q = [&] {
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = testing::random_rational(rng);
    return UPoly<BigRational>(std::move(c));
  };
  for (int k = 0; k < kCases; ++k) {
    const auto p = random_q(), q = random_q();
    ASSERT_EQ(nf_reduce(p + q), nf_reduce(p) + nf_reduce(q));
    ASSERT_EQ(nf_reduce(p * q), nf_reduce(p) * nf_reduce(q));
    ASSERT_EQ(nf_reduce(p * minimal_polynomial()), NFElem());
  }
}

TEST(Substitution, IsRingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_mpoly(rng), g = random_mpoly(rng);
    Substitution s;
    s.set(Var::X, random_mpoly(rng, 2)).set(Var::m, MPoly(random_nf(rng, 3)));
    ASSERT_EQ(mp_substitute(f + g, s), mp_substitute(f, s) + mp_substitute(g, s));
    ASSERT_EQ(mp_substitute(f * g, s), mp_substitute(f, s) * mp_substitute(g, s));
  }
}

TEST(Derivative, LinearAndLeibniz) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_mpoly(rng), g = random_mpoly(rng);
    for (Var v : {Var::X, Var::Y, Var::m}) {
      ASSERT_EQ(mp_partial(f + g, v), mp_partial(f, v) + mp_partial(g, v));
      ASSERT_EQ(mp_partial(f * g, v), mp_partial(f, v) * g + f * mp_partial(g, v));
    }
  }
}

TEST(Evaluation, CommutesWithProducts) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_mpoly(rng), g = random_mpoly(rng);
    Substitution s;
    for (Var v : {Var::X, Var::Y, Var::Z, Var::m}) s.set(v, MPoly(random_nf(rng, 4)));
    ASSERT_EQ(mp_evaluate(f * g, s), mp_evaluate(f, s) * mp_evaluate(g, s));
  }
}

UPoly<NFElem> random_upoly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<NFElem> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_nf(rng, 4);
  c.back() = random_nonzero_nf(rng);
  return UPoly<NFElem>(std::move(c));
}

TEST(Gcd, Contracts) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const auto common = random_upoly(rng, 2);
    const auto a = common * random_upoly(rng, 3);
    const auto b = common * random_upoly(rng, 3);
    const auto g = gcd(a, b);
    ASSERT_EQ(g.leading(), NFElem(1));
    ASSERT_TRUE(divmod(a, g).remainder.is_zero());
    ASSERT_TRUE(divmod(b, g).remainder.is_zero());
    ASSERT_TRUE(divmod(g, common.monic()).remainder.is_zero());
    const auto e = extended_gcd(a, b);
    ASSERT_EQ(e.gcd, g);
    ASSERT_EQ(e.s * a + e.t * b, g);
  }
}

TEST(Squarefree, Contracts) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_upoly(rng, 2);
    const auto q = random_upoly(rng, 2);
    const auto f = p * p * q;
    const auto sf = squarefree_part(f);
    ASSERT_EQ(sf.leading(), NFElem(1));
    ASSERT_TRUE(divmod(f, sf).remainder.is_zero());
    if (sf.degree() > 0) ASSERT_EQ(gcd(sf, sf.derivative()).degree(), 0);
    UPoly<NFElem> product = UPoly<NFElem>::constant(NFElem(1));
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
      for (int i = 0; i < mult; ++i) product = product * factor;
    }
    ASSERT_EQ(product, f.monic());
  }
}

TEST(Determinant, AlternatingAndMultilinear) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 100; ++k) {
    RingMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m.set(i, j, random_mpoly(rng, 2));
    }
    ASSERT_EQ(matrix_det(m.with_rows_swapped(0, 2)), -matrix_det(m));
    RingMatrix dup = m;
    for (std::size_t j = 0; j < 3; ++j) dup.set(1, j, m(0, j));
    ASSERT_TRUE(matrix_det(dup).is_zero());
    RingMatrix scaled = m;
    const auto c = random_nf(rng);
    for (std::size_t j = 0; j < 3; ++j) scaled.set(2, j, m(2, j) * MPoly(c));
    ASSERT_EQ(matrix_det(scaled), matrix_det(m) * MPoly(c));
  }
}

TEST(Parser, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < kCases; ++k) {
    const auto f = random_mpoly(rng);
    const auto text = f.to_string();
    ASSERT_EQ(parse_poly(text), f) << text;
    ASSERT_EQ(parse_poly(text).to_string(), text);
  }
}

}  // namespace
}  // namespace cgv
