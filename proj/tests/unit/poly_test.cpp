#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tfhankel/errors.hpp"
#include "tfhankel/poly.hpp"

namespace tfh {
namespace {

using testing::q;

TEST(UniPoly, NormalizesTrailingZeros) {
  const UniPoly p{1, 0, 0};
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(UniPoly{0}.is_zero());
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ((UniPoly{1, 2} - UniPoly{1, 2}).degree(), -1);
}

TEST(UniPoly, Printing) {
  const UniPoly h = UniPoly::monomial(q(-1, 4), 5) + UniPoly::monomial(q(-13, 300), 2);
  EXPECT_EQ(h.to_string(), "-1/4*s^5 - 13/300*s^2");
  EXPECT_EQ(UniPoly().to_string(), "0");
}

TEST(UniPoly, RingLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly a = testing::random_poly(rng, 4);
    const UniPoly b = testing::random_poly(rng, 4);
    const UniPoly c = testing::random_poly(rng, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    const BigRational x = q(trial - 20, 7);
    EXPECT_EQ((a * b)(x), a(x) * b(x));
  }
}

TEST(UniPoly, DivisionIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly a = testing::random_poly(rng, 6);
    UniPoly b = testing::random_poly(rng, 3);
    if (b.is_zero()) b = UniPoly{1};
    const auto [quot, rem] = a.divmod(b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree() == 0 ? 0 : b.degree());
    EXPECT_EQ((a * b).exact_div(b), a);
  }
  EXPECT_THROW((UniPoly{1, 1}.divmod(UniPoly())), ZeroPolynomial);
  EXPECT_THROW(((UniPoly{1, 0, 1}).exact_div(UniPoly{1, 1})), std::domain_error);
}

TEST(UniPoly, GcdIsMonicCommonFactor) {
  const UniPoly f{-1, 1};        // s - 1
  const UniPoly g{q(1, 2), 3};   // 3s + 1/2
  const UniPoly h{2, 0, 5};
  const UniPoly d = gcd(f * g * q(4), f * h);
  EXPECT_EQ(d, f);
  EXPECT_EQ(gcd(UniPoly(), UniPoly()), UniPoly());
}

TEST(UniPoly, DerivativeAndEvaluation) {
  const UniPoly p{1, 2, 3};
  EXPECT_EQ(p.derivative(), (UniPoly{2, 6}));
  EXPECT_EQ(p(q(1, 2)), q(11, 4));
  EXPECT_EQ(p(BigFloat(2, 20)), BigFloat(17, 20));
  EXPECT_EQ((UniPoly{q(1, 6), q(3, 4)}).denominator_lcm(), BigInt(12));
}

}  // namespace
}  // namespace tfh
