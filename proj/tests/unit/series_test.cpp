#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "oracles.hpp"
#include "tfhankel/errors.hpp"
#include "tfhankel/series.hpp"

namespace tfh {
namespace {

using testing::q;

const UniPoly s = UniPoly::variable();

UniPoly mono(long num, long den, int k) { return UniPoly::monomial(q(num, den), k); }

TEST(Series, AtomLowOrdersInClosedForm) {
  const SeriesTable t = expand(EquationKind::Atom, 9);
  const std::vector<UniPoly> expected{
      UniPoly{1},
      UniPoly(),
      s,
      UniPoly{q(2, 3)},
      mono(-1, 2, 2),
      mono(-4, 15, 1),
      mono(1, 2, 3) + UniPoly{q(-1, 18)},
      mono(24, 35, 2),
      mono(-5, 8, 4) + mono(11, 30, 1),
      mono(-368, 315, 3) + UniPoly{q(2, 27)},
  };
  EXPECT_EQ(t.coeffs, expected);
}

TEST(Series, MagneticLowOrdersInClosedForm) {
  const SeriesTable t = expand(EquationKind::MagneticField, 9);
  const std::vector<UniPoly> expected{
      UniPoly{1}, UniPoly(), s, UniPoly(), mono(-1, 2, 2), UniPoly{q(2, 15)},
      mono(1, 2, 3), mono(-8, 105, 1), mono(-5, 8, 4), mono(8, 63, 2),
  };
  EXPECT_EQ(t.coeffs, expected);
}

TEST(Series, AtomSixthCoefficientByHand) {
  // t^5 coefficient of t(ff'' + f'^2) - ff' - 2t^2 f^3: f6 enters as
  // (6*5 - 6) f6 = 24 f6, and the known lower terms leave 12 s^3 - 4/3.
  const UniPoly f6 = expand(EquationKind::Atom, 6).coeffs[6];
  EXPECT_EQ(f6, (mono(12, 1, 3) + UniPoly{q(-4, 3)}) * q(1, 24));
}

class SeriesResidual : public ::testing::TestWithParam<EquationKind> {};

TEST_P(SeriesResidual, IndependentSubstitutionVanishes) {
  const int order = 24;
  const SeriesTable t = expand(GetParam(), order);
  const auto lhs = testing::ode_lhs(GetParam(), t.coeffs, order);
  for (int n = 0; n < order; ++n) EXPECT_TRUE(lhs[n].is_zero()) << "t^" << n << ": " << lhs[n].to_string();
  for (int n = 0; n < order; ++n) EXPECT_TRUE(residual_coefficient(GetParam(), t.coeffs, n).is_zero());
}

INSTANTIATE_TEST_SUITE_P(Both, SeriesResidual, ::testing::Values(EquationKind::Atom, EquationKind::MagneticField),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Series, DegreePattern) {
  // f_{2k} has degree k; odd coefficients lag by one (atom) or two (magnetic).
  for (auto kind : {EquationKind::Atom, EquationKind::MagneticField}) {
    const SeriesTable t = expand(kind, 40);
    const int lag = kind == EquationKind::Atom ? 1 : 2;
    for (int j = 0; j <= 40; ++j) {
      const int expected = j % 2 == 0 ? j / 2 : std::max(-1, (j - 1) / 2 - lag);
      EXPECT_EQ(t.coeffs[j].degree(), expected) << to_string(kind) << " j=" << j;
    }
  }
}

TEST(Series, TruncationIsAPrefix) {
  const SeriesTable big = expand(EquationKind::Atom, 20);
  EXPECT_EQ(big.truncated(12), expand(EquationKind::Atom, 12));
  EXPECT_EQ(big.truncated(12).order(), 12);
}

TEST(Series, RejectsShortOrders) {
  EXPECT_THROW(expand(EquationKind::Atom, 4), OrderTooSmall);
  EXPECT_NO_THROW(expand(EquationKind::Atom, 5));
}

TEST(Series, NumericEvaluation) {
  const SeriesTable t = expand(EquationKind::Atom, 10);
  const auto c = evaluate_at(t, BigFloat(BigRational(-1, 2), 30), 6);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0], BigFloat(1, 30));
  EXPECT_EQ(c[4], BigFloat(BigRational(-1, 8), 30));
  EXPECT_THROW(evaluate_at(t, BigFloat(0, 30), 11), OrderExceeded);
}

TEST(Series, EquationNames) {
  EXPECT_EQ(to_string(EquationKind::Atom), "atom");
  EXPECT_EQ(parse_equation("magnetic"), EquationKind::MagneticField);
  EXPECT_FALSE(parse_equation("molecule").has_value());
}

TEST(SeriesMemo, ServesTruncationsAcrossThreads) {
  SeriesMemo memo;
  const SeriesTable reference = expand(EquationKind::MagneticField, 18);
  std::vector<std::thread> pool;
  std::vector<SeriesTable> got(4);
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] { got[i] = memo.get(EquationKind::MagneticField, 12 + 2 * i); });
  }
  for (auto& th : pool) th.join();
  for (int i = 0; i < 4; ++i) EXPECT_EQ(got[i], reference.truncated(12 + 2 * i));
  EXPECT_TRUE(memo.peek(EquationKind::MagneticField, 12).has_value());
  EXPECT_FALSE(memo.peek(EquationKind::Atom, 12).has_value());
}

}  // namespace
}  // namespace tfh
