#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tfhankel/matrix.hpp"

namespace tfh {
namespace {

using testing::q;

TEST(Bareiss, MatchesCofactorExpansionOnRandomMatrices) {
  std::mt19937_64 rng(20240517);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 4;
    const PolyMatrix m = testing::random_matrix(rng, dim, 3);
    if (bareiss_det(m) != testing::cofactor_det(m)) ++failures;
  }
  EXPECT_EQ(failures, 0);
}

TEST(Bareiss, EqualRowsGiveZero) {
  std::mt19937_64 rng(3);
  for (int dim = 2; dim <= 4; ++dim) {
    PolyMatrix m = testing::random_matrix(rng, dim, 3);
    for (int c = 0; c < dim; ++c) m(dim - 1, c) = m(0, c);
    EXPECT_TRUE(bareiss_det(m).is_zero());
  }
}

TEST(Bareiss, ZeroLeadingPivotNeedsRowSwap) {
  PolyMatrix m(3);
  m(0, 1) = UniPoly{1};
  m(1, 0) = UniPoly{0, 1};
  m(2, 2) = UniPoly{q(1, 3), 1};
  EXPECT_EQ(bareiss_det(m), testing::cofactor_det(m));
  EXPECT_EQ(bareiss_det(m), (UniPoly{0, q(-1, 3), -1}));
}

TEST(Bareiss, ScalarDeterminantsAndTwoByTwo) {
  PolyMatrix one(1);
  one(0, 0) = UniPoly{q(2, 3), 1};
  EXPECT_EQ(bareiss_det(one), one(0, 0));

  // [[1, s], [s, 1]] -> 1 - s^2
  PolyMatrix m(2);
  m(0, 0) = UniPoly{1};
  m(0, 1) = UniPoly::variable();
  m(1, 0) = UniPoly::variable();
  m(1, 1) = UniPoly{1};
  EXPECT_EQ(bareiss_det(m), (UniPoly{1, 0, -1}));
  EXPECT_THROW(PolyMatrix(0), std::invalid_argument);
}

}  // namespace
}  // namespace tfh
