#include <gtest/gtest.h>

#include "voalab/linalg.hpp"

using namespace voalab;

TEST(SparseRref, RankAndKernel) {
  SparseRref r(3);
  EXPECT_TRUE(r.add_row({{0, Scalar(1)}, {1, Scalar(2)}}));
  EXPECT_TRUE(r.add_row({{1, Scalar(1)}, {2, Scalar::sqrt2()}}));
  EXPECT_FALSE(r.add_row({{0, Scalar(2)}, {1, Scalar(5)}, {2, Scalar::sqrt2()}}));
  EXPECT_EQ(r.rank(), 2);
  const auto k = r.kernel();
  ASSERT_EQ(k.size(), 1u);
  // check the kernel vector against the first row
  Scalar dot;
  for (const auto& [j, c] : k[0]) {
    if (j == 0) dot += c;
    if (j == 1) dot += Scalar(2) * c;
  }
  EXPECT_TRUE(dot.is_zero());
}

TEST(Bareiss, SolvesAndDetectsSingular) {
  const auto x = bareiss_solve({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], frac(4, 5));
  EXPECT_EQ((*x)[1], frac(7, 5));
  EXPECT_FALSE(bareiss_solve({{1, 2}, {2, 4}}, {1, 2}).has_value());
}

TEST(RationalSolve, Overdetermined) {
  const std::vector<SparseRowQ> rows = {{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}};
  const RationalSolve s = solve_rational(rows, {2, 3, 5}, 2);
  EXPECT_EQ(s.rank, 2);
  ASSERT_TRUE(s.x.has_value());
  EXPECT_EQ((*s.x)[0], 2);
  EXPECT_EQ((*s.x)[1], 3);
  EXPECT_EQ(modular_rank(rows, 2), 2);
}
