#include <gtest/gtest.h>

#include "voalab/named.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

namespace {
const State& nv(const char* n) { return named_vector(n); }
}  // namespace

TEST(Delta, OmegaExpansion) {
  const RationalPowerSeries d = delta_apply(nv("hprime"), nv("omega"));
  ASSERT_EQ(d.terms().size(), 3u);
  EXPECT_EQ(d.coefficient(0), nv("omega"));
  EXPECT_EQ(d.coefficient(-1), nv("hprime"));
  EXPECT_EQ(d.coefficient(-2), State::vacuum() * Scalar(frac(1, 36)));
}

TEST(Delta, VacuumAndShifts) {
  const RationalPowerSeries one = delta_apply(nv("hprime"), State::vacuum());
  ASSERT_EQ(one.terms().size(), 1u);
  EXPECT_EQ(one.terms()[0].exponent, 0);
  const RationalPowerSeries y1 = delta_apply(nv("hprime"), nv("y1"));
  ASSERT_EQ(y1.terms().size(), 1u);
  EXPECT_EQ(y1.terms()[0].exponent, frac(1, 3));
  EXPECT_EQ(y1.terms()[0].coeff, nv("y1"));
  const RationalPowerSeries y1m = delta_apply(-nv("hprime"), nv("y1"));
  EXPECT_EQ(y1m.terms()[0].exponent, frac(-1, 3));
}

TEST(Delta, HeisenbergNorm) {
  EXPECT_EQ(heisenberg_norm(nv("hprime")), frac(1, 18));
  EXPECT_THROW(heisenberg_norm(nv("J")), HeisenbergConditionFailure);
}

TEST(ZeroMode, Eigenspaces) {
  const auto e = zero_mode_eigenspaces(nv("hprime"), SectorId::full_l2(), 1);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0].eigenvalue, frac(-1, 3));
  EXPECT_EQ(e[1].eigenvalue, 0);
  EXPECT_EQ(e[2].eigenvalue, frac(1, 3));
  const auto e0 = zero_mode_eigenspaces(nv("hprime"), SectorId::full_l2(), 0);
  ASSERT_EQ(e0.size(), 1u);
  EXPECT_EQ(e0[0].basis.size(), 1u);
  const auto eh = zero_mode_eigenspaces(nv("hprime"), SectorId::full_l2_half(), frac(1, 4));
  ASSERT_EQ(eh.size(), 2u);
  EXPECT_EQ(eh[0].eigenvalue, frac(-1, 6));
  EXPECT_EQ(eh[1].eigenvalue, frac(1, 6));
}

TEST(ZeroMode, ComponentsSumBack) {
  const State v = nv("J") + nv("x1");
  State sum;
  for (const auto& [lambda, c] : zero_mode_components(nv("hprime"), v)) {
    EXPECT_EQ(mode_apply(nv("hprime"), 0, c), c * Scalar(lambda));
    sum += c;
  }
  EXPECT_EQ(sum, v);
}

TEST(TwistedMode, LowPieces) {
  const State& h = nv("hprime");
  EXPECT_TRUE(twisted_mode_apply(nv("y1"), frac(-1, 3), State::vacuum(), h).is_zero());
  EXPECT_EQ(twisted_mode_apply(nv("y2"), frac(-2, 3), State::vacuum(), h), nv("y2"));
  EXPECT_EQ(twisted_mode_apply(nv("y2"), frac(-5, 3), nv("w2"), h), mode_apply(nv("y2"), -2, nv("w2")));
  // the mode index of y1 must lie in 1/3 + Z
  EXPECT_TRUE(twisted_mode_apply(nv("y1"), 0, State::vacuum(), h).is_zero());
}

TEST(PowerSeries, Truncation) {
  RationalPowerSeries s(Rational(2));
  s.add(1, State::vacuum());
  EXPECT_EQ(s.coefficient(1), State::vacuum());
  EXPECT_TRUE(s.coefficient(0).is_zero());
  EXPECT_THROW(s.coefficient(3), TruncationError);
}
