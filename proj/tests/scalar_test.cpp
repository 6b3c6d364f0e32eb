#include <gtest/gtest.h>

#include "voalab/scalar.hpp"

using namespace voalab;

TEST(Scalar, RadicalProductsReduceToBasis) {
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt3(), Scalar::sqrt6());
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt6(), Scalar(2) * Scalar::sqrt3());
  EXPECT_EQ(Scalar::sqrt3() * Scalar::sqrt6(), Scalar(3) * Scalar::sqrt2());
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, RootsOfUnity) {
  const Scalar z = Scalar::zeta3();
  EXPECT_EQ(z * z * z, Scalar(1));
  EXPECT_NE(z, Scalar(1));
  EXPECT_EQ(z, Scalar(frac(-1, 2)) + Scalar(Scalar::kSqrt3I, frac(1, 2)));
  for (long k = 0; k < 6; ++k) EXPECT_EQ(Scalar::zeta6_pow(k), Scalar::zeta6_pow(k + 6));
  EXPECT_EQ(Scalar::zeta6() * Scalar::zeta6(), z);
}

TEST(Scalar, ConjugatePair) {
  EXPECT_EQ((Scalar(1) + Scalar::sqrt2()) * (Scalar::sqrt2() - Scalar(1)), Scalar(1));
}

TEST(Scalar, Inverse) {
  EXPECT_EQ(Scalar(2).inverse(), Scalar(frac(1, 2)));
  EXPECT_EQ(Scalar::sqrt2().inverse(), Scalar(Scalar::kSqrt2, frac(1, 2)));
  EXPECT_EQ(Scalar::zeta3().inverse(), Scalar::zeta3() * Scalar::zeta3());
  EXPECT_EQ(Scalar::zeta3().inverse(), Scalar::zeta3().conj_i());
  const Scalar x = Scalar(3) + Scalar::sqrt6() - Scalar(Scalar::kSqrt2I, frac(5, 7)) + Scalar::i();
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Scalar, Rationality) {
  EXPECT_FALSE(Scalar::sqrt2().is_rational());
  EXPECT_TRUE((Scalar::sqrt2() * Scalar::sqrt2()).is_rational());
  EXPECT_EQ(Scalar(54).as_rational(), Rational(54));
  EXPECT_THROW(Scalar::i().as_rational(), NotRational);
  EXPECT_TRUE(Scalar().is_rational());
}

TEST(Scalar, CoordinatesInLowestTerms) {
  const Scalar x(Scalar::kSqrt3, Rational(6) / Rational(4));
  EXPECT_EQ(x.coord(Scalar::kSqrt3).get_str(), "3/2");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x - x).coords().empty());
}

TEST(Scalar, Rendering) {
  EXPECT_EQ(Scalar(frac(-1, 2)).to_string(), "-1/2");
  EXPECT_EQ(Scalar().to_string(), "0");
  EXPECT_NE(Scalar::zeta3().to_string().find("√3"), std::string::npos);
}

TEST(Scalar, HashAgreesWithEquality) {
  const Scalar a = Scalar::sqrt2() * Scalar::sqrt3();
  EXPECT_EQ(a.hash(), Scalar::sqrt6().hash());
}
