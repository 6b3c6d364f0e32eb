#include <gtest/gtest.h>

#include "voalab/qseries.hpp"

using namespace voalab;

TEST(QSeries, PartitionSeries) {
  const QSeries p = partition_series(10);
  const long long want[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(p[n], want[n]);
  EXPECT_EQ(partition_series(20, 2)[20], 137);
}

TEST(QSeries, ArithmeticRespectsOrder) {
  QSeries a(3), b(3);
  a.at(0) = 1;
  a.at(1) = 1;
  b.at(0) = 1;
  b.at(1) = -1;
  const QSeries c = a * b;
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], -1);
  EXPECT_EQ(c.order(), 3);
  EXPECT_EQ(a.shifted(2)[3], 1);
  EXPECT_EQ(a.shifted(3)[3], 1);
  EXPECT_EQ(a.scaled(3)[1], 3);
  EXPECT_EQ((a - a), QSeries(3));
  EXPECT_EQ(a[99], 0);
}

TEST(QSeries, Rendering) {
  QSeries a(2);
  a.at(0) = 1;
  a.at(2) = 3;
  EXPECT_NE(a.to_string().find("3q^2"), std::string::npos);
}
