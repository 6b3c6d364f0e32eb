#pragma once

#include <string>
#include <vector>

#include "voalab/scalar.hpp"

namespace voalab {

// q^shift * sum_{n=0}^{N} c_n q^n, compared and combined only up to order N.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int order, Rational shift = 0) : shift_(std::move(shift)), c_(order + 1, 0) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& shift() const { return shift_; }
  long long operator[](int n) const { return (n >= 0 && n <= order()) ? c_[n] : 0; }
  long long& at(int n) { return c_.at(n); }
  const std::vector<long long>& coefficients() const { return c_; }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(long long k) const;
  // Multiply by q^k for k >= 0, dropping terms past the order.
  QSeries shifted(int k) const;
  bool operator==(const QSeries& o) const { return shift_ == o.shift_ && c_ == o.c_; }
  bool operator!=(const QSeries& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  Rational shift_{0};
  std::vector<long long> c_;
};

inline QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
inline QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

// prod_{k >= min_part} 1/(1 - q^k)
QSeries partition_series(int order, int min_part = 1);
// Character of the c = 1 Virasoro module L(1, n^2): q^{n^2}(1 - q^{2n+1}) / prod (1 - q^k).
QSeries char_L1(int n, int order);

}  // namespace voalab
