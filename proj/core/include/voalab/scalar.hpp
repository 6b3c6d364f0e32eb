#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace voalab {

using Rational = mpq_class;
using Integer = mpz_class;

// n/d in lowest terms (mpq_class(n, d) does not canonicalize).
inline Rational frac(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rational r(n, static_cast<unsigned long>(d));
  r.canonicalize();
  return r;
}

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotRational : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of K = Q(i, sqrt2, sqrt3), stored sparsely over the basis
// {1, r2, r3, r6} x {1, i}. A basis index packs the radical bits
// (bit0 = sqrt2, bit1 = sqrt3) with bit2 = i.
class Scalar {
 public:
  enum Basis : uint8_t {
    kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3,
    kI = 4, kSqrt2I = 5, kSqrt3I = 6, kSqrt6I = 7
  };

  struct Coord {
    uint8_t basis;
    Rational value;
  };

  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
  Scalar(const Rational& v);  // NOLINT
  Scalar(Basis b, const Rational& v);

  static Scalar sqrt2() { return {kSqrt2, 1}; }
  static Scalar sqrt3() { return {kSqrt3, 1}; }
  static Scalar sqrt6() { return {kSqrt6, 1}; }
  static Scalar i() { return {kI, 1}; }
  static Scalar zeta3();  // (-1 + sqrt3 i)/2
  static Scalar zeta6();  // (1 + sqrt3 i)/2
  // exp(2 pi i k / 6)
  static Scalar zeta6_pow(long k);

  bool is_zero() const { return coords_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  Rational as_rational() const;
  Rational coord(unsigned basis) const;
  const auto& coords() const { return coords_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar inverse() const;

  // Galois automorphisms: flip the sign of i, sqrt2 or sqrt3.
  Scalar conj_i() const { return flip(4); }
  Scalar conj_sqrt2() const { return flip(1); }
  Scalar conj_sqrt3() const { return flip(2); }

  // a += b * c without a temporary.
  void add_product(const Scalar& b, const Scalar& c);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  Scalar flip(unsigned bit) const;
  void add_coord(uint8_t basis, const Rational& v);

  boost::container::small_vector<Coord, 2> coords_;  // sorted by basis, nonzero
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.add_product(a, b);
  return r;
}
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

std::string rational_to_string(const Rational& r);

}  // namespace voalab
