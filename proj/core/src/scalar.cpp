#include "voalab/scalar.hpp"

#include <algorithm>
#include <functional>

namespace voalab {

namespace {

const char* const kBasisNames[8] = {"", "√2", "√3", "√6", "i", "√2·i", "√3·i", "√6·i"};

}  // namespace

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Scalar::Scalar(long v) {
  if (v != 0) coords_.push_back({kOne, Rational(v)});
}

Scalar::Scalar(const Rational& v) {
  if (sgn(v) != 0) coords_.push_back({kOne, v});
}

Scalar::Scalar(Basis b, const Rational& v) {
  if (sgn(v) != 0) coords_.push_back({b, v});
}

Scalar Scalar::zeta3() {
  Scalar r(kOne, frac(-1, 2));
  r.add_coord(kSqrt3I, frac(1, 2));
  return r;
}

Scalar Scalar::zeta6() {
  Scalar r(kOne, frac(1, 2));
  r.add_coord(kSqrt3I, frac(1, 2));
  return r;
}

Scalar Scalar::zeta6_pow(long k) {
  k %= 6;
  if (k < 0) k += 6;
  Scalar r(1);
  for (long j = 0; j < k; ++j) r *= zeta6();
  return r;
}

bool Scalar::is_one() const {
  return coords_.size() == 1 && coords_[0].basis == kOne && coords_[0].value == 1;
}

bool Scalar::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_[0].basis == kOne);
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw NotRational("scalar " + to_string() + " is not rational");
  return coords_.empty() ? Rational(0) : coords_[0].value;
}

Rational Scalar::coord(unsigned basis) const {
  for (const auto& c : coords_)
    if (c.basis == basis) return c.value;
  return 0;
}

void Scalar::add_coord(uint8_t basis, const Rational& v) {
  if (sgn(v) == 0) return;
  auto it = std::lower_bound(coords_.begin(), coords_.end(), basis,
                             [](const Coord& c, uint8_t b) { return c.basis < b; });
  if (it != coords_.end() && it->basis == basis) {
    it->value += v;
    if (sgn(it->value) == 0) coords_.erase(it);
  } else {
    coords_.insert(it, Coord{basis, v});
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& c : r.coords_) c.value = -c.value;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& c : o.coords_) add_coord(c.basis, c.value);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& c : o.coords_) add_coord(c.basis, -c.value);
  return *this;
}

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  Rational t;
  for (const auto& x : b.coords_) {
    for (const auto& y : c.coords_) {
      const unsigned rx = x.basis & 3u, ry = y.basis & 3u;
      const unsigned basis = (rx ^ ry) | ((x.basis ^ y.basis) & 4u);
      long factor = 1;
      if (rx & ry & 1u) factor *= 2;
      if (rx & ry & 2u) factor *= 3;
      if (x.basis & y.basis & 4u) factor = -factor;
      mpq_mul(t.get_mpq_t(), x.value.get_mpq_t(), y.value.get_mpq_t());
      if (factor != 1) t *= factor;
      add_coord(static_cast<uint8_t>(basis), t);
    }
  }
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar r;
  r.add_product(*this, o);
  *this = std::move(r);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& c : coords_) c.value *= r;
  return *this;
}

Scalar Scalar::flip(unsigned bit) const {
  Scalar r(*this);
  for (auto& c : r.coords_)
    if (c.basis & bit) c.value = -c.value;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  // Multiply by Galois conjugates until the norm lands in Q.
  const Scalar ci = conj_i();
  const Scalar b = *this * ci;  // in Q(sqrt2, sqrt3)
  const Scalar c3 = b.conj_sqrt3();
  const Scalar c = b * c3;  // in Q(sqrt2)
  const Scalar c2 = c.conj_sqrt2();
  const Scalar d = c * c2;  // in Q
  Scalar r = ci * c3 * c2;
  r *= Rational(1) / d.as_rational();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (coords_.size() != o.coords_.size()) return false;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (coords_[k].basis != o.coords_[k].basis || coords_[k].value != o.coords_[k].value)
      return false;
  return true;
}

std::size_t Scalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coords_) {
    h ^= c.basis + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.value.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Scalar::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& c : coords_) {
    const bool neg = sgn(c.value) < 0;
    Rational mag = abs(c.value);
    std::string body;
    if (c.basis == kOne) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = kBasisNames[c.basis];
    } else if (mag.get_den() == 1) {
      body = mag.get_str() + kBasisNames[c.basis];
    } else {
      body = "(" + mag.get_str() + ")" + kBasisNames[c.basis];
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace voalab
