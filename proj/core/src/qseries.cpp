#include "voalab/qseries.hpp"

#include <stdexcept>

namespace voalab {

namespace {

void require_compatible(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order() || a.shift() != b.shift())
    throw std::invalid_argument("q-series with different order or shift");
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& o) {
  require_compatible(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_compatible(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

QSeries QSeries::operator*(const QSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("q-series with different order");
  QSeries r(order(), shift_ + o.shift_);
  for (int a = 0; a <= order(); ++a) {
    if (!c_[a]) continue;
    for (int b = 0; a + b <= order(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  }
  return r;
}

QSeries QSeries::scaled(long long k) const {
  QSeries r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

QSeries QSeries::shifted(int k) const {
  QSeries r(order(), shift_);
  for (int n = 0; n + k <= order(); ++n) r.c_[n + k] = c_[n];
  return r;
}

std::string QSeries::to_string() const {
  std::string out;
  for (int n = 0; n <= order(); ++n) {
    if (!c_[n]) continue;
    const Rational e = shift_ + n;
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + e.get_str());
    std::string coef = std::to_string(std::llabs(c_[n]));
    std::string term = mono.empty() ? coef : (std::llabs(c_[n]) == 1 ? mono : coef + mono);
    if (out.empty())
      out = (c_[n] < 0 ? "-" : "") + term;
    else
      out += (c_[n] < 0 ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  const Rational top = shift_ + order();
  return out + " + O(q^" + Rational(top + 1).get_str() + ")";
}

QSeries partition_series(int order, int min_part) {
  QSeries r(order);
  r.at(0) = 1;
  for (int k = std::max(1, min_part); k <= order; ++k)
    for (int n = k; n <= order; ++n) r.at(n) += r[n - k];
  return r;
}

QSeries char_L1(int n, int order) {
  QSeries p = partition_series(order);
  QSeries r = p.shifted(n * n);
  r -= p.shifted(n * n + 2 * n + 1);
  return r;
}

}  // namespace voalab
