#include "voalab/fock.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace voalab {

Monomial Monomial::from_parts(const std::vector<int>& parts, int q8) {
  Monomial m(q8);
  for (int p : parts) m.add(p);
  return m;
}

void Monomial::set_count(int n, int c) {
  if (n < 1 || n > kMaxMode) throw std::out_of_range("Heisenberg mode out of supported range");
  if (c < 0 || c > 255) throw std::out_of_range("Heisenberg occupation out of range");
  counts_[n - 1] = static_cast<uint8_t>(c);
  if (c > 0 && n > top_) {
    top_ = static_cast<uint8_t>(n);
  } else if (c == 0 && n == top_) {
    while (top_ > 0 && counts_[top_ - 1] == 0) --top_;
  }
}

int Monomial::degree() const {
  int d = 0;
  for (int n = 1; n <= top_; ++n) d += n * counts_[n - 1];
  return d;
}

int Monomial::length() const {
  int s = 0;
  for (int n = 1; n <= top_; ++n) s += counts_[n - 1];
  return s;
}

std::vector<int> Monomial::parts() const {
  std::vector<int> out;
  for (int n = top_; n >= 1; --n)
    for (int k = 0; k < counts_[n - 1]; ++k) out.push_back(n);
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  r.q8_ = static_cast<int16_t>(q8_ + o.q8_);
  const int t = std::max(top_, o.top_);
  for (int n = 1; n <= o.top_; ++n) {
    const int c = r.counts_[n - 1] + o.counts_[n - 1];
    if (c > 255) throw std::out_of_range("Heisenberg occupation out of range");
    r.counts_[n - 1] = static_cast<uint8_t>(c);
  }
  r.top_ = static_cast<uint8_t>(t);
  return r;
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
  const Rational wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  const auto pa = a.parts(), pb = b.parts();
  if (pa != pb) return pb < pa;
  return a.q8_ < b.q8_;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(q8_ + 1000);
  for (int n = 0; n < top_; ++n) {
    h ^= counts_[n];
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int n = top_; n >= 1; --n) {
    const int c = counts_[n - 1];
    if (c == 0) continue;
    out += "h(-" + std::to_string(n) + ")";
    if (c > 1) out += "^" + std::to_string(c);
  }
  if (q8_ == 0) {
    out += "|0>";
  } else {
    out += "|" + q().get_str() + "b>";
  }
  return out;
}

bool SectorId::contains(int q8) const {
  switch (kind) {
    case SectorKind::Coset: return ((q8 - r) % 8 + 8) % 8 == 0;
    case SectorKind::FullL2: return q8 % 4 == 0;
    case SectorKind::FullL2Half: return ((q8 % 4) + 4) % 4 == 2;
    case SectorKind::Mixed: return true;
  }
  return false;
}

std::string SectorId::to_string() const {
  switch (kind) {
    case SectorKind::Coset:
      return r == 0 ? "V_Zb" : "V_Zb+" + frac(r, 8).get_str() + "b";
    case SectorKind::FullL2: return "V_L2";
    case SectorKind::FullL2Half: return "V_L2+a/2";
    case SectorKind::Mixed: return "mixed";
  }
  return "?";
}

Scalar State::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void State::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::add_product(const Monomial& m, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m);
  it->second.add_product(a, b);
  if (it->second.is_zero()) terms_.erase(it);
}

void State::axpy(const Scalar& a, const State& x) {
  if (a.is_zero()) return;
  for (const auto& [m, c] : x.terms_) add_product(m, a, c);
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

State State::operator-() const {
  State r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool State::operator==(const State& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, Scalar>> State::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return Monomial::canonical_less(a.first, b.first); });
  return out;
}

std::string State::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      Rational r = c.as_rational();
      neg = sgn(r) < 0;
      if (abs(r) != 1) coef = Rational(abs(r)).get_str() + "*";
    } else if (c.coords().size() == 1 && sgn(c.coords()[0].value) < 0) {
      neg = true;
      coef = "(" + (-c).to_string() + ")*";
    } else {
      coef = "(" + c.to_string() + ")*";
    }
    if (first) {
      out += neg ? "-" : "";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += coef + m.to_string();
  }
  return out;
}

bool State::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Rational w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return false;
  return true;
}

Rational State::weight() const {
  if (terms_.empty()) throw GradingError("weight of the zero state");
  const Rational w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) throw GradingError("state is not homogeneous");
  return w;
}

SectorId State::sector() const {
  std::set<int> pts;
  for (const auto& [m, c] : terms_) pts.insert(m.q8());
  if (pts.empty()) return SectorId::coset(0);
  const int r = ((*pts.begin() % 8) + 8) % 8;
  if (std::all_of(pts.begin(), pts.end(), [&](int q) { return ((q % 8) + 8) % 8 == r; }))
    return SectorId::coset(r);
  if (std::all_of(pts.begin(), pts.end(), [](int q) { return q % 4 == 0; })) return SectorId::full_l2();
  if (std::all_of(pts.begin(), pts.end(), [](int q) { return ((q % 4) + 4) % 4 == 2; }))
    return SectorId::full_l2_half();
  return {SectorKind::Mixed, 0};
}

std::vector<std::pair<Rational, State>> State::by_weight() const {
  std::map<Rational, State> parts;
  for (const auto& [m, c] : terms_) parts[m.weight()].add(m, c);
  return {parts.begin(), parts.end()};
}

State theta(const State& v) {
  State out;
  out.reserve(v.size());
  for (const auto& [m, c] : v.terms()) {
    Monomial t(m);
    t.set_q8(-m.q8());
    out.add(t, (m.length() % 2) ? -c : c);
  }
  return out;
}

State tau1(const State& v) {
  State out;
  out.reserve(v.size());
  for (const auto& [m, c] : v.terms()) {
    if (m.q8() % 4 != 0) throw std::domain_error("tau1 is defined on V_L2 only");
    const int mult = m.q8() / 4;  // e^{m alpha}
    out.add(m, (mult % 2) ? -c : c);
  }
  return out;
}

State lattice_component(const State& v, int m) {
  State out;
  for (const auto& [mon, c] : v.terms())
    if (mon.q8() == 8 * m || mon.q8() == -8 * m) out.add(mon, c);
  return out;
}

State heisenberg(int n, const State& v) {
  State out;
  out.reserve(v.size());
  for (const auto& [m, c] : v.terms()) {
    if (n < 0) {
      Monomial t(m);
      t.add(-n);
      out.add(t, c);
    } else if (n > 0) {
      const int k = m.count(n);
      if (k == 0) continue;
      Monomial t(m);
      t.add(n, -1);
      out.add_product(t, c, Scalar(static_cast<long>(n) * k));
    } else if (m.q8() != 0) {
      out.add_product(m, c, Scalar(Scalar::kSqrt2, frac(m.q8(), 4)));
    }
  }
  return out;
}

namespace {

void gen_partitions(int n, int max_part, int min_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= min_part; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n, int min_part) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, std::max(1, min_part), cur, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

long long partition_count(int n, int min_part) {
  if (n < 0) return 0;
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = std::max(1, min_part); part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return p[n];
}

std::vector<Monomial> graded_basis(const SectorId& sector, const Rational& w) {
  std::vector<Monomial> out;
  if (sgn(w) < 0) return out;
  for (int q8 = -256; q8 <= 256; ++q8) {
    if (!sector.contains(q8)) continue;
    const Rational rest = w - frac(q8 * q8, 16);
    if (sgn(rest) < 0 || rest.get_den() != 1) continue;
    for (const auto& p : partitions(static_cast<int>(rest.get_num().get_si())))
      out.push_back(Monomial::from_parts(p, q8));
  }
  return out;
}

}  // namespace voalab
