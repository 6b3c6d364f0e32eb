#include "voalab/vertex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace voalab {

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r, nn(n);
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

namespace {

// Non-negative binomials are hot; keep a table.
const Integer& small_binomial(int n, int k) {
  static const std::vector<std::vector<Integer>> table = [] {
    std::vector<std::vector<Integer>> t(2 * kMaxMode + 2);
    for (std::size_t a = 0; a < t.size(); ++a) {
      t[a].resize(a + 1);
      t[a][0] = t[a][a] = 1;
      for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  return table.at(n).at(k);
}

// Coefficients of exp(sum_{m>=1} x_m z^m / m), one Heisenberg polynomial per power of z.
class CreationExponential {
 public:
  const State& coefficient(int d) {
    {
      std::shared_lock lock(mu_);
      if (d < static_cast<int>(p_.size())) return p_[d];
    }
    std::unique_lock lock(mu_);
    if (p_.empty()) p_.push_back(State::vacuum());
    while (static_cast<int>(p_.size()) <= d) {
      const int n = static_cast<int>(p_.size());
      State next;
      for (int m = 1; m <= n; ++m) {
        for (const auto& [mon, c] : p_[n - m].terms()) {
          Monomial t(mon);
          t.add(m);
          next.add(t, c);
        }
      }
      next *= Scalar(frac(1, n));
      p_.push_back(std::move(next));
    }
    return p_[d];
  }

 private:
  std::shared_mutex mu_;
  std::deque<State> p_;  // deque keeps references stable while growing
};

CreationExponential& creation_exponential() {
  static CreationExponential e;
  return e;
}

Scalar lattice_pairing_h(int q8) {  // (h, q beta) = 2 sqrt2 q
  return Scalar(Scalar::kSqrt2, frac(q8, 4));
}

struct Factor {
  int k;      // h(-k)
  int count;  // multiplicity in the u monomial
};

// Creation part of Y(u,z) for a fixed split: E^-(-gamma,z) times prod_k (A_k^-)^{j_k}.
std::vector<State> creation_series(int q8g, const std::vector<Factor>& factors,
                                   const std::vector<int>& j, int max_deg) {
  std::vector<State> s(max_deg + 1);
  if (q8g == 0) {
    s[0] = State::vacuum();
  } else {
    const Scalar c = lattice_pairing_h(q8g);
    std::vector<Scalar> cpow(1, Scalar(1));
    for (int d = 0; d <= max_deg; ++d) {
      for (const auto& [mon, coef] : creation_exponential().coefficient(d).terms()) {
        const int len = mon.length();
        while (static_cast<int>(cpow.size()) <= len) cpow.push_back(cpow.back() * c);
        s[d].add_product(mon, coef, cpow[len]);
      }
    }
  }
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const int k = factors[f].k;
    for (int rep = 0; rep < j[f]; ++rep) {
      std::vector<State> next(max_deg + 1);
      for (int e = 0; e <= max_deg; ++e) {
        for (int t = 0; t <= e; ++t) {
          if (s[e - t].is_zero()) continue;
          if (t + k > kMaxMode) break;
          const Scalar b(Rational(small_binomial(t + k - 1, k - 1)));
          for (const auto& [mon, coef] : s[e - t].terms()) {
            Monomial m(mon);
            m.add(t + k);
            next[e].add_product(m, coef, b);
          }
        }
      }
      s = std::move(next);
    }
  }
  return s;
}

// Annihilation part: prod_k (A_k^+)^{a_k} then the shift E^+(-gamma,z), applied to one
// v monomial. Result indexed by d, the coefficient of z^{-d}.
std::vector<State> annihilation(const Monomial& vmon, int q8g, const std::vector<Factor>& factors,
                                const std::vector<int>& a) {
  std::vector<State> cur(1);
  cur[0].add(vmon, Scalar(1));
  const Scalar p_mu = lattice_pairing_h(vmon.q8());
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const int k = factors[f].k;
    const long sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
    for (int rep = 0; rep < a[f]; ++rep) {
      std::vector<State> next;
      for (std::size_t d = 0; d < cur.size(); ++d) {
        for (const auto& [mon, coef] : cur[d].terms()) {
          if (vmon.q8() != 0) {
            const std::size_t nd = d + k;
            if (next.size() <= nd) next.resize(nd + 1);
            next[nd].add_product(mon, coef, p_mu * Scalar(sign));
          }
          for (int m = 1; m <= mon.top(); ++m) {
            const int cnt = mon.count(m);
            if (cnt == 0) continue;
            const std::size_t nd = d + m + k;
            if (next.size() <= nd) next.resize(nd + 1);
            Monomial t(mon);
            t.add(m, -1);
            Integer b = small_binomial(m + k - 1, k - 1) * m * cnt;
            if (sign < 0) b = -b;
            next[nd].add_product(t, coef, Scalar(Rational(b)));
          }
        }
      }
      cur = std::move(next);
      if (cur.empty()) return cur;
    }
  }
  if (q8g == 0) return cur;
  const Scalar negc = -lattice_pairing_h(q8g);
  int top = 0;
  for (const auto& s : cur)
    for (const auto& [mon, coef] : s.terms()) top = std::max(top, mon.top());
  std::vector<Scalar> cpow(1, Scalar(1));
  for (int jj = 1; jj <= top; ++jj) {
    std::vector<State> next(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d) {
      for (const auto& [mon, coef] : cur[d].terms()) {
        const int n = mon.count(jj);
        for (int t = 0; t <= n; ++t) {
          while (static_cast<int>(cpow.size()) <= t) cpow.push_back(cpow.back() * negc);
          const std::size_t nd = d + static_cast<std::size_t>(jj) * t;
          if (next.size() <= nd) next.resize(nd + 1);
          Monomial m(mon);
          if (t) m.add(jj, -t);
          next[nd].add_product(m, coef, cpow[t] * Scalar(Rational(small_binomial(n, t))));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

void mode_term(const Monomial& umon, const Scalar& ucoef, const Rational& n,
               const std::vector<std::pair<Monomial, Scalar>>& vterms, State& out) {
  const int q8g = umon.q8();
  std::vector<Factor> factors;
  for (int k = 1; k <= umon.top(); ++k)
    if (umon.count(k)) factors.push_back({k, umon.count(k)});
  const Rational wu = umon.weight();

  struct Job {
    const Monomial* vmon;
    const Scalar* vcoef;
    long e_tot;
    int out_deg;
  };
  std::vector<Job> jobs;
  int max_out_deg = -1;
  for (const auto& [vmon, vcoef] : vterms) {
    const Rational pair_gm = frac(q8g * vmon.q8(), 8);
    const Rational e = -n - 1 - pair_gm;
    if (e.get_den() != 1)
      throw IllegalMode("mode index " + n.get_str() + " is not legal for lattice pairing " +
                        pair_gm.get_str());
    const int q8o = q8g + vmon.q8();
    const Rational out_w = wu + vmon.weight() - n - 1;
    const Rational deg = out_w - frac(q8o * q8o, 16);
    if (sgn(deg) < 0 || deg.get_den() != 1) continue;
    const int od = static_cast<int>(deg.get_num().get_si());
    jobs.push_back({&vmon, &vcoef, e.get_num().get_si(), od});
    max_out_deg = std::max(max_out_deg, od);
  }
  if (jobs.empty()) return;

  std::vector<int> j(factors.size(), 0);
  while (true) {
    Integer mult = 1;
    int cre_weight = 0;
    std::vector<int> a(factors.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
      mult *= small_binomial(factors[f].count, j[f]);
      a[f] = factors[f].count - j[f];
      cre_weight += factors[f].k * j[f];
    }
    const int cre_max = max_out_deg - cre_weight;
    if (cre_max >= 0) {
      const std::vector<State> cre = creation_series(q8g, factors, j, cre_max);
      const Scalar umult = ucoef * Scalar(Rational(mult));
      for (const Job& job : jobs) {
        const std::vector<State> ann = annihilation(*job.vmon, q8g, factors, a);
        const Scalar pref = umult * *job.vcoef;
        for (std::size_t d = 0; d < ann.size(); ++d) {
          if (ann[d].is_zero()) continue;
          const long e_cre = job.e_tot + static_cast<long>(d);
          if (e_cre < 0 || e_cre > cre_max) continue;
          const State& cs = cre[e_cre];
          if (cs.is_zero()) continue;
          for (const auto& [amon, acoef] : ann[d].terms()) {
            const Scalar ap = pref * acoef;
            for (const auto& [cmon, ccoef] : cs.terms()) {
              Monomial m = cmon * amon;
              m.set_q8(q8g + amon.q8());
              out.add_product(m, ap, ccoef);
            }
          }
        }
      }
    }
    std::size_t f = 0;
    while (f < factors.size() && j[f] == factors[f].count) j[f++] = 0;
    if (f == factors.size()) break;
    ++j[f];
  }
}

}  // namespace

State mode_apply(const State& u, const Rational& n, const State& v) {
  State out;
  if (u.is_zero() || v.is_zero()) return out;
  const std::vector<std::pair<Monomial, Scalar>> vterms(v.terms().begin(), v.terms().end());
  for (const auto& [umon, ucoef] : u.terms()) mode_term(umon, ucoef, n, vterms, out);
  return out;
}

State virasoro(int n, const State& v) {
  State out;
  out.reserve(v.size() * 4);
  const Scalar half(frac(1, 2));
  for (const auto& [mon, c] : v.terms()) {
    const int q8 = mon.q8();
    const Scalar p = lattice_pairing_h(q8);
    if (n < 0) {
      for (int a = 1; a < -n; ++a) {
        Monomial t(mon);
        t.add(a);
        t.add(-n - a);
        out.add_product(t, c, half);
      }
      if (q8 != 0) {
        Monomial t(mon);
        t.add(-n);
        out.add_product(t, c, p);
      }
    }
    for (int b = 1; b <= mon.top(); ++b) {
      const int cnt = mon.count(b);
      const int a = b - n;
      if (cnt == 0 || a < 1) continue;
      Monomial t(mon);
      t.add(b, -1);
      t.add(a);
      out.add_product(t, c, Scalar(static_cast<long>(b) * cnt));
    }
    if (n == 0 && q8 != 0) out.add_product(mon, c, Scalar(frac(q8 * q8, 16)));
    if (n > 0) {
      if (q8 != 0 && mon.count(n)) {
        Monomial t(mon);
        t.add(n, -1);
        out.add_product(t, c, p * Scalar(static_cast<long>(n) * mon.count(n)));
      }
      for (int a = 1; a < n; ++a) {
        const int b = n - a;
        const int ca = mon.count(a);
        const int cb = mon.count(b);
        if (ca == 0 || cb == 0) continue;
        long ways = (a == b) ? static_cast<long>(ca) * (ca - 1) : static_cast<long>(ca) * cb;
        if (ways == 0) continue;
        Monomial t(mon);
        t.add(a, -1);
        t.add(b, -1);
        out.add_product(t, c, Scalar(frac(static_cast<long>(a) * b * ways, 2)));
      }
    }
  }
  return out;
}

State apply_word(const std::vector<int>& parts, const State& v) {
  State cur = v;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) cur = virasoro(-*it, cur);
  return cur;
}

}  // namespace voalab
