#include "voalab/twisted.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "voalab/linalg.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

void RationalPowerSeries::add(const Rational& e, const State& c) {
  if (c.is_zero()) return;
  if (truncation_ && e > *truncation_) throw TruncationError("term above truncation bound");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Rational& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{e, c});
  }
}

State RationalPowerSeries::coefficient(const Rational& e) const {
  if (truncation_ && e > *truncation_)
    throw TruncationError("coefficient queried above truncation bound " + truncation_->get_str());
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coeff;
  return {};
}

std::string RationalPowerSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += " + ";
    out += "(" + terms_[k].coeff.to_string() + ")*z^" + terms_[k].exponent.get_str();
  }
  return out;
}

Rational heisenberg_norm(const State& hvec) {
  if (hvec.is_zero() || hvec.weight() != 1)
    throw HeisenbergConditionFailure("Heisenberg vector must be nonzero of weight 1");
  if (!mode_apply(hvec, 0, hvec).is_zero() || !mode_apply(hvec, 2, hvec).is_zero())
    throw HeisenbergConditionFailure("hvec_0 hvec or hvec_2 hvec is nonzero");
  const State one = mode_apply(hvec, 1, hvec);
  if (one.is_zero()) throw HeisenbergConditionFailure("hvec_1 hvec vanishes");
  const Scalar k = one.coeff(Monomial());
  if (!(one == State::vacuum() * k) || !k.is_rational() || sgn(k.as_rational()) <= 0)
    throw HeisenbergConditionFailure("hvec_1 hvec is not a positive rational multiple of the vacuum");
  return k.as_rational();
}

namespace {

// Coefficients (ascending powers) of prod (x - r) over the given roots.
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> p{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = std::move(q);
  }
  return p;
}

std::vector<Rational> candidates(const Rational& kappa, const Rational& w) {
  // (j/6)^2 <= 2 kappa w  <=>  j^2 <= 72 kappa w
  const Rational bound = 72 * kappa * w;
  std::vector<Rational> out;
  for (long j = 0;; ++j) {
    if (Rational(j * j) > bound) break;
    if (j == 0) {
      out.push_back(0);
    } else {
      out.push_back(frac(-j, 6));
      out.push_back(frac(j, 6));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool proportional(const State& a, const State& b, Scalar& ratio) {
  // b == ratio * a ?
  if (b.is_zero()) {
    ratio = Scalar();
    return true;
  }
  if (a.size() != b.size()) return false;
  const auto& [m0, c0] = *a.terms().begin();
  ratio = b.coeff(m0) / c0;
  if (ratio.is_zero()) return false;
  for (const auto& [m, c] : a.terms())
    if (b.coeff(m) != ratio * c) return false;
  return true;
}

void components_of_piece(const State& hvec, const Rational& kappa, const Rational& w,
                         const State& piece, std::map<Rational, State>& out) {
  const State k1 = mode_apply(hvec, 0, piece);
  Scalar ratio;
  if (proportional(piece, k1, ratio)) {
    if (!ratio.is_rational() || Rational(6 * ratio.as_rational()).get_den() != 1)
      throw SpanFailure("zero-mode eigenvalue outside (1/6)Z");
    out[ratio.as_rational()] += piece;
    return;
  }
  const std::vector<Rational> cand = candidates(kappa, w);
  std::vector<State> kry{piece, k1};
  while (kry.size() <= cand.size()) kry.push_back(mode_apply(hvec, 0, kry.back()));
  const std::vector<Rational> full = poly_from_roots(cand);
  State cert;
  for (std::size_t i = 0; i < full.size(); ++i) cert.axpy(Scalar(full[i]), kry[i]);
  if (!cert.is_zero())
    throw SpanFailure("zero mode is not annihilated by the candidate polynomial at weight " + w.get_str());
  for (std::size_t l = 0; l < cand.size(); ++l) {
    std::vector<Rational> others;
    Rational denom = 1;
    for (std::size_t m = 0; m < cand.size(); ++m) {
      if (m == l) continue;
      others.push_back(cand[m]);
      denom *= cand[l] - cand[m];
    }
    const std::vector<Rational> ell = poly_from_roots(others);
    State proj;
    for (std::size_t i = 0; i < ell.size(); ++i) proj.axpy(Scalar(ell[i] / denom), kry[i]);
    if (!proj.is_zero()) out[cand[l]] += proj;
  }
}

}  // namespace

std::vector<std::pair<Rational, State>> zero_mode_components(const State& hvec, const State& v) {
  const Rational kappa = heisenberg_norm(hvec);
  std::map<Rational, State> out;
  for (const auto& [w, piece] : v.by_weight()) components_of_piece(hvec, kappa, w, piece, out);
  std::vector<std::pair<Rational, State>> res;
  for (auto& [l, s] : out)
    if (!s.is_zero()) res.emplace_back(l, std::move(s));
  return res;
}

State zero_mode_exp(const State& hvec, const State& v) {
  State out;
  for (const auto& [lambda, comp] : zero_mode_components(hvec, v)) {
    const Rational six = 6 * lambda;
    if (six.get_den() != 1) throw SpanFailure("eigenvalue outside (1/6)Z");
    out.axpy(Scalar::zeta6_pow(six.get_num().get_si()), comp);
  }
  return out;
}

std::vector<Eigenspace> zero_mode_eigenspaces(const State& hvec, const SectorId& sector,
                                              const Rational& w) {
  const Rational kappa = heisenberg_norm(hvec);
  const std::vector<Monomial> basis = graded_basis(sector, w);
  const int n = static_cast<int>(basis.size());
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (int i = 0; i < n; ++i) index.emplace(basis[i], i);
  // rows[i] collects (j, A_{ij})
  std::vector<SparseRow> rows(n);
  for (int j = 0; j < n; ++j) {
    const State img = mode_apply(hvec, 0, State(basis[j], Scalar(1)));
    for (const auto& [m, c] : img.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::domain_error("zero mode leaves the graded piece");
      rows[it->second].emplace_back(j, c);
    }
  }
  for (auto& r : rows)
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Eigenspace> out;
  int total = 0;
  for (const Rational& lambda : candidates(kappa, w)) {
    SparseRref rref(n);
    for (int i = 0; i < n; ++i) {
      SparseRow r = row_axpy(rows[i], Scalar(-lambda), SparseRow{{i, Scalar(1)}});
      rref.add_row(std::move(r));
    }
    const auto ker = rref.kernel();
    if (ker.empty()) continue;
    Eigenspace es{lambda, {}};
    for (const auto& vec : ker) {
      State s;
      for (const auto& [j, c] : vec) s.add(basis[j], c);
      es.basis.push_back(std::move(s));
    }
    total += static_cast<int>(ker.size());
    out.push_back(std::move(es));
  }
  if (total != n)
    throw SpanFailure("eigenspaces span " + std::to_string(total) + " of " + std::to_string(n) +
                      " dimensions at weight " + w.get_str());
  return out;
}

RationalPowerSeries delta_apply(const State& hvec, const State& u) {
  heisenberg_norm(hvec);
  RationalPowerSeries out;
  if (u.is_zero()) return out;
  Rational maxw = 0;
  for (const auto& [m, c] : u.terms()) maxw = std::max(maxw, m.weight());
  const long kmax = static_cast<long>(mpz_class(maxw.get_num() / maxw.get_den()).get_si()) + 1;

  std::vector<State> total(1, u);  // index d: coefficient of z^{-d}
  std::vector<State> term(1, u);
  for (long step = 1;; ++step) {
    std::vector<State> next;
    bool any = false;
    for (std::size_t d = 0; d < term.size(); ++d) {
      if (term[d].is_zero()) continue;
      for (long k = 1; k <= kmax; ++k) {
        State img = mode_apply(hvec, k, term[d]);
        if (img.is_zero()) continue;
        const Rational coef = frac((k % 2) ? 1 : -1, k * step);  // (-1)^{k+1}/k, and 1/step
        const std::size_t nd = d + k;
        if (next.size() <= nd) next.resize(nd + 1);
        next[nd].axpy(Scalar(coef), img);
        any = true;
      }
    }
    if (!any) break;
    if (total.size() < next.size()) total.resize(next.size());
    for (std::size_t d = 0; d < next.size(); ++d) total[d] += next[d];
    term = std::move(next);
  }
  for (std::size_t d = 0; d < total.size(); ++d) {
    if (total[d].is_zero()) continue;
    for (const auto& [lambda, comp] : zero_mode_components(hvec, total[d]))
      out.add(lambda - Rational(static_cast<long>(d)), comp);
  }
  return out;
}

State twisted_mode_apply(const State& u, const Rational& n, const State& v, const State& hvec) {
  State out;
  const RationalPowerSeries d = delta_apply(hvec, u);
  for (const auto& t : d.terms()) {
    const Rational m = n + t.exponent;
    if (m.get_den() != 1) continue;
    out += mode_apply(t.coeff, m, v);
  }
  return out;
}

State twisted_l0(const State& v, const State& hvec) {
  State omega(Monomial::from_parts({1, 1}), Scalar(frac(1, 2)));
  return twisted_mode_apply(omega, 1, v, hvec);
}

}  // namespace voalab
