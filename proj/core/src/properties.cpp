#include "voalab/properties.hpp"

#include "voalab/named.hpp"
#include "voalab/sectors.hpp"
#include "voalab/structure.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

namespace {

Scalar random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), kind(0, 5);
  int n = num(rng);
  if (n == 0) n = 1;
  Scalar c(frac(n, den(rng)));
  if (kind(rng) == 0) c *= Scalar::sqrt2();
  if (kind(rng) == 1) c *= Scalar::i();
  return c;
}

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok && r.ok) {
    r.ok = false;
    r.detail = what;
  }
}

}  // namespace

State random_state(std::mt19937_64& rng, const SectorId& sector, int max_weight) {
  for (;;) {
    std::uniform_int_distribution<int> wd(0, max_weight);
    const std::vector<Monomial> basis = graded_basis(sector, wd(rng));
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    State s;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) s.add(basis[pick(rng)], random_coefficient(rng));
    if (!s.is_zero()) return s;
  }
}

PropertyResult heisenberg_commutator_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State v = random_state(rng, SectorId::full_l2(), max_weight);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        const State lhs = heisenberg(m, heisenberg(n, v)) - heisenberg(n, heisenberg(m, v));
        const State rhs = (m + n == 0) ? v * Scalar(m) : State();
        record(r, lhs == rhs, "[h(" + std::to_string(m) + "),h(" + std::to_string(n) + ")] on " + v.to_string());
      }
  }
  return r;
}

PropertyResult borcherds_commutator_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const State& omega = named_vector("omega");
  const State& E = named_vector("E");
  const State& J = named_vector("J");
  const std::vector<std::pair<const State*, const State*>> pairs = {
      {&omega, &omega}, {&omega, &E}, {&E, &E}, {&J, &E}};
  const std::vector<std::string> names = {"(omega,omega)", "(omega,E)", "(E,E)", "(J,E)"};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const State& u = *pairs[p].first;
    const State& v = *pairs[p].second;
    const int top = static_cast<int>(u.weight().get_num().get_si() + v.weight().get_num().get_si());
    std::vector<State> uv;  // u_i v for i >= 0
    for (int i = 0; i < top; ++i) uv.push_back(mode_apply(u, i, v));
    for (int s = 0; s < samples; ++s) {
      const State w = random_state(rng, SectorId::coset(0), max_weight);
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
          const State lhs = mode_apply(u, m, mode_apply(v, n, w)) - mode_apply(v, n, mode_apply(u, m, w));
          State rhs;
          for (int i = 0; i < top; ++i) {
            if (uv[i].is_zero()) continue;
            const Integer b = binomial(m, i);
            if (b == 0) continue;
            rhs.axpy(Scalar(Rational(b)), mode_apply(uv[i], m + n - i, w));
          }
          record(r, lhs == rhs,
                 names[p] + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " on " + w.to_string());
        }
    }
  }
  return r;
}

PropertyResult virasoro_relations_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State w = random_state(rng, SectorId::full_l2(), max_weight);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        const State lhs = virasoro(m, virasoro(n, w)) - virasoro(n, virasoro(m, w));
        State rhs = virasoro(m + n, w) * Scalar(m - n);
        if (m + n == 0) rhs.axpy(Scalar(frac(m * m * m - m, 12)), w);
        record(r, lhs == rhs, "[L(" + std::to_string(m) + "),L(" + std::to_string(n) + ")] on " + w.to_string());
      }
  }
  return r;
}

PropertyResult skew_symmetry_property() {
  PropertyResult r;
  const State& J = named_vector("J");
  const State& E = named_vector("E");
  const std::vector<std::pair<std::string, std::string>> pairs = {{"J", "E"}, {"E", "J"}, {"J", "J"}};
  for (const auto& [un, vn] : pairs) {
    const State& u = un == "J" ? J : E;
    const State& v = vn == "J" ? J : E;
    for (int n = -3; n <= 7; ++n) {
      const State lhs = mode_apply(u, n, v);
      State rhs;
      Integer fact = 1;
      for (int i = 0; n + i <= 7; ++i) {
        if (i > 0) fact *= i;
        State t = mode_apply(v, n + i, u);
        for (int k = 0; k < i; ++k) t = virasoro(-1, t);
        const int sign = ((n + i + 1) % 2 == 0) ? 1 : -1;
        rhs.axpy(Scalar(Rational(sign) / Rational(fact)), t);
      }
      record(r, lhs == rhs, un + "_" + std::to_string(n) + vn);
    }
  }
  return r;
}

PropertyResult form_invariance_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State u = random_state(rng, SectorId::full_l2(), max_weight);
    const int wu = static_cast<int>(u.by_weight().front().first.get_num().get_si());
    for (int n = -4; n <= 4; ++n) {
      const int wv = wu - n;
      if (wv < 0 || wv > max_weight + 4) continue;
      const std::vector<Monomial> basis = graded_basis(SectorId::full_l2(), wv);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      State v;
      for (int t = 0; t < 2; ++t) v.add(basis[pick(rng)], random_coefficient(rng));
      record(r, pair(virasoro(n, u), v) == pair(u, virasoro(-n, v)),
             "L(" + std::to_string(n) + ") with u=" + u.to_string() + " v=" + v.to_string());
    }
  }
  return r;
}

PropertyResult primary_adjoint_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const State& E = named_vector("E");
  for (int s = 0; s < samples; ++s) {
    const State u = random_state(rng, SectorId::coset(0), max_weight);
    const int wu = static_cast<int>(u.by_weight().front().first.get_num().get_si());
    for (int n = -2; n <= 6; ++n) {
      const int wv = wu + 3 - n;
      if (wv < 0) continue;
      const std::vector<Monomial> basis = graded_basis(SectorId::coset(0), wv);
      if (basis.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      State v;
      for (int t = 0; t < 2; ++t) v.add(basis[pick(rng)], random_coefficient(rng));
      record(r, pair(mode_apply(E, n, u), v) == pair(u, mode_apply(E, 6 - n, v)),
             "E_" + std::to_string(n) + " with u=" + u.to_string() + " v=" + v.to_string());
    }
  }
  return r;
}

PropertyResult grading_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State u = random_state(rng, SectorId::full_l2(), 4);
    const State v = random_state(rng, SectorId::full_l2(), max_weight);
    const Rational wu = u.weight(), wv = v.weight();
    for (int n = -2; n <= 4; ++n) {
      const State o = mode_apply(u, n, v);
      if (o.is_zero()) continue;
      record(r, o.is_homogeneous() && o.weight() == wu + wv - n - 1,
             "u_" + std::to_string(n) + "v with u=" + u.to_string() + " v=" + v.to_string());
    }
  }
  return r;
}

PropertyResult involution_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State v = random_state(rng, SectorId::full_l2(), max_weight);
    record(r, theta(theta(v)) == v, "theta^2 on " + v.to_string());
    record(r, tau1(tau1(v)) == v, "tau1^2 on " + v.to_string());
  }
  return r;
}

PropertyResult sigma_order_three_property(int max_weight) {
  PropertyResult r;
  for (int w = 0; w <= max_weight; ++w)
    for (const Monomial& m : graded_basis(SectorId::full_l2(), w)) {
      const State v(m, Scalar(1));
      record(r, sigma(sigma(sigma(v))) == v, "sigma^3 on " + v.to_string());
    }
  return r;
}

PropertyResult sigma_virasoro_property(std::uint64_t seed, int samples, int max_weight) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int s = 0; s < samples; ++s) {
    const State v = random_state(rng, SectorId::full_l2(), max_weight);
    for (int n = -4; n <= 4; ++n)
      record(r, sigma(virasoro(n, v)) == virasoro(n, sigma(v)),
             "sigma L(" + std::to_string(n) + ") on " + v.to_string());
  }
  return r;
}

PropertyResult twisted_grading_property(int max_twisted_weight) {
  PropertyResult r;
  const std::vector<std::string> us = {"hprime", "y1", "y2", "omega"};
  const Scalar z3 = Scalar::zeta3();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const TwistedSector t = twisted_sector(i, j);
      const Rational low = twisted_lowest_weight(t);
      // sources: pieces of twisted degree <= 1
      std::vector<std::pair<Rational, State>> sources;
      for (int k = 0; k <= 3; ++k)
        for (const State& v : twisted_graded_piece(t, frac(k, 3))) sources.emplace_back(low + frac(k, 3), v);
      for (const auto& un : us) {
        const State& u = named_vector(un);
        // g u = e^{-2 pi i r/3} u with g = sigma for j = 1 and sigma^{-1} for j = 2
        const State gu = j == 1 ? sigma(u) : sigma_inverse(u);
        int rr = -1;
        for (int k = 0; k < 3; ++k) {
          Scalar c(1);
          for (int e = 0; e < (3 - k) % 3; ++e) c *= z3;
          if (gu == u * c) rr = k;
        }
        if (rr < 0) {
          record(r, false, un + " is not a twisting eigenvector");
          continue;
        }
        const Rational wu = u.weight();
        for (const auto& [tw, v] : sources)
          for (int k = -6; k <= 6; ++k) {
            const Rational n = frac(k, 3);
            const State o = twisted_mode_apply(u, n, v, t.hvec);
            const bool legal = Rational(n - frac(rr, 3)).get_den() == 1;
            if (o.is_zero()) continue;
            const Rational expected = tw + wu - n - 1;
            if (expected - low > max_twisted_weight) continue;
            record(r, legal && twisted_l0(o, t.hvec) == o * Scalar(expected),
                   un + "_" + n.get_str() + " on W" + std::to_string(i) + "T" + std::to_string(j) + " " + v.to_string());
          }
      }
    }
  return r;
}

}  // namespace voalab
