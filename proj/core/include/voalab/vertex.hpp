#pragma once

#include <vector>

#include "voalab/fock.hpp"

namespace voalab {

struct IllegalMode : std::domain_error {
  using std::domain_error::domain_error;
};

// u_n v via the normal-ordered lattice vertex operator. The mode index may be
// rational when (gamma, mu) is fractional; the exponent -n-1-(gamma,mu) must be
// integral for every pair of terms, otherwise IllegalMode is thrown.
State mode_apply(const State& u, const Rational& n, const State& v);
inline State mode_apply(const State& u, long n, const State& v) { return mode_apply(u, Rational(n), v); }

// L(n) = omega_{n+1}, evaluated by the Sugawara formula on Fock monomials.
State virasoro(int n, const State& v);

// Word given as descending parts [m_s, ..., m_1] meaning L(-m_s)...L(-m_1) v.
State apply_word(const std::vector<int>& parts, const State& v);

// Generalized binomial coefficient C(n, k) for integer n and k >= 0.
Integer binomial(long n, long k);

}  // namespace voalab
