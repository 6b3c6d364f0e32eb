#pragma once

#include <optional>
#include <vector>

#include "voalab/fock.hpp"

namespace voalab {

struct SpanFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HeisenbergConditionFailure : std::domain_error {
  using std::domain_error::domain_error;
};

struct TruncationError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Finite sum of z^e * coeff with rational exponents, strictly increasing.
class RationalPowerSeries {
 public:
  struct Term {
    Rational exponent;
    State coeff;
  };

  RationalPowerSeries() = default;
  explicit RationalPowerSeries(std::optional<Rational> truncation) : truncation_(std::move(truncation)) {}

  void add(const Rational& e, const State& c);
  const std::vector<Term>& terms() const { return terms_; }
  // Coefficient of z^e; exponents above the truncation bound are an error.
  State coefficient(const Rational& e) const;
  const std::optional<Rational>& truncation() const { return truncation_; }
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  std::optional<Rational> truncation_;  // empty: the expansion is complete
};

// kappa with hvec_1 hvec = kappa * vacuum, after checking hvec_0 hvec = hvec_2 hvec = 0.
Rational heisenberg_norm(const State& hvec);

// Components of v under the zero mode hvec_0, keyed by eigenvalue (ascending).
// Eigenvalues are searched among j/6 with |j/6| <= sqrt(2 kappa w); the annihilating
// polynomial is certified on v, otherwise SpanFailure is thrown.
std::vector<std::pair<Rational, State>> zero_mode_components(const State& hvec, const State& v);

// exp(2 pi i hvec_0) v.
State zero_mode_exp(const State& hvec, const State& v);

struct Eigenspace {
  Rational eigenvalue;
  std::vector<State> basis;
};
std::vector<Eigenspace> zero_mode_eigenspaces(const State& hvec, const SectorId& sector,
                                              const Rational& w);

// Delta(hvec, z) u = z^{hvec_0} exp(sum_k hvec_k (-z)^{-k} / (-k)) u.
RationalPowerSeries delta_apply(const State& hvec, const State& u);

// Mode of Y(Delta(hvec,z)u, z) on v; components whose untwisted index is not integral vanish.
State twisted_mode_apply(const State& u, const Rational& n, const State& v, const State& hvec);

// L^sigma(0) = twisted omega_1.
State twisted_l0(const State& v, const State& hvec);

}  // namespace voalab
