#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voalab/scalar.hpp"

namespace voalab {

struct GradingError : std::domain_error {
  using std::domain_error::domain_error;
};

// Largest Heisenberg mode n for which h(-n) can appear in a stored monomial.
inline constexpr int kMaxMode = 48;

// h(-n_1)...h(-n_s) (x) e^{q beta} with q = q8/8, stored as occupation counts.
class Monomial {
 public:
  Monomial() { counts_.fill(0); }
  explicit Monomial(int q8) : Monomial() { q8_ = static_cast<int16_t>(q8); }
  static Monomial from_parts(const std::vector<int>& parts, int q8 = 0);

  int q8() const { return q8_; }
  void set_q8(int q8) { q8_ = static_cast<int16_t>(q8); }
  Rational q() const { return frac(q8_, 8); }

  int count(int n) const { return (n >= 1 && n <= kMaxMode) ? counts_[n - 1] : 0; }
  void set_count(int n, int c);
  void add(int n, int delta = 1) { set_count(n, count(n) + delta); }
  int top() const { return top_; }  // largest n with h(-n) present, 0 if none

  int degree() const;  // sum of n_i
  int length() const;  // number of Heisenberg factors
  Rational weight() const { return Rational(degree()) + frac(q8_ * q8_, 16); }
  std::vector<int> parts() const;  // descending

  // Product of the Heisenberg parts; lattice points add.
  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return q8_ == o.q8_ && top_ == o.top_ && std::memcmp(counts_.data(), o.counts_.data(), top_) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  // canonical order: weight, then parts (descending lex, larger first), then q ascending
  static bool canonical_less(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<uint8_t, kMaxMode> counts_;
  int16_t q8_ = 0;
  uint8_t top_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class SectorKind { Coset, FullL2, FullL2Half, Mixed };

// Coset r: lattice points q in r/8 + Z (r = 0 is the adjoint V_{Z beta}).
// FullL2: q in (1/2)Z.  FullL2Half: q in 1/4 + (1/2)Z.
struct SectorId {
  SectorKind kind = SectorKind::Coset;
  int r = 0;
  static SectorId coset(int r) { return {SectorKind::Coset, ((r % 8) + 8) % 8}; }
  static SectorId full_l2() { return {SectorKind::FullL2, 0}; }
  static SectorId full_l2_half() { return {SectorKind::FullL2Half, 0}; }
  bool contains(int q8) const;
  bool operator==(const SectorId& o) const { return kind == o.kind && r == o.r; }
  std::string to_string() const;
};

class State {
 public:
  using Map = std::unordered_map<Monomial, Scalar, MonomialHash>;

  State() = default;
  State(const Monomial& m, const Scalar& c) { add(m, c); }
  static State vacuum() { return State(Monomial(), Scalar(1)); }
  static State lattice(int q8) { return State(Monomial(q8), Scalar(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;

  void add(const Monomial& m, const Scalar& c);
  void add_product(const Monomial& m, const Scalar& a, const Scalar& b);
  void axpy(const Scalar& a, const State& x);  // this += a x
  void reserve(std::size_t n) { terms_.reserve(n); }

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Scalar& c);
  State operator-() const;

  bool operator==(const State& o) const;
  bool operator!=(const State& o) const { return !(*this == o); }

  // Terms in canonical order.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;
  std::string to_string() const;

  bool is_homogeneous() const;
  Rational weight() const;  // throws GradingError if zero or inhomogeneous
  SectorId sector() const;  // smallest named sector containing all lattice points
  // Split into homogeneous pieces keyed by weight.
  std::vector<std::pair<Rational, State>> by_weight() const;

 private:
  Map terms_;
};

inline State operator+(State a, const State& b) { return a += b; }
inline State operator-(State a, const State& b) { return a -= b; }
inline State operator*(const Scalar& c, State v) { return v *= c; }
inline State operator*(State v, const Scalar& c) { return v *= c; }

// theta: (-1)^s on s Heisenberg factors, q -> -q.
State theta(const State& v);
// tau1: (-1)^m on M(1) (x) e^{m alpha}; requires q in (1/2)Z.
State tau1(const State& v);
// Terms with lattice point +-m beta.
State lattice_component(const State& v, int m);

// Heisenberg mode h(n) acting on a state.
State heisenberg(int n, const State& v);

// Partitions of n into parts >= min_part, each descending; order: fewer parts first,
// then lexicographically descending.
std::vector<std::vector<int>> partitions(int n, int min_part = 1);
long long partition_count(int n, int min_part = 1);

// Monomial basis of the weight-w piece of a sector.
std::vector<Monomial> graded_basis(const SectorId& sector, const Rational& w);

}  // namespace voalab
