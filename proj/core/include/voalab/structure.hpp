#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "voalab/fock.hpp"

namespace voalab {

// Contravariant form: h(n)^dagger = -h(-n), (e^{q b}, e^{-q b}) = (-1)^{4q^2} when 4q^2 is
// an integer and 1 otherwise, (1, 1) = 1.
Scalar pair(const State& u, const State& v);
std::vector<std::vector<Scalar>> gram(const std::vector<State>& states);

bool is_primary(const State& v);

enum class WordBase { Vacuum, U16, U9 };

struct VirasoroWord {
  std::vector<int> parts;  // descending; L(-parts[0]) ... L(-parts.back()) base
  WordBase base = WordBase::Vacuum;
  std::string to_string() const;
  bool operator==(const VirasoroWord& o) const { return parts == o.parts && base == o.base; }
};

const State& word_base(WordBase base);
// Parts >= 2 on the vacuum, parts >= 1 otherwise; fewer parts first, then lex descending.
std::vector<VirasoroWord> vacuum_words(int weight, WordBase base);
// Apply many words sharing prefixes (depth-first over the word trie).
std::vector<State> apply_words(const std::vector<VirasoroWord>& words);

struct DecompositionResult {
  std::vector<std::pair<VirasoroWord, Scalar>> coefficients;
  State residual;
  int rank = 0;     // certified rank of the generated states
  int columns = 0;  // number of words
};

// Exact coordinates of target over the states generated by the words.
DecompositionResult decompose_over(const State& target, const std::vector<VirasoroWord>& words);

// Solve sum_j x_j cols[j] = target; rational path first, K elimination as fallback.
struct SpanSolve {
  std::vector<Scalar> x;
  State residual;
  int rank = 0;
};
SpanSolve solve_in_span(const State& target, const std::vector<State>& cols);

// Coefficient of h(-1)^m |0> for a state of weight m.
Scalar c_functional(const State& v);

// Projection of P onto the orthogonal complement of the weight-16 vacuum words.
State build_u16();

using Automorphism = std::function<State(const State&)>;

struct SubspaceBasis {
  std::vector<State> vectors;
  std::vector<Monomial> leads;  // vectors[i] has coefficient 1 at leads[i], 0 at the other leads
  std::optional<std::vector<Scalar>> coordinates(const State& v) const;
  std::size_t size() const { return vectors.size(); }
};

// Common fixed points of the automorphisms on the weight-w piece of a sector.
SubspaceBasis fixed_subspace(const std::vector<Automorphism>& gens, const SectorId& sector,
                             const Rational& w);
// Kernel of (g - lambda) restricted to a subspace given by a basis with leads.
SubspaceBasis eigen_subspace(const Automorphism& g, const Scalar& lambda, const SubspaceBasis& space);

}  // namespace voalab
