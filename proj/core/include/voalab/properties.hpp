#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "voalab/fock.hpp"

namespace voalab {

struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string detail;  // first counterexample, empty when ok
};

// Random states: 1-3 basis monomials of one weight with small rational (sometimes
// irrational) coefficients.
State random_state(std::mt19937_64& rng, const SectorId& sector, int max_weight);

PropertyResult heisenberg_commutator_property(std::uint64_t seed, int samples = 50, int max_weight = 8);
PropertyResult borcherds_commutator_property(std::uint64_t seed, int samples = 2, int max_weight = 6);
PropertyResult virasoro_relations_property(std::uint64_t seed, int samples = 6, int max_weight = 6);
PropertyResult skew_symmetry_property();
PropertyResult form_invariance_property(std::uint64_t seed, int samples = 40, int max_weight = 8);
PropertyResult primary_adjoint_property(std::uint64_t seed, int samples = 20, int max_weight = 6);
PropertyResult grading_property(std::uint64_t seed, int samples = 40, int max_weight = 6);
PropertyResult involution_property(std::uint64_t seed, int samples = 100, int max_weight = 10);
PropertyResult sigma_order_three_property(int max_weight = 8);
PropertyResult sigma_virasoro_property(std::uint64_t seed, int samples = 10, int max_weight = 6);
PropertyResult twisted_grading_property(int max_twisted_weight = 3);

}  // namespace voalab
