#pragma once

#include <map>
#include <string>
#include <vector>

#include "voalab/fock.hpp"
#include "voalab/qseries.hpp"

namespace voalab {

// sigma = exp(2 pi i hprime_0).
State sigma(const State& v);
State sigma_inverse(const State& v);

// ---- characters ----

// Objects: M1, M1+, M1-, M1(m) (m >= 1, the module M(1, 2 sqrt2 m)), Vzb, Vzb+, Vzb-,
// coset(r) (r = 0..7, V_{Zb + r b/8}), VL2, VL2K (common fixed points of tau1 and theta,
// enumerated directly), fixed (sigma-fixed part of Vzb+), eigen1, eigen2.
QSeries graded_dim(const std::string& object, int order);
const std::vector<std::string>& char_object_examples();

struct FixedDecomposition {
  std::map<int, long long> multiplicity;  // n -> multiplicity of L(1, n^2)
  bool ok = false;
  std::string error;
};
// Greedily peel L(1, n^2) characters off the sigma-fixed graded dimension.
FixedDecomposition verify_fixed_algebra_decomposition(int order);

struct SigmaEigenDims {
  int weight = 0;
  int total = 0;
  int d0 = 0, d1 = 0, d2 = 0;  // eigenvalues 1, zeta3, zeta3^2
};
// Direct computation on Vzb+ realized as the tau1/theta-fixed part of V_{L2}.
SigmaEigenDims sigma_eigen_dims(int w);
// sigma-fixed dimension of Vzb+ at weight w by the trace formula.
long long sigma_fixed_dim_trace(int w);

// ---- untwisted modules of Vzb+ ----

struct TopLevelRow {
  std::string module;
  bool display_only = false;
  std::string top_vector;
  Scalar omega, E, J;
};
// Realized modules: V+, V-, V(b/8), V(b/4), V(3b/8), V(b/2)+, V(b/2)-.
// Display-only: VT1+, VT1-, VT2+, VT2-.
const std::vector<std::string>& vplus_module_names();
State module_top_vector(const std::string& module);
struct NotEigenvector : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Eigenvalue of o(u) = u_{wt u - 1} on the top vector; u in {omega, E, J}.
Scalar top_level_eigenvalue(const std::string& u, const std::string& module);
std::vector<TopLevelRow> vplus_module_table();

// sigma^{-1} on the span of J, E: sigma^{-1}(J) = a J + b E, sigma^{-1}(E) = c J + d E.
struct SigmaOnJE {
  Scalar jj, je, ej, ee;
};
SigmaOnJE sigma_inverse_on_JE();
// For each module W, the row whose (omega, E, J) triple equals that of W^sigma.
std::map<std::string, std::string> sigma_conjugate_pattern();

// ---- twisted sectors ----

struct TwistedSector {
  int i = 1, j = 1;  // W^i with Delta(hprime) for j = 1, Delta(-hprime) for j = 2
  State hvec;
  SectorId sector;
};
TwistedSector twisted_sector(int i, int j);
// Smallest L^sigma(0) eigenvalue among untwisted weights <= 2.
Rational twisted_lowest_weight(const TwistedSector& t);
// Basis of W^{i,T_j}(n): L^sigma(0)-eigenvectors with eigenvalue lowest + n.
std::vector<State> twisted_graded_piece(const TwistedSector& t, const Rational& n);

struct TwistedTop {
  std::string label;
  State vec;
  Rational weight;  // certified L^sigma(0) eigenvalue
};
std::vector<TwistedTop> twisted_top_vectors();

// ---- quarter module ----

struct QuarterModule {
  State top;
  Rational top_weight;
  std::vector<State> generators;  // weight-9/4 eigenvectors, normalized shapes
  std::vector<Scalar> eigenvalues;
  std::vector<Rational> weights;   // 1/4, 9/4, 9/4
  Scalar a;                        // coefficient of e^{3b/4} + e^{-3b/4} in the first generator
  int dim_top = 0, dim_94 = 0;
  bool shape_ok = false;
};
QuarterModule decompose_quarter_module();

// ---- classification table ----

struct ModuleDescriptor {
  std::string name;
  std::string realization;
  Rational lowest_weight;
  Rational expected_weight;
  bool verified = false;
};
std::vector<ModuleDescriptor> module_catalog();

}  // namespace voalab
