#include <gtest/gtest.h>

#include "voalab/named.hpp"
#include "voalab/sectors.hpp"
#include "voalab/structure.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

namespace {
const State& nv(const char* n) { return named_vector(n); }
State commutator9() { return mode_apply(nv("J"), -2, nv("E")) - mode_apply(nv("E"), -2, nv("J")); }
}  // namespace

TEST(Pair, NamedNorms) {
  EXPECT_EQ(pair(nv("E"), nv("E")), Scalar(2));
  EXPECT_EQ(pair(nv("J"), nv("J")), Scalar(54));
  EXPECT_EQ(pair(nv("J"), nv("E")), Scalar(0));
  EXPECT_EQ(pair(nv("u9"), nv("u9")), Scalar(5400));
  const State c = commutator9();
  EXPECT_EQ(pair(c, c), Scalar(43200));
}

TEST(Pair, ZeroAcrossWeights) {
  EXPECT_EQ(pair(nv("J"), nv("omega")), Scalar(0));
  EXPECT_EQ(pair(State::vacuum(), State::vacuum()), Scalar(1));
}

TEST(Gram, SmallCases) {
  const auto g1 = gram({State::vacuum()});
  EXPECT_EQ(g1, (std::vector<std::vector<Scalar>>{{Scalar(1)}}));
  const auto g2 = gram({nv("E"), nv("F")});
  EXPECT_EQ(g2[0][0], Scalar(2));
  EXPECT_EQ(g2[1][1], Scalar(-2));
  EXPECT_EQ(g2[0][1], Scalar(0));
  EXPECT_EQ(g2[1][0], Scalar(0));
}

TEST(Primary, Detection) {
  EXPECT_TRUE(is_primary(nv("u9")));
  EXPECT_FALSE(is_primary(nv("omega")));
  EXPECT_TRUE(is_primary(commutator9()));
  EXPECT_TRUE(is_primary(nv("J")));
  EXPECT_TRUE(is_primary(nv("E")));
}

TEST(VacuumWords, Enumeration) {
  const auto w4 = vacuum_words(4, WordBase::Vacuum);
  ASSERT_EQ(w4.size(), 2u);
  EXPECT_EQ(w4[0].parts, std::vector<int>{4});
  EXPECT_EQ(w4[1].parts, (std::vector<int>{2, 2}));
  const auto w20 = vacuum_words(20, WordBase::U16);
  ASSERT_EQ(w20.size(), 5u);
  const std::vector<std::vector<int>> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(w20[k].parts, want[k]);
  EXPECT_EQ(vacuum_words(20, WordBase::Vacuum).size(), static_cast<std::size_t>(partition_count(20, 2)));
  EXPECT_EQ(w20[2].to_string(), "L(-2)^2u16");
}

TEST(Decompose, TrivialVacuumWord) {
  const DecompositionResult d = decompose_over(apply_word({2, 2}, State::vacuum()), vacuum_words(4, WordBase::Vacuum));
  EXPECT_TRUE(d.residual.is_zero());
  EXPECT_EQ(d.rank, 2);
  EXPECT_EQ(d.coefficients[0].second, Scalar(0));
  EXPECT_EQ(d.coefficients[1].second, Scalar(1));
}

TEST(Decompose, ReportsResidualOutsideSpan) {
  const DecompositionResult d = decompose_over(nv("J"), vacuum_words(4, WordBase::Vacuum));
  EXPECT_FALSE(d.residual.is_zero());
}

TEST(SolveInSpan, CommutatorIsMultipleOfU9) {
  const SpanSolve s = solve_in_span(commutator9(), {nv("u9")});
  EXPECT_TRUE(s.residual.is_zero());
  EXPECT_EQ(s.x[0], Scalar(-2) * Scalar::sqrt2());
}

TEST(CFunctional, Literal) {
  EXPECT_EQ(c_functional(State(Monomial::from_parts({1, 1, 1, 1}), Scalar(1))), Scalar(1));
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(c_functional(apply_word(std::vector<int>(k, 2), State::vacuum())), Scalar(frac(1, 1L << k)));
  EXPECT_EQ(c_functional(nv("E")), Scalar(0));
}

TEST(U16, PrimaryWithLatticePart) {
  const State& u = nv("u16");
  EXPECT_EQ(u.weight(), 16);
  EXPECT_TRUE(is_primary(u));
  EXPECT_EQ(lattice_component(u, 2), nv("E2") * Scalar(27));
  EXPECT_TRUE(virasoro(1, u).is_zero());
  EXPECT_EQ(sigma(u), u);
}

TEST(U16, MembershipOfU9Product) {
  State t = mode_apply(nv("u9"), 1, nv("u9"));
  EXPECT_EQ(lattice_component(t, 2), nv("E2") * Scalar(58800 * 27));
  t.axpy(Scalar(-58800), nv("u16"));
  EXPECT_TRUE(decompose_over(t, vacuum_words(16, WordBase::Vacuum)).residual.is_zero());
}

TEST(FixedSubspace, KFixedWeightFour) {
  const SubspaceBasis v4 = fixed_subspace({tau1, theta}, SectorId::full_l2(), 4);
  EXPECT_EQ(v4.size(), 4u);
  EXPECT_TRUE(v4.coordinates(nv("J")).has_value());
  EXPECT_FALSE(v4.coordinates(nv("F")).has_value());
  EXPECT_EQ(eigen_subspace(sigma, Scalar(1), v4).size(), 2u);
  EXPECT_EQ(fixed_subspace({theta}, SectorId::full_l2(), 0).size(), 1u);
}

TEST(FixedSubspace, SigmaEigenvectors) {
  const SubspaceBasis v4 = fixed_subspace({tau1, theta}, SectorId::full_l2(), 4);
  const SubspaceBasis e1 = eigen_subspace(sigma, Scalar::zeta3(), v4);
  ASSERT_EQ(e1.size(), 1u);
  EXPECT_TRUE(e1.coordinates(nv("X1")).has_value());
}
