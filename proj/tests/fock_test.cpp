#include <gtest/gtest.h>

#include "voalab/fock.hpp"
#include "voalab/named.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

TEST(Monomial, WeightCountsLatticePart) {
  EXPECT_EQ(Monomial().weight(), 0);
  EXPECT_EQ(Monomial(8).weight(), 4);  // e^b
  EXPECT_EQ(Monomial(16).weight(), 16);
  EXPECT_EQ(Monomial(1).weight(), frac(1, 16));
  EXPECT_EQ(Monomial::from_parts({3, 1, 1}, 8).weight(), 9);
}

TEST(Monomial, CanonicalParts) {
  const Monomial m = Monomial::from_parts({1, 3, 1});
  EXPECT_EQ(m.parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(m, Monomial::from_parts({3, 1, 1}));
  EXPECT_EQ(m.degree(), 5);
  EXPECT_EQ(m.length(), 3);
}

TEST(State, NoZeroCoefficients) {
  State s = State::lattice(8);
  s.add(Monomial(8), Scalar(-1));
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.size(), 0u);
}

TEST(State, Weights) {
  EXPECT_EQ(named_vector("J").weight(), 4);
  EXPECT_EQ(State::vacuum().weight(), 0);
  EXPECT_EQ(named_vector("E2").weight(), 16);
  EXPECT_THROW((State::vacuum() + State::lattice(8)).weight(), GradingError);
  EXPECT_THROW(State().weight(), GradingError);
}

TEST(State, Sectors) {
  EXPECT_TRUE(SectorId::coset(0).contains(8));
  EXPECT_FALSE(SectorId::coset(0).contains(4));
  EXPECT_TRUE(SectorId::coset(1).contains(9));
  EXPECT_TRUE(SectorId::full_l2().contains(4));
  EXPECT_TRUE(SectorId::full_l2_half().contains(2));
  EXPECT_FALSE(SectorId::full_l2_half().contains(4));
}

TEST(Involutions, Theta) {
  EXPECT_EQ(theta(named_vector("E")), named_vector("E"));
  EXPECT_EQ(theta(named_vector("F")), -named_vector("F"));
  EXPECT_EQ(theta(named_vector("J")), named_vector("J"));
}

TEST(Involutions, Tau1) {
  EXPECT_EQ(tau1(named_vector("x2")), -named_vector("x2"));
  EXPECT_EQ(tau1(named_vector("E")), named_vector("E"));
  EXPECT_EQ(tau1(State::vacuum()), State::vacuum());
}

TEST(LatticeComponent, Filters) {
  EXPECT_EQ(lattice_component(named_vector("E"), 1), named_vector("E"));
  EXPECT_EQ(lattice_component(named_vector("J"), 0), named_vector("J"));
  EXPECT_TRUE(lattice_component(named_vector("J"), 1).is_zero());
}

TEST(Heisenberg, Commutator) {
  const State v = State(Monomial::from_parts({2, 1}, 8), Scalar(1));
  const State lhs = heisenberg(2, heisenberg(-2, v)) - heisenberg(-2, heisenberg(2, v));
  EXPECT_EQ(lhs, v * Scalar(2));
  EXPECT_EQ(heisenberg(0, State::lattice(8)), State::lattice(8) * (Scalar(2) * Scalar::sqrt2()));
}

TEST(Partitions, Counts) {
  EXPECT_EQ(partition_count(20), 627);
  EXPECT_EQ(partition_count(20, 2), 137);
  EXPECT_EQ(partitions(4, 2), (std::vector<std::vector<int>>{{4}, {2, 2}}));
}

TEST(GradedBasis, Dimensions) {
  // Vzb at weight 4: p(4) Heisenberg monomials plus e^{+-b}
  EXPECT_EQ(graded_basis(SectorId::coset(0), 4).size(), 7u);
  EXPECT_EQ(graded_basis(SectorId::full_l2(), 1).size(), 3u);
  EXPECT_EQ(graded_basis(SectorId::full_l2_half(), frac(1, 4)).size(), 2u);
}

TEST(State, RenderingIsCanonical) {
  const State a = named_vector("E");
  State b = State::lattice(-8);
  b += State::lattice(8);
  EXPECT_EQ(a.to_string(), b.to_string());
}
