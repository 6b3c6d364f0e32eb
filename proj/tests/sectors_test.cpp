#include <gtest/gtest.h>

#include "voalab/named.hpp"
#include "voalab/sectors.hpp"
#include "voalab/twisted.hpp"

using namespace voalab;

namespace {
const State& nv(const char* n) { return named_vector(n); }

QSeries series(std::vector<long long> c) {
  QSeries q(static_cast<int>(c.size()) - 1);
  for (std::size_t k = 0; k < c.size(); ++k) q.at(static_cast<int>(k)) = c[k];
  return q;
}
}  // namespace

TEST(Sigma, OnNamedVectors) {
  EXPECT_EQ(sigma(nv("J")), nv("J") * Scalar(frac(-1, 2)) + nv("E") * Scalar(frac(9, 2)));
  EXPECT_EQ(sigma(nv("E")), nv("J") * Scalar(frac(-1, 6)) - nv("E") * Scalar(frac(1, 2)));
  EXPECT_EQ(sigma(nv("X1")), nv("X1") * Scalar::zeta3());
  EXPECT_EQ(sigma(State::vacuum()), State::vacuum());
}

TEST(Sigma, AgreesWithZeroModeExponential) {
  for (const char* n : {"J", "E", "x1", "x3", "w1", "u9"}) {
    EXPECT_EQ(sigma(nv(n)), zero_mode_exp(nv("hprime"), nv(n))) << n;
    EXPECT_EQ(sigma_inverse(sigma(nv(n))), nv(n)) << n;
  }
}

TEST(Characters, Heisenberg) {
  EXPECT_EQ(graded_dim("M1", 6), series({1, 1, 2, 3, 5, 7, 11}));
  EXPECT_EQ(graded_dim("Vzb+", 4)[4], 4);
  EXPECT_EQ(graded_dim("M1+", 8) + graded_dim("M1-", 8), graded_dim("M1", 8));
}

TEST(Characters, VirasoroL1) {
  EXPECT_EQ(char_L1(0, 4), series({1, 0, 1, 1, 2}));
  const QSeries c3 = char_L1(3, 9);
  for (int n = 0; n < 9; ++n) EXPECT_EQ(c3[n], 0) << n;
  EXPECT_EQ(c3[9], 1);
  QSeries sum(24);
  for (int p = 0; (2 + p) * (2 + p) <= 24; ++p) sum += char_L1(2 + p, 24);
  EXPECT_EQ(sum, graded_dim("M1(1)", 24));
}

TEST(Characters, FixedAlgebra) {
  const FixedDecomposition d = verify_fixed_algebra_decomposition(30);
  ASSERT_TRUE(d.ok) << d.error;
  EXPECT_EQ(d.multiplicity.at(0), 1);
  EXPECT_EQ(d.multiplicity.at(3), 1);
  EXPECT_EQ(d.multiplicity.at(4), 1);
  EXPECT_EQ(d.multiplicity.at(5), 0);
  EXPECT_EQ(graded_dim("fixed", 9)[9], char_L1(0, 9)[9] + 1);
}

TEST(Characters, UnknownObject) { EXPECT_THROW(graded_dim("nonsense", 4), std::invalid_argument); }

TEST(SigmaEigen, DimensionsAddUp) {
  for (int w = 0; w <= 8; ++w) {
    const SigmaEigenDims d = sigma_eigen_dims(w);
    EXPECT_EQ(d.d0 + d.d1 + d.d2, d.total) << w;
    EXPECT_EQ(d.d0, sigma_fixed_dim_trace(w)) << w;
  }
  EXPECT_EQ(sigma_eigen_dims(4).d1, 1);
}

TEST(TopLevel, TableEntries) {
  EXPECT_EQ(top_level_eigenvalue("J", "V-"), Scalar(-6));
  EXPECT_EQ(top_level_eigenvalue("J", "V(b/8)"), Scalar(frac(-3, 64)));
  EXPECT_EQ(top_level_eigenvalue("E", "V(b/4)"), Scalar(0));
  EXPECT_EQ(top_level_eigenvalue("omega", "V(3b/8)"), Scalar(frac(9, 16)));
}

TEST(TopLevel, SigmaConjugates) {
  const auto p = sigma_conjugate_pattern();
  EXPECT_EQ(p.at("V-"), "V(b/2)-");
  EXPECT_EQ(p.at("V(b/8)"), "VT2+");
  EXPECT_EQ(p.at("V+"), "V+");
}

TEST(Twisted, LowestWeightsAndPieces) {
  const TwistedSector t11 = twisted_sector(1, 1), t21 = twisted_sector(2, 1);
  EXPECT_EQ(twisted_lowest_weight(t11), frac(1, 36));
  EXPECT_EQ(twisted_lowest_weight(t21), frac(1, 9));
  EXPECT_TRUE(twisted_graded_piece(t11, frac(1, 3)).empty());
  const auto p = twisted_graded_piece(t11, frac(2, 3));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(twisted_l0(nv("y2"), t11.hvec), nv("y2") * Scalar(frac(25, 36)));
  EXPECT_EQ(twisted_l0(State::vacuum(), t11.hvec), State::vacuum() * Scalar(frac(1, 36)));
  EXPECT_EQ(twisted_l0(nv("w2"), t21.hvec), nv("w2") * Scalar(frac(1, 9)));
}

TEST(Twisted, TwelveWeights) {
  std::multiset<Rational> got;
  for (const auto& t : twisted_top_vectors()) got.insert(t.weight);
  const std::multiset<Rational> want = {frac(1, 36), frac(1, 36), frac(25, 36), frac(25, 36), frac(49, 36),
                                        frac(49, 36), frac(1, 9),  frac(1, 9),   frac(4, 9),   frac(4, 9),
                                        frac(16, 9),  frac(16, 9)};
  EXPECT_EQ(got, want);
}

TEST(Quarter, Decomposition) {
  const QuarterModule q = decompose_quarter_module();
  EXPECT_EQ(q.weights, (std::vector<Rational>{frac(1, 4), frac(9, 4), frac(9, 4)}));
  EXPECT_TRUE(q.shape_ok);
  EXPECT_FALSE(q.a.is_zero());
  EXPECT_EQ(q.top, State::lattice(2) + State::lattice(-2));
}

TEST(Catalog, TwentyOneModules) {
  const auto c = module_catalog();
  EXPECT_EQ(c.size(), 21u);
  for (const auto& d : c) EXPECT_EQ(d.lowest_weight, d.expected_weight) << d.name;
  auto find = [&](const std::string& n) {
    return std::find_if(c.begin(), c.end(), [&](const ModuleDescriptor& d) { return d.name == n; });
  };
  EXPECT_EQ(find("(V+)^1")->lowest_weight, 4);
  EXPECT_EQ(find("V(b/8)")->lowest_weight, frac(1, 16));
}
