#include <gtest/gtest.h>

#include "voalab/named.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

namespace {
const State& nv(const char* n) { return named_vector(n); }
}  // namespace

TEST(ModeApply, VacuumAxiom) {
  const State& v = nv("J");
  EXPECT_EQ(mode_apply(State::vacuum(), -1, v), v);
  for (int n : {-3, -2, 0, 1, 2}) EXPECT_TRUE(mode_apply(State::vacuum(), n, v).is_zero()) << n;
}

TEST(ModeApply, CreationProperty) {
  const State& u = nv("E");
  EXPECT_EQ(mode_apply(u, -1, State::vacuum()), u);
  EXPECT_TRUE(mode_apply(u, 0, State::vacuum()).is_zero());
}

TEST(ModeApply, WeightFourProducts) {
  EXPECT_EQ(mode_apply(nv("J"), 3, nv("J")), nv("u0") * Scalar(27) - nv("J") * Scalar(60));
  EXPECT_EQ(mode_apply(nv("E"), 0, nv("E")), nv("u3") + nv("v3") * Scalar(frac(20, 9)));
}

TEST(ModeApply, WeightNinePrimary) {
  EXPECT_EQ(mode_apply(nv("u9"), 8, nv("E")), nv("J") * (Scalar(-100) * Scalar::sqrt2()));
  const State c = mode_apply(nv("J"), -2, nv("E")) - mode_apply(nv("E"), -2, nv("J"));
  EXPECT_EQ(mode_apply(c, 8, nv("J")), nv("E") * Scalar(-10800));
}

TEST(ModeApply, IllegalFractionalMode) {
  EXPECT_THROW(mode_apply(State::lattice(8), frac(1, 2), State::lattice(8)), IllegalMode);
}

TEST(ModeApply, LatticeCocycleIsTrivial) {
  const State a = State::lattice(4), b = State::lattice(-4);
  EXPECT_EQ(mode_apply(a, 1, b), State::vacuum());
}

TEST(Virasoro, Basics) {
  EXPECT_EQ(virasoro(0, nv("J")), nv("J") * Scalar(4));
  EXPECT_EQ(virasoro(2, nv("omega")), State::vacuum() * Scalar(frac(1, 2)));
  EXPECT_TRUE(virasoro(-1, State::vacuum()).is_zero());
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(virasoro(n, nv("hprime")), n == 0 ? nv("hprime") : State()) << n;
}

TEST(Virasoro, OmegaIsLMinusTwoVacuum) {
  EXPECT_EQ(virasoro(-2, State::vacuum()), nv("omega"));
  EXPECT_EQ(mode_apply(nv("omega"), 1, nv("E")), virasoro(0, nv("E")));
}

TEST(ApplyWord, VacuumWords) {
  const State s = apply_word({2, 2}, State::vacuum());
  EXPECT_EQ(s.weight(), 4);
  EXPECT_TRUE(lattice_component(s, 1).is_zero());
  EXPECT_EQ(apply_word({4}, State::vacuum()) * Scalar(frac(-8, 3)) + s * Scalar(frac(112, 9)), nv("u0"));
}

TEST(Binomial, Generalized) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-3, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
}
