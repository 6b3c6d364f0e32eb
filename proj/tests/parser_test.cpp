#include <gtest/gtest.h>

#include "voalab/named.hpp"
#include "voalab/parser.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

TEST(Parser, NamedAndLiterals) {
  EXPECT_EQ(parse_state_expr("E"), named_vector("E"));
  EXPECT_EQ(parse_state_expr("h(-1)h(-1)|0> * (1/2)"), named_vector("omega"));
  EXPECT_EQ(parse_state_expr("J - r3*r3*r3*i*E"), named_vector("X1"));
  EXPECT_EQ(parse_state_expr("|1b> + |-1b>"), named_vector("E"));
  EXPECT_EQ(parse_state_expr("L(-2)|0>"), named_vector("omega"));
  EXPECT_EQ(parse_state_expr("|1/4b>"), State::lattice(2));
}

TEST(Parser, RoundTripsRendering) {
  for (const char* n : {"J", "u9", "X2", "hprime", "y1", "w2"}) {
    const State& v = named_vector(n);
    EXPECT_EQ(parse_state_expr(v.to_string()), v) << n;
  }
  const Scalar z = Scalar::zeta3() + Scalar::sqrt6();
  EXPECT_EQ(parse_scalar_expr(z.to_string()), z);
}

TEST(Parser, OperatorPowers) {
  EXPECT_EQ(parse_state_expr("L(-2)^2|0>"), apply_word({2, 2}, State::vacuum()));
  EXPECT_EQ(parse_rational("2^-3"), frac(1, 8));
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_state_expr("E +"), ParseError);
  EXPECT_THROW(parse_state_expr("nosuch"), ParseError);
  EXPECT_THROW(parse_state_expr("E E"), ParseError);
  EXPECT_THROW(parse_rational("r2"), ParseError);
  EXPECT_THROW(parse_state_expr("1/0"), ParseError);
  try {
    parse_state_expr("J + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
}

TEST(Named, Catalog) {
  EXPECT_TRUE(is_named_vector("u9"));
  EXPECT_FALSE(is_named_vector("u99"));
  EXPECT_THROW(named_vector("u99"), UnknownName);
  EXPECT_EQ(named_vector("E"), State::lattice(8) + State::lattice(-8));
  EXPECT_EQ(lattice_component(named_vector("u9"), 1), named_vector("u9"));
  EXPECT_GE(named_vector_names().size(), 20u);
}
