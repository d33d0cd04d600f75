#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "vsemi/term.hpp"

namespace vsemi {
namespace {

Term x(VarId i) { return Term::var(i); }

TEST(Parse, DefiningIdentityLeftSide) {
  EXPECT_EQ(parse("x+y+x*y*z"), (x(1) + x(2)) + (x(1) * x(2)) * x(3));
}

TEST(Parse, Constants) {
  EXPECT_EQ(parse("0"), Term::zero());
  EXPECT_EQ(parse("1"), Term::one());
}

TEST(Parse, PrecedenceAndParentheses) {
  EXPECT_EQ(parse("1+x*(y+1)"), Term::one() + x(1) * (x(2) + Term::one()));
  EXPECT_EQ(parse("x1+x2*x3"), parse("x1+(x2*x3)"));
  EXPECT_NE(parse("x1+x2*x3"), parse("(x1+x2)*x3"));
}

TEST(Parse, LeftAssociative) {
  EXPECT_EQ(parse("x1+x2+x3"), (x(1) + x(2)) + x(3));
  EXPECT_EQ(parse("x1*x2*x3"), (x(1) * x(2)) * x(3));
}

TEST(Parse, AliasesAndWhitespace) {
  EXPECT_EQ(parse(" x + y\t*z "), parse("x1+x2*x3"));
  EXPECT_EQ(parse("x12"), x(12));
}

TEST(Parse, Errors) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("x0"), 0u);
  EXPECT_EQ(position_of("x1+x0"), 3u);
  EXPECT_EQ(position_of("x1x2"), 2u);
  EXPECT_EQ(position_of("xy"), 1u);
  EXPECT_EQ(position_of("2"), 0u);
  EXPECT_EQ(position_of("(x+y"), 4u);
  EXPECT_EQ(position_of("x+"), 2u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("x+y)"), 3u);
  EXPECT_THROW(parse("x-y"), ParseError);
  EXPECT_THROW(parse("x^2"), ParseError);
  EXPECT_THROW(parse("x99999999999"), ParseError);
  EXPECT_THROW(parse("2*x"), ParseError);
}

TEST(Print, Examples) {
  EXPECT_EQ(print(x(1) + x(1)), "x1+x1");
  EXPECT_EQ(print((x(1) + x(2)) * x(3)), "(x1+x2)*x3");
  EXPECT_EQ(print(Term::zero()), "0");
  EXPECT_EQ(print(x(1) + (x(2) + x(3))), "x1+(x2+x3)");
  EXPECT_EQ(print(x(1) * (x(2) * x(3))), "x1*(x2*x3)");
  EXPECT_EQ(print(x(1) * (x(2) + x(3))), "x1*(x2+x3)");
  EXPECT_EQ(print(x(1) + x(2) * x(3)), "x1+x2*x3");
}

TEST(Vars, Examples) {
  EXPECT_EQ(vars(parse("x+y+x*y*z")), (std::set<VarId>{1, 2, 3}));
  EXPECT_TRUE(vars(Term::zero()).empty());
  EXPECT_EQ(vars(parse("x1*x1")), (std::set<VarId>{1}));
}

TEST(TermProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Term t = testing::random_term_upto(rng, 31, 12);
    ASSERT_EQ(parse(print(t)), t) << print(t);
  }
}

TEST(TermProperty, ProductBindsTighter) {
  const char* atoms[] = {"0", "1", "x", "x7", "(y+z)", "(x*y)"};
  for (const char* a : atoms)
    for (const char* b : atoms)
      for (const char* c : atoms) {
        const std::string lhs = std::string(a) + "+" + b + "*" + c;
        const std::string rhs = std::string(a) + "+(" + b + "*" + c + ")";
        ASSERT_EQ(parse(lhs), parse(rhs)) << lhs;
      }
}

TEST(TermSize, CountsNodes) {
  EXPECT_EQ(Term::one().size(), 1u);
  EXPECT_EQ(parse("x+y+x*y*z").size(), 9u);
}

}  // namespace
}  // namespace vsemi
