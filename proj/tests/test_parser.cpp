#include <gtest/gtest.h>

#include "liouville/errors.hpp"
#include "liouville/parser.hpp"
#include "test_support.hpp"

using namespace liouville;

namespace {

const std::vector<Symbol> kBeta{{"beta", false}};

template <class E>
std::size_t position_of(const std::string& text, const std::vector<Symbol>& params = {}) {
  try {
    parse({text, params});
  } catch (const E& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  const LaurentQ a = parse_concrete("x^2 + 3/x");
  EXPECT_EQ(a.terms(), (LaurentQ::TermMap{{-1, Rational(3)}, {2, Rational(1)}}));
  const LaurentQ b = parse_concrete("x^2 + 5 + 2*x^-2");
  EXPECT_EQ(b.terms(), (LaurentQ::TermMap{{-2, Rational(2)}, {0, Rational(5)}, {2, Rational(1)}}));
  const LaurentP c = parse({"x^2 + beta/x", kBeta});
  EXPECT_EQ(c.coeff(-1), ParamElement::symbol(kBeta[0]));
  EXPECT_THROW(parse({"x^2 + y", kBeta}), UndeclaredSymbol);
}

TEST(Parse, ArithmeticForms) {
  EXPECT_EQ(parse_concrete("(x + 1/2)^2"), parse_concrete("x^2 + x + 1/4"));
  EXPECT_EQ(parse_concrete("-(x - 3)*2"), parse_concrete("-2*x + 6"));
  EXPECT_EQ(parse_concrete("1/(2*x^2)"), parse_concrete("1/2*x^-2"));
  EXPECT_EQ(parse_concrete("3/4/x"), parse_concrete("3/4*x^-1"));
  EXPECT_EQ(parse_concrete("x^0"), parse_concrete("1"));
  // The exponent is an integer literal, so x^1/2 is (x^1)/2.
  EXPECT_EQ(parse_concrete("x^1/2"), parse_concrete("1/2*x"));
  EXPECT_EQ(parse({"k^2/4", {{"k", false}}}), parse({"(1/4)*k*k", {{"k", false}}}));
  EXPECT_EQ(parse_concrete("(5/16)/x^2 + x"), parse_concrete("x + 5/16*x^-2"));
}

TEST(Parse, InvertibleParameters) {
  const std::vector<Symbol> ps{{"r", true}, {"b", false}};
  const LaurentP p = parse({"b/r + r^-2*x", ps});
  EXPECT_EQ(p.coeff(0), ParamElement::symbol(ps[1]) * ParamElement::symbol(ps[0], -1));
  EXPECT_THROW(parse({"r/b", ps}), SyntaxError);
  EXPECT_THROW(parse({"b^-1", ps}), SyntaxError);
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(position_of<SyntaxError>("2x"), 1u);
  EXPECT_EQ(position_of<SyntaxError>("x + "), 4u);
  EXPECT_EQ(position_of<SyntaxError>("(x + 1"), 6u);
  EXPECT_EQ(position_of<SyntaxError>("x $ 1"), 2u);
  EXPECT_EQ(position_of<SyntaxError>("1/(x+1)"), 2u);
  EXPECT_EQ(position_of<SyntaxError>("1/0"), 2u);
  EXPECT_EQ(position_of<SyntaxError>(""), 0u);
  EXPECT_EQ(position_of<UndeclaredSymbol>("x + 3*y"), 6u);
  EXPECT_EQ(position_of<NonIntegerExponent>("x^y", {{"y", false}}), 2u);
  EXPECT_EQ(position_of<NonIntegerExponent>("x^(2)"), 2u);
  EXPECT_THROW(parse({"x", {{"x", false}}}), InputError);
  EXPECT_THROW(parse({"a", {{"a", false}, {"a", true}}}), InputError);
}

TEST(Format, Examples) {
  EXPECT_EQ(format(parse_concrete("x^2 + 3/x")), "x^2 + 3*x^-1");
  EXPECT_EQ(format(LaurentQ()), "0");
  EXPECT_EQ(format(parse_concrete("-1/2")), "-1/2");
  EXPECT_EQ(format(parse_concrete("-x + 1 - x^-3/3")), "-x + 1 - 1/3*x^-3");
  EXPECT_EQ(format(parse({"(beta + 2)/x - beta*x^2", kBeta})), "-beta*x^2 + (beta + 2)*x^-1");
  EXPECT_EQ(format(parse({"beta - 1", kBeta})), "beta - 1");
}

TEST(Format, RoundTripConcrete) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const LaurentQ p = liouville::testing::random_laurent(rng, -6, 6, 5);
    EXPECT_EQ(parse_concrete(format(p)), p) << format(p);
  }
}

TEST(Format, RoundTripSymbolic) {
  const std::vector<Symbol> ps{{"k0", false}, {"k1", true}, {"beta", false}};
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const LaurentP p = liouville::testing::random_laurent_param(rng, ps, -4, 4);
    EXPECT_EQ(parse({format(p), ps}), p) << format(p);
  }
}

TEST(ParamList, Syntax) {
  const auto ps = parse_param_list("k0, k1:inv,beta");
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[1].name, "k1");
  EXPECT_TRUE(ps[1].invertible);
  EXPECT_FALSE(ps[2].invertible);
  EXPECT_TRUE(parse_param_list("").empty());
  EXPECT_THROW(parse_param_list("a:odd"), InputError);
  EXPECT_THROW(parse_param_list("a,,b"), InputError);
}
