#include <gtest/gtest.h>

#include "gw/weyl/weyl.hpp"
#include "oracles.hpp"

using namespace gw;
using namespace gw::weyl;

namespace {

// Operators act on Q[t] by multiplication (x) and differentiation (d); the product of two
// operators must act as composition.
using UPoly = std::vector<Rational>;

UPoly act(const WeylElement& u, const UPoly& p) {
  UPoly out(p.size() + 64);
  for (const auto& [k, c] : u.terms()) {
    auto [a, b] = k;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0 || static_cast<int>(i) < b) continue;
      Rational v = p[i] * falling_factorial(static_cast<int>(i), b) * c;
      out[i - static_cast<std::size_t>(b) + static_cast<std::size_t>(a)] += v;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

WeylElement random_weyl(oracle::Sampler& s, int deg, int terms) {
  WeylElement w;
  for (int t = 0; t < terms; ++t) {
    int d = s.range(0, deg);
    int a = s.range(0, d);
    w.add_term({a, d - a}, s.range(-4, 4));
  }
  return w;
}

}  // namespace

TEST(Weyl, CommutationRule) {
  EXPECT_EQ(parse_weyl("d*x"), parse_weyl("x*d + 1"));
  EXPECT_EQ(parse_weyl("d x - x d"), WeylElement(1));
  EXPECT_EQ(parse_weyl("d^2*x^2").to_string(), "x^2*d^2 + 4*x*d + 2");
}

TEST(Weyl, ProductActsAsComposition) {
  oracle::Sampler s(3);
  for (int trial = 0; trial < 40; ++trial) {
    WeylElement u = random_weyl(s, 4, 3), v = random_weyl(s, 4, 3);
    UPoly p;
    for (int i = 0; i < 7; ++i) p.push_back(s.range(-3, 3));
    EXPECT_EQ(act(u * v, p), act(u, act(v, p)));
  }
}

TEST(Weyl, Associativity) {
  oracle::Sampler s(5);
  for (int trial = 0; trial < 20; ++trial) {
    WeylElement a = random_weyl(s, 3, 3), b = random_weyl(s, 3, 3), c = random_weyl(s, 3, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Weyl, Symbols) {
  auto ctx = symbol_context();
  EXPECT_EQ(weyl_symbol(parse_weyl("x d + 1"), WeylFiltration::Sigma, ctx), parse_polynomial(ctx, "X*xi"));
  EXPECT_EQ(weyl_symbol(parse_weyl("x^2 + d"), WeylFiltration::Bernstein, ctx), parse_polynomial(ctx, "X^2"));
  EXPECT_TRUE(weyl_symbol(WeylElement(), WeylFiltration::Sigma, ctx).is_zero());
  // symbols multiply
  oracle::Sampler s(9);
  for (int t = 0; t < 20; ++t) {
    WeylElement u = random_weyl(s, 3, 3), v = random_weyl(s, 3, 3);
    if (u.is_zero() || v.is_zero()) continue;
    for (auto f : {WeylFiltration::Sigma, WeylFiltration::Bernstein})
      EXPECT_EQ(weyl_symbol(u * v, f, ctx), weyl_symbol(u, f, ctx) * weyl_symbol(v, f, ctx));
  }
}

TEST(Weyl, LeftMembership) {
  auto cof = left_membership_bounded(WeylElement(1), {WeylElement::X(), WeylElement::D()}, 1);
  ASSERT_TRUE(cof);
  EXPECT_EQ((*cof)[0], WeylElement::D());
  EXPECT_EQ((*cof)[1], -WeylElement::X());
  EXPECT_FALSE(left_membership_bounded(WeylElement::X(), {parse_weyl("x d")}, 4));
  auto self = left_membership_bounded(parse_weyl("x d"), {parse_weyl("x d")}, 0);
  ASSERT_TRUE(self);
  EXPECT_EQ((*self)[0], WeylElement(1));
}

TEST(Weyl, GradedLeftIdeals) {
  auto ctx = symbol_context();
  Ideal g1 = gr_left_ideal_bounded({parse_weyl("x d")}, WeylFiltration::Sigma, 6, ctx);
  EXPECT_TRUE(g1.equals(Ideal(ctx, {"X*xi"})));
  Ideal g2 = gr_left_ideal_bounded({WeylElement::D()}, WeylFiltration::Sigma, 6, ctx);
  EXPECT_TRUE(g2.equals(Ideal(ctx, {"xi"})));
  Ideal g3 = gr_left_ideal_bounded({WeylElement(1)}, WeylFiltration::Sigma, 2, ctx);
  EXPECT_TRUE(g3.is_unit());
  // A_1 x + A_1 d is everything, so its graded ideal is the unit ideal once 1 is reached
  Ideal g4 = gr_left_ideal_bounded({WeylElement::X(), WeylElement::D()}, WeylFiltration::Bernstein, 1, ctx);
  EXPECT_TRUE(g4.is_unit());
}

TEST(Weyl, OreConditionForPowersOfX) {
  std::vector<WeylElement> samples = {WeylElement::D(), parse_weyl("d^2"), parse_weyl("x d + 1")};
  EXPECT_TRUE(ore_certify(WeylElement::X(), samples, 4).certified);
  EXPECT_TRUE(ore_certify(WeylElement::D(), {WeylElement::X(), parse_weyl("x^2")}, 4).certified);
}

TEST(Weyl, ParseErrors) {
  EXPECT_THROW(parse_weyl("x + y"), ParseError);
  EXPECT_THROW(parse_weyl("d^"), ParseError);
}
