#include <gtest/gtest.h>

#include "gw/charvar/charvar.hpp"
#include "gw/models.hpp"

using namespace gw;
using namespace gw::charvar;
using namespace gw::models;

namespace {

CyclicGraded holonomic() { return weyl_cyclic({weyl::parse_weyl("X*d")}, 6); }

Polynomial sym(const GradedModuleData& M, const char* s) { return parse_polynomial(M.context(), s); }

SmoothnessInput cusp_normalization() {
  QuotientRing A(make_context({"X"}));
  return {A, {A.parse("X^2"), A.parse("X^3")}, A.parse("X^2"), A.parse("X"), A.parse("X"), {}, {"a", "b"}};
}

SmoothnessInput xyt_input() {
  QuotientRing A(make_context({"X", "Y", "T"}), {"X*Y - T"});
  return {A, {A.parse("T")}, A.parse("T"), A.parse("Y"), A.parse("X"), {}, {"T"}};
}

}  // namespace

TEST(CharVar, HolonomicAnnihilator) {
  auto M = holonomic();
  auto r = char_variety(M);
  EXPECT_EQ(r.annihilator.to_string(), "(X*xi)");
  EXPECT_FALSE(r.empty);
  EXPECT_TRUE(in_char_variety(M, {sym(M, "X")}));
  EXPECT_TRUE(in_char_variety(M, {sym(M, "xi")}));
  EXPECT_FALSE(in_char_variety(M, {sym(M, "X - 1")}));
}

TEST(CharVar, HolonomicStrongVarietyExcludesX) {
  auto M = holonomic();
  auto v = strong_char_excludes(M, Datum::prime({sym(M, "X")}), 6);
  ASSERT_TRUE(v.excluded);
  EXPECT_EQ(v.witness->g_text, "xi");
  EXPECT_EQ(v.witness->m_text, "X");
  EXPECT_TRUE(verify_exclusion(M, *v.witness));
  // (X) lies in chi but not in xi: the strong variety is strictly smaller
  EXPECT_TRUE(in_char_variety(M, {sym(M, "X")}));
}

TEST(CharVar, ExclusionOutsideChi) {
  // Ann <= P fails: a generator of Ann outside P kills every class
  auto M = holonomic();
  auto v = strong_char_excludes(M, Datum::prime({sym(M, "X - 1")}), 6);
  EXPECT_TRUE(v.excluded);
}

TEST(CharVar, FaithfulModuleHasNoExclusion) {
  auto ctx = make_context({"x", "y"});
  CyclicGraded M(ctx, {1, 1}, Ideal::zero(ctx), Ideal::zero(ctx), 4);
  EXPECT_TRUE(char_variety(M).annihilator.is_zero());
  auto v = strong_char_excludes(M, Datum::prime({parse_polynomial(ctx, "x")}), 4);
  EXPECT_FALSE(v.excluded);
  EXPECT_EQ(v.to_string(), "in-xi-up-to(4)");
}

TEST(CharVar, ZeroModule) {
  auto ctx = make_context({"x"});
  CyclicGraded M(ctx, {1}, Ideal::zero(ctx), Ideal::unit(ctx), 4);
  EXPECT_TRUE(char_variety(M).empty);
  EXPECT_TRUE(M.is_zero_module());
}

TEST(CharVar, XYTAnnihilatorContainsY) {
  auto G = glider::build_glider(xyt_ring(), xyt_chain(), 8);
  LevelGraded M(G, 3, 3, 8);
  auto ann = M.annihilator();
  EXPECT_TRUE(ann.contains(sym(M, "y")));
  EXPECT_FALSE(ann.contains(sym(M, "x")));
  EXPECT_FALSE(ann.contains(sym(M, "T")));
  auto v = strong_char_excludes(M, Datum::symbol(sym(M, "y")), 3);
  ASSERT_TRUE(v.excluded);
  EXPECT_EQ(v.witness->m_text, "[1] in g_0");
  EXPECT_FALSE(strong_char_excludes(M, Datum::symbol(sym(M, "x")), 3).excluded);
}

TEST(CharVar, CuspEpsilonWitness) {
  auto G = glider::build_glider(cusp_ring(), cusp_chain(), 10);
  LevelGraded M(G, 3, 2, 10);
  auto v = strong_char_excludes(M, Datum::symbol(sym(M, "eps")), 2);
  ASSERT_TRUE(v.excluded);
  EXPECT_EQ(v.witness->g_text, "eps");
  // eps X^3 = X^4 lies in M_0; the class of X^4 one level down is killed as well
  EXPECT_EQ(v.witness->m_text, "[X^3] in g_0");
  EXPECT_TRUE(verify_exclusion(M, *v.witness));
  auto k = M.killed_space({sym(M, "eps")}, -1);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(M.class_string(-1, k.basis().front()), "[X^4] in g_-1");
}

TEST(CharVar, GenClosedOnPrimes) {
  auto M = holonomic();
  auto v = strong_char_excludes(M, Datum::prime({sym(M, "X")}), 6);
  ASSERT_TRUE(v.excluded);
  for (const char* p : {"X", ""}) {
    Datum larger = Datum::prime(*p ? std::vector<Polynomial>{sym(M, p)} : std::vector<Polynomial>{});
    ASSERT_TRUE(datum_leq(M, Datum::prime({sym(M, "X")}), larger));
    EXPECT_TRUE(witness_transfers(M, *v.witness, larger, 4)) << p;
    EXPECT_TRUE(strong_char_excludes(M, larger, 6).excluded);
  }
}

TEST(CharVar, GenClosedOnIdeals) {
  auto G = glider::build_glider(xyt_ring(), xyt_chain(), 8);
  LevelGraded M(G, 3, 3, 8);
  Datum base = Datum::ideal({sym(M, "y")});
  auto v = strong_char_excludes(M, base, 3);
  ASSERT_TRUE(v.excluded);
  for (const char* g : {"y^2", "y*T", "y^3"}) {
    Datum larger = Datum::ideal({sym(M, g)});
    ASSERT_TRUE(datum_leq(M, base, larger)) << g;
    EXPECT_TRUE(witness_transfers(M, *v.witness, larger, 4)) << g;
  }
  EXPECT_FALSE(datum_leq(M, base, Datum::ideal({sym(M, "x")})));
}

TEST(CharVar, SmoothnessCusp) {
  auto rep = smoothness_glider(cusp_normalization(), 10, 4, 3);
  EXPECT_EQ(rep.status(), Status::Pass);
  EXPECT_TRUE(rep.exclusion.excluded);
  EXPECT_EQ(rep.exclusion.witness->m_text, "[1] in g_0");
}

TEST(CharVar, SmoothnessXYT) {
  auto rep = smoothness_glider(xyt_input(), 8, 3, 3);
  EXPECT_EQ(rep.status(), Status::Pass);
  const auto& A = rep.glider.engine();
  // M = K[T, Y] > (Y) > (Y)^2 ...
  EXPECT_TRUE(rep.glider.contains(A.parse("T*Y^2"), 0, 8));
  EXPECT_FALSE(rep.glider.contains(A.parse("X"), 0, 8));
  EXPECT_TRUE(rep.glider.contains(A.parse("Y^2"), 2, 8));
  EXPECT_FALSE(rep.glider.contains(A.parse("Y"), 2, 8));
}

TEST(CharVar, SmoothnessRejectsUnitFactor) {
  auto in = xyt_input();
  in.f = in.ring.parse("T");
  in.g = in.ring.one();
  EXPECT_THROW(smoothness_glider(in, 8, 3), PreconditionError);
  in.f = in.ring.parse("X");
  in.g = in.ring.parse("X");
  EXPECT_THROW(smoothness_glider(in, 8, 3), PreconditionError);
}
