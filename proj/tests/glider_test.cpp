#include <gtest/gtest.h>

#include <set>

#include "gw/glider/filtration.hpp"
#include "gw/models.hpp"
#include "oracles.hpp"

using namespace gw;
using namespace gw::glider;
using namespace gw::models;

namespace {

Subspace<Exponents> monomial_span(const std::set<int>& exps) {
  Subspace<Exponents> s;
  for (int k : exps) s.insert({{Exponents{k}, Rational(1)}});
  return s;
}

// Exponents of Q[X^2, X^3] up to n.
std::set<int> cusp_exponents(int n) {
  std::set<int> out{0};
  for (int k = 2; k <= n; ++k) out.insert(k);
  return out;
}

CChain ideal_chain(const QuotientRing& A, std::vector<const char*> gens, glider::Tail tail) {
  CChain c;
  c.coefficients = std::vector<Polynomial>{A.parse("X")};
  for (const char* g : gens) c.levels.push_back({A.parse(g)});
  c.tail = tail;
  c.factor = A.parse("X");
  return c;
}

}  // namespace

TEST(Glider, CuspIsValid) {
  auto G = build_glider(cusp_ring(), cusp_chain(), 12);
  const auto& A = G.engine();
  EXPECT_TRUE(G.contains(A.parse("X") * A.parse("X^2"), 0, 12));
  EXPECT_FALSE(G.contains(A.parse("X^3"), 1, 12));
  auto rep = check_fragment_axioms(G, 12, 6);
  EXPECT_EQ(rep.status(), Status::Pass);
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.witness;
  EXPECT_FALSE(rep.standard);
  EXPECT_FALSE(rep.natural);
}

TEST(Glider, XYTIsValid) {
  auto G = build_glider(xyt_ring(), xyt_chain(), 8);
  EXPECT_EQ(check_fragment_axioms(G, 8, 4).status(), Status::Pass);
  auto H = build_glider(xyt_ring(), xyt_chain(true), 8);
  EXPECT_EQ(check_fragment_axioms(H, 8, 4).status(), Status::Pass);
}

TEST(Glider, NonDescendingChainRejected) {
  QuotientRing A(make_context({"X"}));
  CRing R = line_ring();
  try {
    build_glider(R, ideal_chain(A, {"X^2", "X"}, glider::Tail::RepeatLast), 8);
    FAIL() << "expected rejection";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find(": X lies in M_1"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(build_glider(R, trivial_chain(R), 8));
}

TEST(Glider, ActionFailureCarriesWitness) {
  // M_0 = Q[X^2,X^3] listed as a span, M_1 = Q X^3: X * X^3 = X^4 lies in M_0 but F_0 moves X^3 out
  const int B = 10;
  QuotientRing A(make_context({"X"}));
  CChain c;
  c.coefficients = std::vector<Polynomial>{};
  c.levels.emplace_back();
  for (int k : cusp_exponents(B + 6)) c.levels[0].push_back(A.parse("X^" + std::to_string(k)));
  c.levels.push_back({A.parse("X^3")});
  c.tail = glider::Tail::Zero;
  auto G = build_glider(cusp_ring(), c, B);
  auto rep = check_fragment_axioms(G, B);
  ASSERT_EQ(rep.checks.size(), 3u);
  EXPECT_EQ(rep.checks[0].status, Status::Fail);
  EXPECT_NE(rep.checks[0].witness.find("not in M_1"), std::string::npos);
  EXPECT_EQ(rep.checks[1].status, Status::Pass);
  // M_1 = Q X is not inside M_0
  c.levels[1] = {A.parse("X")};
  EXPECT_THROW(build_glider(cusp_ring(), c, B), PreconditionError);
}

TEST(Glider, StarChainOfCusp) {
  const int B = 12;
  auto G = build_glider(cusp_ring(), cusp_chain(), B);
  auto star = star_chain(G, B, 3);
  // oracle: monomials X^k of M_0 with X^{k+t} in M_0 for every monomial X^t of F_i R
  auto m0 = cusp_exponents(B);
  for (int i = 0; i <= 3; ++i) {
    std::set<int> fi;
    for (int t = 0; t <= B; ++t)
      if (i >= 1 || m0.count(t)) fi.insert(t);
    std::set<int> expect;
    for (int k : m0) {
      bool ok = true;
      for (int t : fi)
        if (k + t <= B && !m0.count(k + t)) ok = false;
      if (ok) expect.insert(k);
    }
    Subspace<Exponents> got;
    for (const auto& g : star.chain.levels[static_cast<std::size_t>(i)]) got.insert(g.terms());
    EXPECT_TRUE(got == monomial_span(expect)) << "level " << i;
  }
  // M_1* strictly contains Q X^2 + (X^4): it also has X^3
  Subspace<Exponents> m1;
  for (const auto& g : star.chain.levels[1]) m1.insert(g.terms());
  EXPECT_TRUE(m1.contains(G.level(1, B).space));
  EXPECT_TRUE(m1.contains(SparseVec<Exponents>{{Exponents{3}, Rational(1)}}));
  EXPECT_FALSE(star.all_natural);
  // M* is again a fragment
  auto S = build_glider(cusp_ring(), star.chain, B);
  EXPECT_EQ(check_fragment_axioms(S, B, 3).status(), Status::Pass);
}

TEST(Glider, NaturalGliderIsFixedByStar) {
  CRing R = line_ring();
  auto G = build_glider(R, trivial_chain(R), 8);
  auto star = star_chain(G, 8, 3);
  EXPECT_TRUE(star.all_natural);
  for (int i = 0; i <= 3; ++i) {
    Subspace<Exponents> s;
    for (const auto& g : star.chain.levels[static_cast<std::size_t>(i)]) s.insert(g.terms());
    EXPECT_TRUE(s == G.level(i, 8).space);
  }
}

TEST(Glider, NaturalOverStrongFiltrationIsStandard) {
  auto G = build_glider(laurent_ring(), laurent_chain(), 10);
  auto rep = check_fragment_axioms(G, 10, 4);
  EXPECT_EQ(rep.status(), Status::Pass);
  EXPECT_TRUE(rep.natural);
  EXPECT_TRUE(rep.standard) << rep.standard_witness;
}

TEST(Glider, StrictSubfragment) {
  QuotientRing A(make_context({"X"}));
  CRing R = line_ring();
  auto N = build_glider(R, ideal_chain(A, {"1", "X", "X^2"}, glider::Tail::Multiply), 10);
  auto M = build_glider(R, ideal_chain(A, {"X^2", "X^2", "X^2"}, glider::Tail::Multiply), 10);
  auto rep = check_fragment_axioms(M, 10, 4, &N);
  EXPECT_EQ(rep.checks.back().name, "strict subfragment");
  EXPECT_EQ(rep.checks.back().status, Status::Pass);
  auto M2 = build_glider(R, ideal_chain(A, {"X^2", "X^3", "X^4"}, glider::Tail::Multiply), 10);
  EXPECT_EQ(check_fragment_axioms(M2, 10, 4, &N).checks.back().status, Status::Fail);
}

TEST(Glider, Bodies) {
  auto X = build_glider(xyt_ring(), xyt_chain(), 8);
  auto bx = body(X, 10, 8);
  EXPECT_TRUE(bx.basis.empty());
  EXPECT_TRUE(bx.stabilized);
  auto C = build_glider(cusp_ring(), cusp_chain(), 12);
  auto bc = body(C, 10, 12);
  EXPECT_TRUE(bc.basis.empty());
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(C.level(n, 12).space.contains(bc.space));
  CRing R = line_ring();
  auto T = build_glider(R, trivial_chain(R), 8);
  auto bt = body(T, 10, 8);
  EXPECT_TRUE(bt.space == T.level(0, 8).space);
  EXPECT_TRUE(bt.stabilized);
}

TEST(GliderFiltration, NegativePartIsTheChain) {
  const int B = 12;
  auto F = glider_filtration(build_glider(cusp_ring(), cusp_chain(), B), 10);
  std::set<int> m1{2};
  for (int k = 4; k <= B; ++k) m1.insert(k);
  EXPECT_TRUE(F->piece(-1, B) == monomial_span(m1));
  // F_0 contains X^3 = X * X^2 but not X
  const auto& A = F->engine();
  EXPECT_TRUE(F->in_piece(A.parse("X^3"), 0, B));
  EXPECT_FALSE(F->in_piece(A.parse("X"), 0, B));
  EXPECT_TRUE(F->in_piece(A.parse("X"), 1, B));

  auto Y = glider_filtration(build_glider(xyt_ring(), xyt_chain(), 8), 10);
  const auto& E = Y->engine();
  Subspace<Exponents> y2;
  for (int j = 2; j <= 8; ++j)
    for (int c = 0; j + c <= 8; ++c) y2.insert(E.vec(E.parse("Y^" + std::to_string(j) + "*T^" + std::to_string(c))));
  EXPECT_TRUE(Y->piece(-2, 8) == y2);
}

TEST(GliderFiltration, XYTDegreeIsExponentDifference) {
  auto F = glider_filtration(build_glider(xyt_ring(), xyt_chain(), 8), 10);
  const auto& E = F->engine();
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      auto m = E.parse("X^" + std::to_string(i) + "*Y^" + std::to_string(j));
      EXPECT_EQ(F->degree(m, 8), filtring::FiltDegree::finite(i - j)) << i << "," << j;
    }
}

TEST(GliderFiltration, TrivialChainIsConstantBelow) {
  CRing R = line_ring();
  auto F = glider_filtration(build_glider(R, trivial_chain(R), 8), 3);
  EXPECT_EQ(F->bottom(), filtring::Bottom::Constant);
  EXPECT_TRUE(F->degree(R.engine().parse("X + 1"), 8).is_minus_infinity());
  EXPECT_TRUE(F->piece(-20, 8) == F->piece(0, 8));
}

TEST(GradedFragment, XYTSymbolOfYActsAsZero) {
  auto G = build_glider(xyt_ring(), xyt_chain(), 8);
  GradedFragment<QuotientRing> g(G, 4, 8);
  const auto& E = G.engine();
  for (int i = 0; i <= 3; ++i) {
    EXPECT_TRUE(g.acts_as_zero(E.parse("Y"), 1, i)) << i;
    EXPECT_FALSE(g.acts_as_zero(E.parse("X"), 1, i)) << i;
  }
  auto w = g.killed_class(E.parse("Y"), 1, 0);
  ASSERT_TRUE(w);
  EXPECT_FALSE(g.filtration().in_piece(*w, -1, 8));
  EXPECT_EQ(g.fragment_check().status, Status::Pass);
}

TEST(GradedFragment, ZeroTailGivesZeroQuotients) {
  QuotientRing A(make_context({"X"}));
  CChain c = ideal_chain(A, {"1", "X"}, glider::Tail::Zero);
  auto G = build_glider(line_ring(), c, 8);
  GradedFragment<QuotientRing> g(G, 5, 8);
  for (int i = 2; i <= 5; ++i) EXPECT_TRUE(g.level_zero(i));
  EXPECT_FALSE(g.level_zero(1));
}

TEST(GradedFragment, StrongFiltrationShiftsInjectively) {
  auto G = build_glider(laurent_ring(), laurent_chain(), 10);
  GradedFragment<QuotientRing> g(G, 4, 10);
  const auto& E = G.engine();
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(g.classes(i).size(), 1u);
    EXPECT_FALSE(g.killed_class(E.parse("X"), 1, i)) << i;
  }
}
