#include <gtest/gtest.h>

#include "gw/exactalg/quotient_ring.hpp"
#include "gw/filtring/filtered_module.hpp"
#include "gw/filtring/graded.hpp"
#include "gw/weyl/weyl.hpp"
#include "oracles.hpp"

using namespace gw;
using namespace gw::filtring;

namespace {

using CRing = FilteredRing<QuotientRing>;

// S = Q[X^2, X^3] inside Q[X], filtered by the generator X.
CRing cusp() {
  QuotientRing A(make_context({"X"}));
  return CRing(A, {A.parse("X^2"), A.parse("X^3")}, {A.parse("X")}, {"a", "b"}, {"eps"});
}

// Q[X,Y,T]/(XY - T) over S = Q[T], filtered by X and Y.
CRing xyt() {
  QuotientRing A(make_context({"X", "Y", "T"}), {"X*Y - T"});
  return CRing(A, {A.parse("T")}, {A.parse("X"), A.parse("Y")}, {"T"}, {"x", "y"});
}

CRing plane() {
  QuotientRing A(make_context({"X", "Y"}));
  return CRing(A, {}, {A.parse("X"), A.parse("Y")});
}

FilteredRing<weyl::WeylEngine> weyl_sigma() {
  weyl::WeylEngine W;
  return FilteredRing<weyl::WeylEngine>(W, {weyl::WeylElement::X()}, {weyl::WeylElement::D()}, {"X"}, {"xi"});
}

// Degree in a standard filtration by brute force: the least n such that r is a combination of
// products with at most n filtration factors, by dense elimination over the monomials of r and
// of those products.
int oracle_degree(const CRing& R, const Polynomial& r, int bound) {
  for (int n = 0; n <= bound; ++n) {
    std::vector<Polynomial> cols;
    for (const auto& p : R.products(bound))
      if (p.level <= n) cols.push_back(p.value);
    std::map<Exponents, std::size_t> index;
    for (const auto& [e, c] : r.terms()) index.emplace(e, 0);
    auto A = oracle::columns_matrix(cols, index);
    std::vector<oracle::Q> b(index.size());
    for (const auto& [e, c] : r.terms()) b[index.at(e)] = c;
    if (oracle::dense_solve(A, b)) return n;
  }
  return -1;
}

}  // namespace

TEST(FilteredRing, CuspDegrees) {
  CRing R = cusp();
  const auto& A = R.engine();
  EXPECT_EQ(R.degree(A.parse("X"), 12), FiltDegree::finite(1));
  EXPECT_EQ(R.degree(A.parse("X^2"), 12), FiltDegree::finite(0));
  EXPECT_EQ(R.degree(A.parse("X^5 + X"), 12), FiltDegree::finite(1));
  EXPECT_TRUE(R.degree(A.zero(), 12).is_minus_infinity());
}

TEST(FilteredRing, XYTDegree) {
  CRing R = xyt();
  const auto& A = R.engine();
  EXPECT_EQ(R.degree(A.parse("X*Y"), 8), FiltDegree::finite(0));
  EXPECT_EQ(R.degree(A.parse("X^2*T"), 8), FiltDegree::finite(2));
}

TEST(FilteredRing, BoundTooSmallIsInconclusive) {
  CRing R = plane();
  const auto& A = R.engine();
  EXPECT_THROW(R.degree(A.parse("X^3"), 2), InconclusiveError);
  try {
    R.degree(A.parse("X^3"), 2);
  } catch (const InconclusiveError& e) {
    EXPECT_EQ(e.bound, 2);
  }
  EXPECT_EQ(R.degree_auto(A.parse("X^3"), 2), FiltDegree::finite(3));
}

TEST(FilteredRing, DegreeAgreesWithOracle) {
  CRing R = cusp();
  oracle::Sampler s(11);
  auto ctx = R.engine().context();
  for (int t = 0; t < 25; ++t) {
    Polynomial r = s.polynomial(ctx, 7, 3);
    if (r.is_zero()) continue;
    EXPECT_EQ(R.degree(r, 12).value, oracle_degree(R, r, 12)) << r.to_string();
  }
}

TEST(FilteredRing, Subadditivity) {
  oracle::Sampler s(17);
  for (const CRing& R : {cusp(), xyt(), plane()}) {
    auto ctx = R.engine().context();
    for (int t = 0; t < 15; ++t) {
      Polynomial a = R.engine().nf(s.polynomial(ctx, 3, 2)), b = R.engine().nf(s.polynomial(ctx, 3, 2));
      if (a.is_zero() || b.is_zero()) continue;
      Polynomial ab = R.engine().mul(a, b);
      if (ab.is_zero()) continue;
      EXPECT_LE(R.degree(ab, 8).value, R.degree(a, 8).value + R.degree(b, 8).value);
    }
  }
  // G(Q[X,Y]) is a domain, so degrees add exactly
  CRing P = plane();
  auto ctx = P.engine().context();
  for (int t = 0; t < 15; ++t) {
    Polynomial a = s.polynomial(ctx, 3, 2), b = s.polynomial(ctx, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(P.degree(a * b, 8).value, P.degree(a, 8).value + P.degree(b, 8).value);
  }
}

TEST(FilteredRing, PiecesAreProductsOfFirstPiece) {
  for (const CRing& R : {cusp(), xyt()}) {
    const int bound = 8;
    const auto& E = R.engine();
    for (int n = 1; n <= 4; ++n) {
      Subspace<Exponents> prod;
      for (const auto& p : R.products(bound))
        for (const auto& q : R.products(bound))
          if (p.level <= n - 1 && q.level <= 1 && p.weight + q.weight <= bound)
            prod.insert(E.vec(E.mul(p.value, q.value)));
      EXPECT_TRUE(prod == R.piece(n, bound)) << "n = " << n;
    }
  }
}

TEST(GradedRing, CuspPresentation) {
  GradedRing<QuotientRing> G(cusp(), 6, 12);
  auto rel = [&](const char* s) { return G.relations().contains(parse_polynomial(G.context(), s)); };
  EXPECT_TRUE(rel("eps^2"));
  EXPECT_TRUE(rel("a^3 - b^2"));
  EXPECT_TRUE(rel("eps*a"));
  EXPECT_TRUE(rel("eps*b"));
  EXPECT_FALSE(rel("eps"));
  EXPECT_FALSE(rel("a"));
  EXPECT_EQ(G.positive_symbols(), std::vector<std::string>{"eps"});
  // sigma(X)^2 = 0 while X^2 != 0
  const auto& A = G.filtered_ring().engine();
  Polynomial s = G.sigma(A.parse("X"));
  EXPECT_TRUE(G.ring().nf(s * s).is_zero());
  EXPECT_EQ(G.sigma(A.one()).to_string(), "1");
}

TEST(GradedRing, XYTPresentation) {
  GradedRing<QuotientRing> G(xyt(), 4, 8);
  EXPECT_TRUE(G.relations().contains(parse_polynomial(G.context(), "x*y")));
  EXPECT_FALSE(G.relations().contains(parse_polynomial(G.context(), "x^2")));
  const auto& A = G.filtered_ring().engine();
  Polynomial sx = G.sigma(A.parse("X")), sy = G.sigma(A.parse("Y"));
  EXPECT_TRUE(G.ring().nf(sx * sy).is_zero());
  EXPECT_LT(G.filtered_ring().degree(A.parse("X*Y"), 8).value, 2);
}

TEST(GradedRing, TrivialFiltration) {
  QuotientRing A(make_context({"X"}));
  CRing R(A, {A.parse("X")}, {});
  GradedRing<QuotientRing> G(R, 3, 8);
  EXPECT_TRUE(G.positive_symbols().empty());
  EXPECT_TRUE(G.relations().is_zero());
}

TEST(GradedRing, StableInDegreeBound) {
  for (const CRing& R : {cusp(), xyt()}) {
    GradedRing<QuotientRing> G4(R, 4, 10), G5(R, 5, 10);
    for (const auto& g : G4.relations().generators()) EXPECT_TRUE(G5.relations().contains(g));
    for (const auto& g : G5.relations().generators())
      if (G5.symbol_degree(g) <= 4) {
        EXPECT_TRUE(G4.relations().contains(g)) << g.to_string();
      }
  }
}

TEST(GradedRing, SigmaMultiplicativeOrZero) {
  oracle::Sampler s(23);
  for (const CRing& R : {cusp(), xyt()}) {
    GradedRing<QuotientRing> G(R, 6, 10);
    const auto& E = R.engine();
    auto ctx = E.context();
    for (int t = 0; t < 15; ++t) {
      Polynomial a = E.nf(s.polynomial(ctx, 2, 2)), b = E.nf(s.polynomial(ctx, 2, 2));
      Polynomial ab = E.mul(a, b);
      if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
      int da = R.degree(a, 10).value, db = R.degree(b, 10).value, dab = R.degree(ab, 10).value;
      Polynomial prod = G.ring().nf(G.sigma(a) * G.sigma(b));
      if (dab == da + db) {
        EXPECT_EQ(prod, G.sigma(ab));
      } else {
        EXPECT_TRUE(prod.is_zero());
      }
    }
  }
}

TEST(GradedRing, WeylSigmaMatchesSymbol) {
  GradedRing<weyl::WeylEngine> G(weyl_sigma(), 4, 8);
  EXPECT_TRUE(G.relations().is_zero());
  auto ctx = weyl::symbol_context();
  for (const char* s : {"x d + 1", "d^2 + x", "x^2 d - d", "3"}) {
    auto u = weyl::parse_weyl(s);
    EXPECT_EQ(G.sigma(u).to_string(), weyl::weyl_symbol(u, weyl::WeylFiltration::Sigma, ctx).to_string()) << s;
  }
}

TEST(Rees, FibersPass) {
  EXPECT_EQ(rees_fibers_check(cusp(), 4, 12).status, Status::Pass);
  EXPECT_EQ(rees_fibers_check(weyl_sigma(), 4, 8).status, Status::Pass);
  QuotientRing A(make_context({"X"}));
  EXPECT_EQ(rees_fibers_check(CRing(A, {A.parse("X")}, {}), 2, 6).status, Status::Pass);
}

TEST(FilteredModule, RingAsModule) {
  RingModule<QuotientRing> M(cusp());
  const auto& A = M.engine();
  EXPECT_EQ(M.degree(A.parse("X^3"), 12), FiltDegree::finite(0));
  EXPECT_TRUE(M.in_piece(A.parse("X + X^2"), 1, 12));
  EXPECT_FALSE(M.in_piece(A.parse("X"), 0, 12));
  EXPECT_FALSE(M.in_piece(A.parse("X"), -1, 12));
}
