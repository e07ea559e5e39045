#pragma once

// Ready-made filtered rings and gliders used by the case runner and the tests.

#include "gw/exactalg/quotient_ring.hpp"
#include "gw/filtring/filtered_ring.hpp"
#include "gw/glider/glider.hpp"
#include "gw/weyl/weyl.hpp"

namespace gw::models {

using CRing = filtring::FilteredRing<QuotientRing>;
using CGlider = glider::Glider<QuotientRing>;
using CChain = glider::Chain<QuotientRing>;

// Q[X^2, X^3] inside Q[X]; filtration generator X, symbols a = X^2, b = X^3, eps = X.
inline CRing cusp_ring() {
  QuotientRing A(make_context({"X"}));
  return CRing(A, {A.parse("X^2"), A.parse("X^3")}, {A.parse("X")}, {"a", "b"}, {"eps"});
}

// M_0 = Q[X^2,X^3] > Q X^2 + (X^4) > (X^5) > (X^6) > ...
inline CChain cusp_chain() {
  const QuotientRing A(make_context({"X"}));
  CChain c;
  c.levels = {{A.one()}, {A.parse("X^2"), A.parse("X^4"), A.parse("X^5")}, {A.parse("X^5"), A.parse("X^6")}};
  c.tail = glider::Tail::Multiply;
  c.factor = A.parse("X");
  return c;
}

// K[X,Y,T]/(XY - T) over K[T] with generators X, Y.
inline CRing xyt_ring() {
  QuotientRing A(make_context({"X", "Y", "T"}), {"X*Y - T"});
  return CRing(A, {A.parse("T")}, {A.parse("X"), A.parse("Y")}, {"T"}, {"x", "y"});
}

// K[T,v] > (v) > (v)^2 > ... for v = Y (or X when swapped).
inline CChain xyt_chain(bool swapped = false) {
  const QuotientRing A(make_context({"X", "Y", "T"}), {"X*Y - T"});
  auto v = A.parse(swapped ? "X" : "Y");
  CChain c;
  c.coefficients = std::vector<Polynomial>{A.parse("T"), v};
  c.levels = {{A.one()}, {v}};
  c.tail = glider::Tail::Multiply;
  c.factor = v;
  return c;
}

// Q[X,Y] with the standard degree filtration.
inline CRing plane_ring() {
  QuotientRing A(make_context({"X", "Y"}));
  return CRing(A, {}, {A.parse("X"), A.parse("Y")});
}

// Q[X] with the standard degree filtration.
inline CRing line_ring() {
  QuotientRing A(make_context({"X"}));
  return CRing(A, {}, {A.parse("X")});
}

// Q[X,Y]/(XY - 1) with the standard filtration by X and Y.
inline CRing hyperbola_ring() {
  QuotientRing A(make_context({"X", "Y"}), {"X*Y - 1"});
  return CRing(A, {}, {A.parse("X"), A.parse("Y")}, {}, {"x", "y"});
}

// Laurent ring Q[X, Z]/(XZ - 1) = Q[X, X^-1], F_0 = Q[Z], generator X; strongly filtered.
inline CRing laurent_ring() {
  QuotientRing A(make_context({"X", "Z"}), {"X*Z - 1"});
  return CRing(A, {A.parse("Z")}, {A.parse("X")}, {"z"}, {"x"});
}

// Degree-zero glider of the Laurent ring: M_n = Z^n Q[Z].
inline CChain laurent_chain() {
  const QuotientRing A(make_context({"X", "Z"}), {"X*Z - 1"});
  CChain c;
  c.levels = {{A.one()}};
  c.tail = glider::Tail::Multiply;
  c.factor = A.parse("Z");
  return c;
}

// Constant chain M_n = M_0 = R.
inline CChain trivial_chain(const CRing& R) {
  CChain c;
  c.coefficients = std::vector<Polynomial>{};
  for (const auto& g : R.generators()) c.coefficients->push_back(g.value);
  c.levels = {{R.engine().one()}};
  c.tail = glider::Tail::RepeatLast;
  return c;
}

// Tower Q[T] < Q[T,Y].
inline CRing ty_tower() {
  QuotientRing A(make_context({"T", "Y"}));
  return CRing::tower(A, {A.parse("T")}, {{A.parse("Y")}}, {"T"}, {{"y"}});
}

// Tower Q[X^2,X^3] < Q[X].
inline CRing cusp_tower() {
  QuotientRing A(make_context({"X"}));
  return CRing::tower(A, {A.parse("X^2"), A.parse("X^3")}, {{A.parse("X")}}, {"a", "b"}, {{"x"}});
}

// A_1 with the order filtration: F_0 = Q[X], generator d.
inline filtring::FilteredRing<weyl::WeylEngine> weyl_sigma_ring() {
  return filtring::FilteredRing<weyl::WeylEngine>(weyl::WeylEngine{}, {weyl::WeylElement::X()},
                                                  {weyl::WeylElement::D()}, {"X"}, {"xi"});
}

}  // namespace gw::models
