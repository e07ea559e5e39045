#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/filtring/graded.hpp"
#include "gw/glider/filtration.hpp"
#include "gw/localize/kernel_functor.hpp"

namespace gw::localize {

struct TorsionDecision {
  bool torsion_free = true;
  std::string witness;  // nonzero homogeneous class killed by the symbol
  int bound = 0;        // 0 for exact answers
};

// sbar-torsion of the cyclic graded ring ctx/rel: (rel : sbar^infinity) / rel, exact.
inline TorsionDecision sigma_torsion_cyclic(const Ideal& rel, const Polynomial& sbar) {
  Ideal sat = saturation(rel, Ideal(rel.context(), std::vector<Polynomial>{sbar}));
  for (const auto& g : sat.groebner())
    if (!rel.contains(g)) return {false, g.to_string(), 0};
  return {true, {}, 0};
}

// Torsion of g(M) for the symbol of r (filtration degree j) at levels 0..depth.
template <class Engine>
TorsionDecision sigma_torsion_levels(const glider::GradedFragment<Engine>& g, const typename Engine::Element& r, int j,
                                     int bound) {
  const auto& E = g.filtration().engine();
  for (int i = 0; i <= g.depth(); ++i)
    if (auto w = g.killed_class(r, j, i)) return {false, "class of " + E.str(*w) + " in g_-" + std::to_string(i), bound};
  return {true, {}, bound};
}

// Elements of degree <= bound killed by s^n in the ring itself.
inline std::vector<Polynomial> ring_torsion(const QuotientRing& A, const Polynomial& s, int n, int bound) {
  Polynomial sn = A.pow(s, n);
  std::vector<SparseVec<Exponents>> dom, imgs;
  for (const auto& e : A.standard_monomials(bound)) {
    Polynomial m = Polynomial::monomial(A.context(), e);
    dom.push_back(A.vec(m));
    imgs.push_back(A.vec(A.mul(sn, m)));
  }
  std::vector<Polynomial> out;
  for (const auto& c : kernel(imgs)) out.push_back(A.from_vec(combine(dom, c)));
  return out;
}

enum class Separation { Separated, NotSeparated, Inconclusive };

inline const char* separation_name(Separation s) {
  switch (s) {
    case Separation::Separated: return "separated";
    case Separation::NotSeparated: return "not-separated";
    case Separation::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SeparationDecision {
  Separation verdict = Separation::Inconclusive;
  std::string witness;
  int bound = 0;
};

// Separatedness of M for the kernel functor of I. A torsion-free associated graded is a
// certificate; otherwise elements of degree <= window whose quotient degree drops below their
// own degree witness the failure.
inline SeparationDecision kappa_separated_bounded(const ModulePtr& M, const std::vector<Polynomial>& ideal, int bound,
                                                  int window, int power_bound = 4) {
  if (M->piece(M->highest(bound), bound).empty()) return {Separation::Separated, "zero module", bound};
  const auto& R = M->ring();
  const auto& E = R.engine();
  IdealLocalization Q(M, ideal, power_bound, bound);
  if (std::dynamic_pointer_cast<const filtring::RingModule<QuotientRing>>(M)) {
    filtring::GradedRing<QuotientRing> G(R, window, bound);
    std::vector<Polynomial> symbols = G.relations().generators();
    for (const auto& v : Q.power_window(1).basis()) {
      auto x = E.from_vec(v);
      if (R.finite_degree(x, bound) <= window) symbols.push_back(G.sigma(x));
    }
    Ideal sat = saturation(G.relations(), Ideal(G.context(), symbols));
    if (sat.equals(G.relations()))
      return {Separation::Separated, "associated graded is torsion free for the symbol ideal", bound};
  }
  // an element whose quotient degree drops below its own degree
  const int lo = std::max(M->lowest(), -window);
  const int hi = std::min(M->highest(bound), window);
  for (int n = lo; n <= hi; ++n)
    for (const auto& v : M->piece(n, bound).basis()) {
      auto m = E.from_vec(v);
      FiltDegree d = M->degree_auto(m, bound);
      try {
        FiltDegree g = Q.degree({m, E.one()});
        if (d.is_finite() && (!g.is_finite() || g.value < d.value))
          return {Separation::NotSeparated,
                  m.to_string() + " has quotient degree " + g.to_string() + " < " + d.to_string(), bound};
      } catch (const InconclusiveError&) {
      }
    }
  return {Separation::Inconclusive, "no certificate and no witness within the window", bound};
}

}  // namespace gw::localize
