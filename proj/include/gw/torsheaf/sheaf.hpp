#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gw/glider/glider.hpp"
#include "gw/localize/laws.hpp"
#include "gw/torsheaf/lattice.hpp"

namespace gw::torsheaf {

using localize::Fraction;
using localize::ModulePtr;
using filtring::FiltDegree;

// Sections of M over X(I): the saturation { q : I^n q <= M, n <= power_bound } with its
// quotient filtration.
struct Section {
  BasisOpen open;
  localize::IdealLocalization Q;

  bool contains(const Fraction& q) const { return Q.certify(q).has_value(); }
  FiltDegree degree(const Fraction& q) const { return Q.degree(q); }
};

inline Section section_on_open(const ModulePtr& M, const BasisOpen& U, int power_bound, int bound) {
  return {U, localize::IdealLocalization(M, U.ideal.generators(), power_bound, bound)};
}

// Restriction from X(I) to a smaller open X(J): the same fraction, certified over X(J).
inline std::optional<Fraction> restrict_section(const Section& from, const Section& to, const Fraction& q) {
  if (!open_contained(to.open, from.open))
    throw PreconditionError(to.open.label() + " is not contained in " + from.open.label());
  if (!from.contains(q) || !to.contains(q)) return std::nullopt;
  return q;
}

// Degree of a family member, read as a plain number (a below-bound marker contributes its value).
inline int degree_value(const FiltDegree& d) { return d.is_minus_infinity() ? std::numeric_limits<int>::min() : d.value; }

struct GlueResult {
  std::optional<Fraction> glued;
  std::string witness;  // disagreeing pair, or the glued element and its degree
};

// Glues a family x_i over the parts into a section over the target, checking compatibility on
// the pairwise overlaps (equality in the total ring of fractions) and the degree bound
// deg(x) <= max_i deg(x_i).
inline GlueResult glue(const Section& target, const std::vector<Section>& parts, const std::vector<Fraction>& family) {
  const auto& E = target.Q.engine();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!E.equal(E.mul(family[i].num, family[j].den), E.mul(family[j].num, family[i].den)))
        return {std::nullopt, "incompatible on the overlap of parts " + std::to_string(i) + " and " + std::to_string(j) +
                                  ": " + localize::to_string(family[i]) + " vs " + localize::to_string(family[j])};
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!parts[i].contains(family[i])) return {std::nullopt, localize::to_string(family[i]) + " is not a section of part " + std::to_string(i)};
  for (const auto& x : family)
    if (target.contains(x)) return {x, localize::to_string(x)};
  return {std::nullopt, "no member of the family is a section over " + target.open.label()};
}

// Separation and degree-bounded gluing for the cover X((s)) + X((t)) of X((s, t)), with
// families x_1 = h s^a / s^a, x_2 = h t^b / t^b built from sampled h.
inline std::vector<Check> sheaf_axiom_check(const ModulePtr& M, const Polynomial& s, const Polynomial& t, int samples,
                                            int power_bound, int bound, int max_power = 3, std::uint32_t seed = 29) {
  const auto& E = M->engine();
  const auto ctx = E.context();
  BasisOpen tgt{Ideal(ctx, std::vector<Polynomial>{s, t})};
  BasisOpen ps{Ideal(ctx, std::vector<Polynomial>{s})}, pt{Ideal(ctx, std::vector<Polynomial>{t})};
  std::vector<Check> out;
  if (!is_cover(tgt, {ps, pt})) {
    out.push_back(fail("cover", ps.label() + ", " + pt.label() + " do not cover " + tgt.label(), "basis cover"));
    return out;
  }
  out.push_back(pass("cover", ps.label() + " + " + pt.label() + " = " + tgt.label(), "basis cover"));
  Section T = section_on_open(M, tgt, power_bound, bound);
  std::vector<Section> parts{section_on_open(M, ps, power_bound, bound), section_on_open(M, pt, power_bound, bound)};
  std::mt19937 rng(seed);
  const int hdeg = std::max(1, bound / 2 - max_power);
  auto hs = localize::sample_elements(E, samples, hdeg, seed);

  Check sep = pass("separation", std::to_string(samples) + " sampled sections", "separated presheaf");
  for (const auto& h : hs) {
    Fraction x{h, E.one()};
    bool vanishes = true;
    for (const auto& P : parts) {
      auto r = restrict_section(T, P, x);
      vanishes = vanishes && r && E.is_zero(r->num);
    }
    if (vanishes) {
      sep = fail(sep.name, h.to_string() + " vanishes on every part", sep.anchor);
      break;
    }
  }
  out.push_back(sep);

  Check gl = pass("gluing", {}, "degree-bounded gluing");
  int worst = std::numeric_limits<int>::min();
  for (int k = 0; k < samples && gl.status == Status::Pass; ++k) {
    const auto& h = hs[static_cast<std::size_t>(k)];
    // the last samples use the largest powers
    int a = k + 3 >= samples ? max_power : static_cast<int>(rng() % static_cast<unsigned>(max_power + 1));
    int b = k + 3 >= samples ? max_power : static_cast<int>(rng() % static_cast<unsigned>(max_power + 1));
    Polynomial sa = E.pow(s, a), tb = E.pow(t, b);
    std::vector<Fraction> fam{{E.mul(h, sa), sa}, {E.mul(h, tb), tb}};
    auto g = glue(T, parts, fam);
    if (!g.glued) {
      gl = fail(gl.name, "pair " + std::to_string(k) + ": " + g.witness, gl.anchor);
      break;
    }
    FiltDegree dg = T.degree(*g.glued);
    int mx = std::max(degree_value(parts[0].degree(fam[0])), degree_value(parts[1].degree(fam[1])));
    if (!dg.at_most(mx)) {
      gl = fail(gl.name, "pair " + std::to_string(k) + ": glued degree " + dg.to_string() + " > " + std::to_string(mx), gl.anchor);
      break;
    }
    worst = std::max(worst, degree_value(dg) - mx);
  }
  if (gl.status == Status::Pass)
    gl.witness = std::to_string(samples) + " compatible pairs, max(glued - family degree) = " + std::to_string(worst);
  out.push_back(gl);

  std::vector<Fraction> bad{{E.one(), s}, {E.one(), t}};
  auto r = glue(T, parts, bad);
  out.push_back(r.glued ? fail("incompatible family", "glued " + r.witness, "compatibility")
                        : pass("incompatible family", "rejected: " + r.witness, "compatibility"));
  return out;
}

// Degree-zero gluing for a glider: elements of M_0 restricted to both parts glue back to an
// element of F_0 over the covered open.
inline Check glider_gluing_check(const glider::Glider<QuotientRing>& G, const Polynomial& s, const Polynomial& t,
                                 int depth, int power_bound, int bound, int samples) {
  const std::string name = "glider gluing in degree 0";
  auto F = glider::glider_filtration(G, depth);
  const auto& E = G.engine();
  const auto ctx = E.context();
  BasisOpen tgt{Ideal(ctx, std::vector<Polynomial>{s, t})};
  Section T = section_on_open(F, tgt, power_bound, bound);
  std::vector<Section> parts{section_on_open(F, {Ideal(ctx, std::vector<Polynomial>{s})}, power_bound, bound),
                             section_on_open(F, {Ideal(ctx, std::vector<Polynomial>{t})}, power_bound, bound)};
  auto basis = G.level(0, bound).space.basis();
  int n = 0;
  for (const auto& v : basis) {
    if (n == samples) break;
    Polynomial m = E.from_vec(v);
    if (E.degree(m) > bound / 2) continue;
    ++n;
    std::vector<Fraction> fam{{m, E.one()}, {m, E.one()}};
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!parts[i].degree(fam[i]).at_most(0))
        return fail(name, m.to_string() + " has degree " + parts[i].degree(fam[i]).to_string() + " on part " + std::to_string(i),
                    "degree-bounded gluing");
    auto g = glue(T, parts, fam);
    if (!g.glued) return fail(name, m.to_string() + ": " + g.witness, "degree-bounded gluing");
    FiltDegree d = T.degree(*g.glued);
    if (!d.at_most(0)) return fail(name, m.to_string() + " glues to degree " + d.to_string(), "degree-bounded gluing");
  }
  return pass(name, std::to_string(n) + " families from M_0, depth " + std::to_string(depth), "degree-bounded gluing");
}

// ---------------------------------------------------------------- global sections

// Sections of the polynomial ring over the cover by the principal opens of s and t: fractions
// p / s^a and q / t^b that agree, enumerated with numerators of degree <= bound, form exactly
// the polynomials; the covered open X((s, t)) has no other sections.
inline std::vector<Check> serre_ring_check(const QuotientRing& A, const Polynomial& s, const Polynomial& t, int max_power,
                                           int bound) {
  std::vector<Check> out;
  const auto ctx = A.context();
  BasisOpen tgt{Ideal(ctx, std::vector<Polynomial>{s, t})};
  bool cov = is_cover(tgt, {{Ideal(ctx, std::vector<Polynomial>{s})}, {Ideal(ctx, std::vector<Polynomial>{t})}});
  // the two Ore sets do not form a global cover in the filter sense: (s, t) lies in both filters
  out.push_back(cov ? pass("basis cover", tgt.label() + " covered; not a cover of the trivial functor since " +
                                              tgt.label().substr(1) + " lies in both filters",
                           "global cover")
                    : fail("basis cover", tgt.label() + " not covered", "global cover"));
  Check inter = pass("sections of the cover", {}, "global sections");
  for (int a = 0; a <= max_power && inter.status == Status::Pass; ++a)
    for (int b = 0; b <= max_power; ++b) {
      Polynomial sa = A.pow(s, a), tb = A.pow(t, b);
      // over the common denominator s^a t^b
      Subspace<Exponents> vs, vt;
      auto monos = A.standard_monomials(bound);
      for (const auto& e : monos) {
        Polynomial m = Polynomial::monomial(ctx, e);
        vs.insert(A.vec(A.mul(m, tb)));
        vt.insert(A.vec(A.mul(m, sa)));
      }
      auto both = vs.intersect(vt);
      std::size_t expected = 0;
      for (const auto& e : monos)
        if (total_degree(e) + A.degree(sa) <= bound && total_degree(e) + A.degree(tb) <= bound) ++expected;
      Polynomial d = A.mul(sa, tb);
      bool polys = true;
      for (const auto& v : both.basis()) polys = polys && A.divide(A.from_vec(v), d, bound).has_value();
      if (!polys || both.dim() != expected) {
        inter = fail(inter.name, "a = " + std::to_string(a) + ", b = " + std::to_string(b) + ": dimension " +
                                     std::to_string(both.dim()) + ", expected " + std::to_string(expected),
                     inter.anchor);
        break;
      }
    }
  if (inter.status == Status::Pass)
    inter.witness = "agreeing fractions are polynomials for powers <= " + std::to_string(max_power) + ", bound " +
                    std::to_string(bound);
  out.push_back(inter);
  auto M = std::make_shared<filtring::RingModule<QuotientRing>>(
      filtring::FilteredRing<QuotientRing>(A, {}, [&] {
        std::vector<Polynomial> v;
        for (std::size_t i = 0; i < ctx->size(); ++i) v.push_back(Polynomial::variable(ctx, i));
        return v;
      }()));
  localize::IdealLocalization Q(M, {s, t}, 4, bound);
  Check sat = pass("sections over the covered open", "1/s, 1/t, 1/(s t) are not sections", "global sections");
  for (const auto& den : {s, t, A.mul(s, t)})
    if (Q.certify({A.one(), den})) sat = fail(sat.name, "1/(" + den.to_string() + ") is a section", sat.anchor);
  out.push_back(sat);
  return out;
}

// Global sections of the glider sheaf under the principal opens of s and t:
// F_0 S_s^-1 Omega meet F_0 S_t^-1 Omega meet Omega = M_0 at the bound.
inline Check serre_glider_check(const glider::Glider<QuotientRing>& G, const Polynomial& s, const Polynomial& t, int depth,
                                int power_bound, int bound) {
  auto F = glider::glider_filtration(G, depth);
  localize::MultSetLocalization Qs(F, s, power_bound, bound), Qt(F, t, power_bound, bound);
  auto both = Qs.level_in_module(0).intersect(Qt.level_in_module(0));
  const auto& m0 = G.level(0, bound).space;
  if (both == m0)
    return pass("glider global sections", "dimension " + std::to_string(m0.dim()) + " at bound " + std::to_string(bound) +
                                              ", depth " + std::to_string(depth), "global sections");
  for (const auto& v : both.basis())
    if (!m0.contains(v))
      return fail("glider global sections", G.engine().str(G.engine().from_vec(v)) + " is a global section outside M_0",
                  "global sections");
  for (const auto& v : m0.basis())
    if (!both.contains(v))
      return fail("glider global sections", G.engine().str(G.engine().from_vec(v)) + " in M_0 is not a global section",
                  "global sections");
  return fail("glider global sections", "spaces differ", "global sections");
}

}  // namespace gw::torsheaf
