#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gw/charvar/charvar.hpp"
#include "gw/cli/config.hpp"
#include "gw/cli/report_io.hpp"
#include "gw/glider/filtration.hpp"
#include "gw/localize/laws.hpp"
#include "gw/models.hpp"
#include "gw/torsheaf/sheaf.hpp"
#include "gw/torsheaf/words.hpp"

namespace gw::cli {

// Effective parameters of one case run.
struct Params {
  int bound = 8;
  int depth = 10;
  int power_bound = 4;
  int samples = 20;
  std::map<std::string, std::vector<std::string>> extra;

  const std::vector<std::string>& param(const std::string& key) const { return extra.at(key); }
};

struct CaseInfo {
  std::string name;
  std::string summary;
  Params defaults;
  std::function<std::vector<Check>(const Params&)> run;
};

namespace cases {

using namespace gw::models;
using localize::ModulePtr;

inline ModulePtr ring_module(const CRing& R) { return std::make_shared<filtring::RingModule<QuotientRing>>(R); }

inline std::string b(int bound) { return "(bound " + std::to_string(bound) + ")"; }

inline Check expect(std::string name, bool ok, std::string witness, std::string anchor) {
  return ok ? pass(std::move(name), std::move(witness), std::move(anchor))
            : fail(std::move(name), std::move(witness), std::move(anchor));
}

// A bounded search either finds its certificate or stays undecided.
inline Check found(std::string name, bool ok, std::string witness, std::string missing, std::string anchor) {
  return ok ? pass(std::move(name), std::move(witness), std::move(anchor))
            : inconclusive(std::move(name), std::move(missing), std::move(anchor));
}

inline void append(std::vector<Check>& out, const std::vector<Check>& more, const std::string& prefix = {}) {
  for (auto c : more) {
    if (!prefix.empty()) c.name = prefix + ": " + c.name;
    out.push_back(std::move(c));
  }
}

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

inline std::vector<Check> body_checks(const CGlider& G, const Params& p, const std::string& anchor) {
  auto bd = glider::body(G, p.depth, p.bound);
  if (bd.basis.empty())
    return {pass("body is zero", "levels 0.." + std::to_string(p.depth) + " " + b(p.bound), anchor)};
  std::vector<std::string> els;
  for (const auto& e : bd.basis) els.push_back(G.engine().str(e));
  if (bd.stabilized) return {fail("body is zero", "body spanned by " + join(els), anchor)};
  return {inconclusive("body is zero", "levels 0.." + std::to_string(p.depth) + " still contain " + join(els) + " " + b(p.bound),
                       anchor)};
}

inline std::vector<Check> cusp(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "normalization of the cusp";
  filtring::GradedRing<QuotientRing> gr(cusp_ring(), 6, p.bound);
  auto eps2 = parse_polynomial(gr.context(), p.param("nilpotent").front());
  out.push_back(found("graded presentation has " + eps2.to_string() + " = 0", gr.relations().contains(eps2),
                      "relations " + gr.relations().to_string() + " up to symbol degree 6",
                      eps2.to_string() + " not among relations up to symbol degree 6 " + b(p.bound), anchor));
  auto pos = gr.positive_symbols();
  out.push_back(expect("exactly one positive-degree symbol", pos.size() == 1, join(pos), anchor));

  auto G = glider::build_glider(cusp_ring(), cusp_chain(), p.bound);
  const auto& A = G.engine();
  append(out, glider::check_fragment_axioms(G, p.bound, p.depth).checks);
  append(out, body_checks(G, p, anchor), "before localization");

  auto s = A.parse(p.param("localize_at").front());
  auto x4 = A.parse("X^4");
  auto rep = localize::glider_localize(G, s, p.bound, p.depth, p.power_bound, {x4});
  out.push_back(found("localized body contains X^4", !rep.body.empty(),
                      "loc_deg " + rep.degrees.front().second.to_string() + ", powers <= " + std::to_string(p.power_bound) +
                          ", depth " + std::to_string(p.depth),
                      "X^4 not in every level 0.." + std::to_string(p.depth) + " " + b(p.bound), anchor));

  charvar::LevelGraded gm(G, 3, 2, p.bound);
  auto eps = parse_polynomial(gm.context(), "eps");
  auto xi = charvar::strong_char_excludes(gm, charvar::Datum::symbol(eps), 2);
  out.push_back(found("eps excluded from the strong characteristic variety",
                      xi.excluded && charvar::verify_exclusion(gm, *xi.witness), xi.to_string(), xi.to_string(), anchor));

  auto F = glider::glider_filtration(G, p.depth + 4);
  auto sep = localize::kappa_separated_bounded(F, {s}, p.bound, 6);
  const std::string sname = "glider filtration not separated for (" + s.to_string() + ")";
  if (sep.verdict == localize::Separation::NotSeparated)
    out.push_back(pass(sname, sep.witness, anchor));
  else if (sep.verdict == localize::Separation::Separated)
    out.push_back(fail(sname, "separation certified: " + sep.witness, anchor));
  else
    out.push_back(inconclusive(sname, sep.witness + " " + b(p.bound), anchor));
  return out;
}

inline std::vector<Check> xyt(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "K[X,Y,T]/(XY - T)";
  filtring::GradedRing<QuotientRing> gr(xyt_ring(), 4, p.bound);
  auto xy = parse_polynomial(gr.context(), "x*y");
  out.push_back(found("graded relation x*y = 0", gr.relations().contains(xy), "relations " + gr.relations().to_string(),
                      "x*y not among relations up to symbol degree 4 " + b(p.bound), anchor));

  auto G = glider::build_glider(xyt_ring(), xyt_chain(), p.bound);
  const auto& A = G.engine();
  append(out, glider::check_fragment_axioms(G, p.bound, 4).checks);
  append(out, body_checks(G, p, anchor));

  auto localized = [&](const CGlider& H, const char* v) {
    std::vector<Polynomial> cands{A.one(), A.parse(v), A.parse(std::string(v) + "^2")};
    auto rep = localize::glider_localize(H, A.parse(v), p.bound, 4, p.power_bound, cands);
    std::vector<std::string> got;
    for (const auto& e : rep.body) got.push_back(A.str(e));
    const std::string name = std::string("localized body at S_") + v + " contains 1, " + v + ", " + v + "^2";
    return found(name, rep.body.size() == cands.size(), "body contains " + join(got),
                 "only " + join(got) + " in levels 0..4 " + b(p.bound), anchor);
  };
  out.push_back(localized(G, "Y"));
  out.push_back(localized(glider::build_glider(xyt_ring(), xyt_chain(true), p.bound), "X"));

  glider::GradedFragment<QuotientRing> g(G, 3, p.bound);
  auto t = localize::sigma_torsion_levels(g, A.parse("Y"), 1, p.bound);
  out.push_back(found("sigma(Y) kills a graded class", !t.torsion_free, t.witness,
                      "no killed class at levels 0..3 " + b(p.bound), anchor));
  return out;
}

inline std::vector<Check> weyl_holonomic(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "holonomic module A_1 / A_1 X d";
  auto M = charvar::weyl_cyclic({weyl::parse_weyl(p.param("operator").front())}, p.bound);
  auto cv = charvar::char_variety(M);
  Ideal want(M.context(), std::vector<std::string>{"X*xi"});
  bool same = cv.annihilator.contains(want) && want.contains(cv.annihilator);
  out.push_back(expect("graded annihilator is (X*xi)", same,
                       cv.annihilator.to_string() + " at symbol degree <= " + std::to_string(p.bound), anchor));
  auto X = parse_polynomial(M.context(), "X");
  out.push_back(expect("(X) lies in the characteristic variety", charvar::in_char_variety(M, {X}), "Ann <= (X)", anchor));
  const int search = std::min(p.bound, 2);
  auto v = charvar::strong_char_excludes(M, charvar::Datum::prime({X}), search);
  out.push_back(found("(X) excluded from the strong characteristic variety",
                      v.excluded && charvar::verify_exclusion(M, *v.witness),
                      v.to_string() + " at search degree <= " + std::to_string(search),
                      v.to_string(), anchor));
  return out;
}

inline std::vector<Check> smooth_detector(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "non-smooth morphism glider";
  {
    QuotientRing A(make_context({"X"}));
    charvar::SmoothnessInput in{A, {A.parse("X^2"), A.parse("X^3")}, A.parse("X^2"), A.parse("X"), A.parse("X"), {}, {"a", "b"}};
    auto rep = charvar::smoothness_glider(in, p.bound, 4, 3);
    append(out, rep.checks, "cusp tower");
  }
  {
    QuotientRing A(make_context({"X", "Y", "T"}), {"X*Y - T"});
    charvar::SmoothnessInput in{A, {A.parse("T")}, A.parse("T"), A.parse("Y"), A.parse("X"), {}, {"T"}};
    auto rep = charvar::smoothness_glider(in, std::min(p.bound, 8), 3, 3);
    append(out, rep.checks, "XY - T");
  }
  // Q[T] < Q[T,Y]: T = T * 1 is the only factorization, and 1 has a constant term
  QuotientRing A(make_context({"T", "Y"}));
  charvar::SmoothnessInput in{A, {A.parse("T")}, A.parse("T"), A.parse("T"), A.one(), {A.parse("Y")}, {"T"}};
  try {
    charvar::smoothness_glider(in, p.bound, 3, 3);
    out.push_back(fail("smooth instance rejected", "constructor accepted Q[T] < Q[T,Y]", anchor));
  } catch (const PreconditionError& e) {
    out.push_back(pass("smooth instance rejected", e.what(), anchor));
  }
  return out;
}

inline std::vector<Check> tower(const Params& p) {
  std::vector<Check> out;
  CRing T = ty_tower();
  append(out, localize::tower_quotient_filtration(T, {T.engine().parse("T")}, p.power_bound, p.bound, p.samples),
         "Q[T] < Q[T,Y]");
  CRing C = cusp_tower();
  auto cusp = localize::tower_quotient_filtration(C, {C.engine().parse("X^2"), C.engine().parse("X^3")}, p.power_bound,
                                                  p.bound, p.samples);
  out.push_back(cusp.front());
  out.back().name = "Q[X^2,X^3] < Q[X]: " + out.back().name;
  return out;
}

inline std::vector<Check> lattice(const Params& p) {
  std::vector<Check> out;
  auto ctx = make_context({"X", "Y"});
  auto family = torsheaf::subset_ideals(ctx, p.param("generators"));
  torsheaf::FilterOracle O(family, p.power_bound);
  append(out, torsheaf::lattice_oracle_check(O));
  auto open = [&](std::vector<std::string> g) { return torsheaf::BasisOpen{Ideal(ctx, g)}; };
  out.push_back(expect("X((X)) and X((Y)) cover X((X,Y))", torsheaf::is_cover(open({"X", "Y"}), {open({"X"}), open({"Y"})}),
                       "radical of (X) + (Y)", "basis opens"));
  out.push_back(expect("X((XY)) does not cover X((X))", !torsheaf::is_cover(open({"X"}), {open({"X*Y"})}),
                       "X not in the radical of (XY)", "basis opens"));
  std::vector<torsheaf::KernelFunctor> basis{torsheaf::KernelFunctor(Ideal(ctx, {"X"})),
                                             torsheaf::KernelFunctor(Ideal(ctx, {"Y"})),
                                             torsheaf::KernelFunctor(Ideal(ctx, {"X", "Y"}))};
  std::vector<torsheaf::KernelFunctor> space;
  for (const auto& I : torsheaf::subset_ideals(ctx, {"X", "Y", "X*Y", "X + Y"})) space.emplace_back(I);
  space.push_back(torsheaf::kf_trivial(ctx));
  append(out, torsheaf::gen_topology_check(basis, space));
  return out;
}

inline std::vector<Check> filtration_laws(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "quotient filtration";
  CRing R = line_ring();
  const auto& A = R.engine();
  localize::MultSetLocalization Q(ring_module(R), A.parse("X"), p.power_bound, p.bound);
  Check inv = pass("loc_deg of X^-k is -k", "k <= 5", anchor);
  for (int k = 0; k <= 5; ++k) {
    auto d = Q.loc_deg({A.one(), k});
    if (d != filtring::FiltDegree::finite(-k)) {
      inv = fail(inv.name, "k = " + std::to_string(k) + ": " + d.to_string(), anchor);
      break;
    }
  }
  out.push_back(inv);
  append(out, localize::filtration_laws_check(Q, 5, p.samples), "S_X");
  localize::IdealLocalization K(ring_module(R), {A.parse("X")}, p.power_bound, p.bound);
  Check kinv = pass("kappa_(X): degree of 1/X^k is -k", "k <= 5", anchor);
  for (int k = 0; k <= 5; ++k) {
    if (k > p.power_bound) {
      kinv = inconclusive(kinv.name, "1/X^" + std::to_string(k) + " needs power bound " + std::to_string(k) + " " + b(p.bound),
                          anchor);
      break;
    }
    auto d = K.degree({A.one(), A.pow(A.parse("X"), k)});
    if (d != filtring::FiltDegree::finite(-k)) {
      kinv = fail(kinv.name, "k = " + std::to_string(k) + ": " + d.to_string(), anchor);
      break;
    }
  }
  out.push_back(kinv);
  append(out, localize::filtration_laws_check(K, 5, p.samples), "kappa_(X)");
  return out;
}

inline std::vector<Check> sheaf(const Params& p) {
  std::vector<Check> out;
  CRing P = plane_ring();
  const auto& A = P.engine();
  const auto& cov = p.param("cover");
  if (cov.size() != 2) throw ConfigError("cover needs exactly two elements");
  auto s = A.parse(cov[0]), t = A.parse(cov[1]);
  append(out, torsheaf::sheaf_axiom_check(ring_module(P), s, t, p.samples, p.power_bound, p.bound));
  auto G = glider::build_glider(xyt_ring(), xyt_chain(), std::min(p.bound, 6));
  const auto& E = G.engine();
  out.push_back(torsheaf::glider_gluing_check(G, E.parse("X"), E.parse("Y"), p.power_bound, 3, std::min(p.bound, 6), 6));
  return out;
}

inline std::vector<Check> serre(const Params& p) {
  std::vector<Check> out;
  QuotientRing A(make_context({"X", "Y"}));
  append(out, torsheaf::serre_ring_check(A, A.parse("X"), A.parse("Y"), 3, std::min(p.bound, 6)), "Q[X,Y]");
  auto G = glider::build_glider(xyt_ring(), xyt_chain(), p.bound);
  out.push_back(torsheaf::serre_glider_check(G, G.engine().parse("X"), G.engine().parse("Y"), p.depth, p.power_bound, p.bound));
  out.back().name = "XY - T glider: " + out.back().name;
  return out;
}

inline std::vector<Check> words(const Params& p) {
  std::vector<Check> out;
  append(out, torsheaf::word_category_check({"X", "Y"}, 4));
  auto ctx = make_context({"X", "Y"});
  QuotientRing A(ctx);
  std::vector<Polynomial> letters;
  for (const auto& l : p.param("letters")) letters.push_back(A.parse(l));
  auto tests = torsheaf::subset_ideals(ctx, {"X", "Y", "X^2", "X*Y", "Y^2", "X + Y"});
  out.push_back(torsheaf::word_lemma_check(letters, tests, p.power_bound));
  out.push_back(localize::word_compose_commutative(A, letters, p.samples, 3, 3));

  const std::string anchor = "schematic rings";
  auto w = torsheaf::schematic_check_weyl(3);
  std::string first_tuple = w.witnesses.size() > 5 ? w.witnesses[5] : std::string{};
  out.push_back(expect("A_1 schematic for S_X, S_d", w.schematic, "16 tuples (X^a, d^b), a, b <= 3; " + first_tuple, anchor));
  int worst_bern = 0;
  for (const auto& d : w.degrees) worst_bern = std::max(worst_bern, d.second);
  out.push_back(expect("cofactor order <= a + b", w.within_degree,
                       w.witnesses.back() + "; largest least Bernstein degree " + std::to_string(worst_bern), anchor));
  auto pl = torsheaf::schematic_check_commutative(Ideal::zero(ctx), letters, 3);
  std::string proper;
  for (const auto& x : pl.witnesses)
    if (x.find("proper") != std::string::npos) {
      proper = x;
      break;
    }
  out.push_back(expect("Q[X,Y] is not schematic for these letters", !pl.schematic, proper.empty() ? "every tuple is the unit ideal" : proper,
                       anchor));
  return out;
}

inline std::vector<Check> xy_minus_one(const Params& p) {
  std::vector<Check> out;
  const std::string anchor = "C[X,Y]/(XY - 1)";
  CRing H = hyperbola_ring();
  const auto& A = H.engine();
  auto s = A.parse("X");
  std::size_t torsion = 0;
  for (int n = 1; n <= p.power_bound; ++n) torsion += localize::ring_torsion(A, s, n, p.bound).size();
  out.push_back(expect("R has no X-torsion, so G(kappa_S R) = 0", torsion == 0,
                       "no element of degree <= " + std::to_string(p.bound) + " killed by X^n, n <= " +
                           std::to_string(p.power_bound),
                       anchor));
  filtring::GradedRing<QuotientRing> G(H, 4, p.bound);
  auto d = localize::sigma_torsion_cyclic(G.relations(), G.sigma(s));
  // the presentation is computed up to the bound, so torsion freeness is not a certificate
  if (d.torsion_free)
    out.push_back(inconclusive("sigma(X)-torsion of G(R) contains y",
                               "no torsion in the presentation " + G.relations().to_string() + " " + b(p.bound), anchor));
  else
    out.push_back(expect("sigma(X)-torsion of G(R) contains y", d.witness == "y", "killed: " + d.witness, anchor));
  auto sep = localize::kappa_separated_bounded(ring_module(H), {s}, p.bound, 3);
  out.push_back(expect("separated for kappa_(X)", sep.verdict == localize::Separation::Separated,
                       std::string(localize::separation_name(sep.verdict)) + (sep.witness.empty() ? "" : ": " + sep.witness),
                       anchor));
  return out;
}

}  // namespace cases

// Registered cases in suite order.
inline const std::vector<CaseInfo>& case_table() {
  static const std::vector<CaseInfo> table = [] {
    auto P = [](int bound, int depth, int power, int samples, std::map<std::string, std::vector<std::string>> extra = {}) {
      return Params{bound, depth, power, samples, std::move(extra)};
    };
    return std::vector<CaseInfo>{
        {"cusp", "cusp normalization glider, localization at S_X", P(12, 10, 6, 20, {{"localize_at", {"X"}}, {"nilpotent", {"eps^2"}}}),
         cases::cusp},
        {"xyt", "K[X,Y,T]/(XY-T) glider and its localizations", P(8, 10, 4, 20), cases::xyt},
        {"weyl-holonomic", "A_1 / A_1 X d: characteristic and strong characteristic variety", P(6, 10, 4, 20, {{"operator", {"X*d"}}}),
         cases::weyl_holonomic},
        {"smooth-detector", "glider of a non-smooth morphism and the smooth rejection", P(10, 10, 4, 20), cases::smooth_detector},
        {"tower", "finite ring towers with kappa_I", P(8, 10, 3, 20), cases::tower},
        {"lattice", "kernel functor lattice against the filter oracle", P(8, 10, 4, 20,
                                                                       {{"generators", {"X", "Y", "X^2", "X*Y", "Y^2", "X + Y"}}}),
         cases::lattice},
        {"filtration-laws", "quotient filtration laws on Q[X]", P(12, 10, 6, 12), cases::filtration_laws},
        {"sheaf", "separation and gluing on a two-chart cover", P(8, 10, 4, 20, {{"cover", {"X", "Y"}}}), cases::sheaf},
        {"serre", "global sections under the cover {S_X, S_Y}", P(8, 10, 4, 20), cases::serre},
        {"words", "word category, word filters and schematic checks", P(8, 10, 4, 20, {{"letters", {"X", "Y"}}}), cases::words},
        {"xy-minus-one", "torsion of G(R) versus G of the torsion on XY - 1", P(8, 10, 4, 20), cases::xy_minus_one},
    };
  }();
  return table;
}

inline const CaseInfo& find_case(const std::string& name) {
  for (const auto& c : case_table())
    if (c.name == name) return c;
  throw ConfigError("unknown case '" + name + "'");
}

// Config values override the defaults; unknown parameters are rejected before anything runs.
inline Params effective_params(const CaseInfo& info, const CaseConfig& cfg) {
  Params p = info.defaults;
  if (cfg.bound) p.bound = *cfg.bound;
  if (cfg.depth) p.depth = *cfg.depth;
  if (cfg.power_bound) p.power_bound = *cfg.power_bound;
  if (cfg.samples) p.samples = *cfg.samples;
  for (const auto& [k, v] : cfg.params) {
    if (!p.extra.count(k)) throw ConfigError("case " + info.name + " has no parameter " + k);
    if (v.empty()) throw ConfigError("parameter " + k + " is empty");
    p.extra[k] = v;
  }
  return p;
}

inline Report run_case(const std::string& name, const CaseConfig& cfg = {}) {
  if (!cfg.name.empty() && cfg.name != name)
    throw ConfigError("config is for case '" + cfg.name + "', not '" + name + "'");
  const auto& info = find_case(name);
  Params p = effective_params(info, cfg);
  Report r;
  r.case_name = name;
  r.bounds = {{"bound", p.bound}, {"depth", p.depth}, {"power_bound", p.power_bound}, {"samples", p.samples}};
  try {
    r.checks = info.run(p);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("malformed parameter: ") + e.what());
  } catch (const InconclusiveError& e) {
    r.checks.push_back(inconclusive("case completed", e.what()));
  }
  return r;
}

// All named cases in the given order; bounds in cfg apply to every case.
inline Report verify_suite(const std::vector<std::string>& names, const CaseConfig& cfg = {}) {
  Report agg;
  agg.case_name = "suite";
  if (cfg.bound) agg.bounds.push_back({"bound", *cfg.bound});
  if (cfg.depth) agg.bounds.push_back({"depth", *cfg.depth});
  if (cfg.power_bound) agg.bounds.push_back({"power_bound", *cfg.power_bound});
  if (cfg.samples) agg.bounds.push_back({"samples", *cfg.samples});
  CaseConfig shared = cfg;
  shared.name.clear();
  shared.params.clear();
  for (const auto& n : names) agg.cases.push_back(run_case(n, shared));
  return agg;
}

inline std::vector<std::string> all_case_names() {
  std::vector<std::string> out;
  for (const auto& c : case_table()) out.push_back(c.name);
  return out;
}

}  // namespace gw::cli
