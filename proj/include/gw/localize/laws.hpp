#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gw/localize/kernel_functor.hpp"
#include "gw/localize/torsion.hpp"

namespace gw::localize {

// Deterministic small sample of nonzero ring elements of degree <= maxdeg.
inline std::vector<Polynomial> sample_elements(const QuotientRing& A, int count, int maxdeg, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto monos = A.standard_monomials(maxdeg);
  std::vector<Polynomial> out;
  while (static_cast<int>(out.size()) < count) {
    Polynomial p(A.context());
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      const auto& e = monos[rng() % monos.size()];
      p.add_term(e, Rational(static_cast<int>(rng() % 7) - 3));
    }
    p = A.nf(p);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

// Laws of the localized filtration at the powers of s for the ring viewed as a module over
// itself: submultiplicativity, strictness of R -> S^-1 R, the strong law F_n = F_{n-1} F_1 for
// |n| <= range, and separation.
inline std::vector<Check> filtration_laws_check(const MultSetLocalization& Q, int range, int samples,
                                                std::uint32_t seed = 7) {
  const auto& E = Q.engine();
  const auto& M = Q.module();
  const int B = Q.bound();
  std::vector<Check> out;
  auto els = sample_elements(E, samples, std::max(1, B / 3), seed);
  std::mt19937 rng(seed + 1);

  Check sub = pass("submultiplicativity", std::to_string(samples) + " sampled pairs", "quotient filtration product");
  for (int i = 0; i + 1 < samples && sub.status == Status::Pass; ++i) {
    LocalFraction a{els[static_cast<std::size_t>(i)], static_cast<int>(rng() % 3)};
    LocalFraction b{els[static_cast<std::size_t>(i + 1)], static_cast<int>(rng() % 3)};
    FiltDegree da = Q.loc_deg(a), db = Q.loc_deg(b), dab = Q.loc_deg(Q.mul(a, b));
    if (da.is_finite() && db.is_finite() && !dab.at_most(da.value + db.value))
      sub = fail(sub.name, to_string(a) + " * " + to_string(b) + " has degree " + dab.to_string(), sub.anchor);
  }
  out.push_back(sub);

  Check strict = pass("strictness", "F_n Q meet R = F_n R for |n| <= " + std::to_string(range) + " on " +
                                        std::to_string(samples) + " samples", "strict localization map");
  for (const auto& r : els) {
    FiltDegree dq = Q.loc_deg({r, 0});
    FiltDegree dr = M.degree_auto(r, B);
    if (!(dq == dr)) {
      strict = fail(strict.name, r.to_string() + ": degree " + dr.to_string() + " in M, " + dq.to_string() + " in Q",
                    strict.anchor);
      break;
    }
  }
  out.push_back(strict);

  const int K = 2 * range + 2;
  Check strong = pass("strong filtration", "F_n = F_{n-1} F_1 for |n| <= " + std::to_string(range), "strongly filtered");
  auto basis_of = [&](int n) {
    std::vector<Polynomial> v;
    for (const auto& x : Q.window(n, K).basis()) v.push_back(E.from_vec(x));
    return v;
  };
  const auto w1 = basis_of(1);
  const Polynomial lift = Q.s_pow(K);
  for (int n = -range; n <= range && strong.status == Status::Pass; ++n) {
    Subspace<Exponents> prod;
    for (const auto& a : basis_of(n - 1))
      for (const auto& c : w1) prod.insert(E.vec(E.mul(a, c)));
    for (const auto& z : basis_of(n))
      if (!prod.contains(E.vec(E.mul(lift, z)))) {
        strong = fail(strong.name, "(" + z.to_string() + ")/s^" + std::to_string(K) + " in F_" + std::to_string(n) +
                                       " but not in F_" + std::to_string(n - 1) + " F_1", strong.anchor);
        break;
      }
  }
  out.push_back(strong);

  Check sep = pass("separation", {}, "separated quotient filtration");
  int gamma = range;
  const int floor = -(K * std::max(1, E.degree(Q.element())) + B + 1);
  while (gamma >= floor && !Q.window(gamma, K).empty()) --gamma;
  if (gamma < floor) {
    sep = fail(sep.name, "F_gamma stays nonzero down to gamma = " + std::to_string(floor), sep.anchor);
  } else {
    sep.witness = "F_" + std::to_string(gamma) + " = 0 over s^" + std::to_string(K) + ", bound " + std::to_string(B);
    for (const auto& r : els) {
      FiltDegree d = Q.loc_deg({r, 0});
      if (d.is_below_bound()) {
        sep = fail(sep.name, r.to_string() + " has degree " + d.to_string() + " with decreasing witnesses", sep.anchor);
        break;
      }
    }
  }
  out.push_back(sep);
  return out;
}

// Strong law F_n = F_{n-1} F_1 for |n| <= range in the quotient filtration of a kernel functor.
// With a monomial ideal and monomial module pieces every F_n is spanned by fractions m / g^K,
// m a monomial and K the power bound, so windows over g^K decide the law.
inline Check strong_law_monomial(const IdealLocalization& Q, int range) {
  const std::string name = "strong filtration", anchor = "strongly filtered";
  const auto& E = Q.engine();
  const auto& M = Q.module();
  const int B = Q.bound(), K = Q.power_bound();
  if (Q.ideal().size() != 1 || Q.ideal().front().terms().size() != 1)
    return inconclusive(name, "decided only for a principal monomial ideal (bound " + std::to_string(B) + ")", anchor);
  for (int n = M.lowest(); n <= M.highest(B); ++n)
    for (const auto& v : M.piece(n, B).basis())
      if (v.size() != 1)
        return inconclusive(name, "module piece F_" + std::to_string(n) + " is not monomial (bound " + std::to_string(B) + ")",
                            anchor);
  if (K < range + 1)
    return inconclusive(name, "F_-" + std::to_string(range + 1) + " needs power bound " + std::to_string(range + 1) +
                                  " (bound " + std::to_string(B) + ")", anchor);
  const Polynomial gK = E.pow(Q.ideal().front(), K);
  const int top = B + E.degree(gK);
  std::vector<std::pair<Polynomial, FiltDegree>> fr;
  for (const auto& e : E.standard_monomials(top)) {
    Polynomial m = Polynomial::monomial(E.context(), e);
    fr.emplace_back(m, Q.degree({m, gK}));
  }
  auto window = [&](int n) {
    std::vector<Polynomial> v;
    for (const auto& [m, d] : fr)
      if (d.at_most(n)) v.push_back(m);
    return v;
  };
  const auto w1 = window(1);
  for (int n = -range; n <= range; ++n) {
    Subspace<Exponents> prod;
    for (const auto& a : window(n - 1))
      for (const auto& c : w1) prod.insert(E.vec(E.mul(a, c)));
    for (const auto& z : window(n))
      if (E.degree(z) + E.degree(gK) <= top && !prod.contains(E.vec(E.mul(z, gK))))
        return fail(name, "(" + z.to_string() + ")/" + gK.to_string() + " in F_" + std::to_string(n) + " but not in F_" +
                              std::to_string(n - 1) + " F_1", anchor);
  }
  return pass(name, "F_n = F_{n-1} F_1 for |n| <= " + std::to_string(range) + " over " + gK.to_string(), anchor);
}

// The same laws for the quotient filtration of a kernel functor.
inline std::vector<Check> filtration_laws_check(const IdealLocalization& Q, int range, int samples,
                                                std::uint32_t seed = 7) {
  const auto& E = Q.engine();
  const auto& M = Q.module();
  const int B = Q.bound();
  std::vector<Check> out;
  auto els = sample_elements(E, samples, std::max(1, B / 3), seed);
  const Polynomial g = Q.ideal().front();
  std::mt19937 rng(seed + 1);

  Check sub = pass("submultiplicativity", std::to_string(samples) + " sampled pairs", "quotient filtration product");
  for (int i = 0; i + 1 < samples && sub.status == Status::Pass; ++i) {
    Fraction a{els[static_cast<std::size_t>(i)], E.pow(g, static_cast<int>(rng() % 3))};
    Fraction b{els[static_cast<std::size_t>(i + 1)], E.pow(g, static_cast<int>(rng() % 3))};
    Fraction ab{E.mul(a.num, b.num), E.mul(a.den, b.den)};
    if (!Q.certify(a) || !Q.certify(b) || !Q.certify(ab)) continue;
    FiltDegree da = Q.degree(a), db = Q.degree(b), dab = Q.degree(ab);
    if (da.is_finite() && db.is_finite() && !dab.at_most(da.value + db.value))
      sub = fail(sub.name, to_string(a) + " * " + to_string(b) + " has degree " + dab.to_string(), sub.anchor);
  }
  out.push_back(sub);

  Check strict = pass("strictness", "F_n Q meet R = F_n R for |n| <= " + std::to_string(range) + " on " +
                                        std::to_string(samples) + " samples", "strict localization map");
  for (const auto& r : els) {
    FiltDegree dq = Q.degree({r, E.one()});
    FiltDegree dr = M.degree_auto(r, B);
    if (!(dq == dr)) {
      strict = fail(strict.name, r.to_string() + ": degree " + dr.to_string() + " in M, " + dq.to_string() + " in Q",
                    strict.anchor);
      break;
    }
  }
  out.push_back(strict);
  out.push_back(strong_law_monomial(Q, range));

  Check sep = pass("separation", "no element of degree below every bound among samples and inverse powers",
                   "separated quotient filtration");
  std::vector<Fraction> cands;
  for (const auto& r : els) cands.push_back({r, E.one()});
  for (int k = 1; k <= std::min(range, Q.power_bound()); ++k) cands.push_back({E.one(), E.pow(g, k)});
  for (const auto& q : cands) {
    FiltDegree d = Q.degree(q);
    if (d.is_below_bound()) {
      sep = fail(sep.name, to_string(q) + " has degree " + d.to_string(), sep.anchor);
      break;
    }
  }
  out.push_back(sep);
  return out;
}

// Finite tower R_0 < ... < R_n = R with the kernel functor of I: discreteness F_{-n-1} Q = 0,
// orthogonality (R / F_d R has no I-torsion for d < n) and strictness of R -> Q on samples.
inline std::vector<Check> tower_quotient_filtration(const FilteredRing<QuotientRing>& T, const std::vector<Polynomial>& I,
                                                    int power_bound, int bound, int samples, std::uint32_t seed = 11) {
  if (T.mode() != filtring::FiltrationMode::Tower) throw PreconditionError("tower filtration expected");
  const auto& E = T.engine();
  auto M = std::make_shared<filtring::RingModule<QuotientRing>>(T);
  IdealLocalization Q(M, I, power_bound, bound);
  const int n = T.tower_length();
  std::vector<Check> out;
  auto els = sample_elements(E, samples, std::max(1, bound / 3), seed);

  Check disc = pass("discreteness", "F_" + std::to_string(-n - 1) + " Q = 0 on samples and inverse powers",
                    "discrete quotient filtration");
  std::vector<Fraction> cands;
  for (const auto& r : els) cands.push_back({r, E.one()});
  for (std::size_t i = 0; i < els.size(); ++i) cands.push_back({els[i], E.pow(I[i % I.size()], 1 + static_cast<int>(i % 3))});
  for (const auto& q : cands) {
    if (!Q.certify(q)) continue;
    FiltDegree d = Q.degree(q);
    if (!d.is_finite() || d.value < -n) {
      disc = fail(disc.name, to_string(q) + " has degree " + d.to_string(), disc.anchor);
      break;
    }
  }
  out.push_back(disc);

  Check orth = pass("orthogonality", "no I-torsion in R/F_d R for d < " + std::to_string(n) + ", power " +
                                         std::to_string(power_bound) + ", bound " + std::to_string(bound),
                    "torsion free quotients");
  std::vector<SparseVec<Exponents>> dom;
  for (const auto& e : E.standard_monomials(bound)) dom.push_back(E.vec(Polynomial::monomial(E.context(), e)));
  auto gens = Q.power_generators(power_bound);
  for (int d = 0; d < n && orth.status == Status::Pass; ++d) {
    Subspace<Exponents> tors;
    bool first = true;
    for (const auto& g : gens) {
      std::vector<SparseVec<Exponents>> imgs;
      for (const auto& v : dom) imgs.push_back(E.vec(E.mul(g, E.from_vec(v))));
      auto pre = preimage(dom, imgs, T.piece(d, bound + E.degree(g)));
      tors = first ? pre : tors.intersect(pre);
      first = false;
    }
    for (const auto& v : tors.basis())
      if (!T.piece(d, bound).contains(v)) {
        orth = fail(orth.name, E.str(E.from_vec(v)) + " is I-torsion modulo F_" + std::to_string(d), orth.anchor);
        break;
      }
  }
  out.push_back(orth);

  Check strict = pass("strictness", std::to_string(samples) + " sampled elements", "strict localization map");
  if (orth.status == Status::Pass) {
    for (const auto& r : els) {
      FiltDegree dq = Q.degree({r, E.one()});
      int dr = T.finite_degree(r, bound);
      if (!(dq == FiltDegree::finite(dr))) {
        strict = fail(strict.name, r.to_string() + ": degree " + std::to_string(dr) + " in R, " + dq.to_string() + " in Q",
                      strict.anchor);
        break;
      }
    }
  } else {
    strict = inconclusive(strict.name, "orthogonality not certified", strict.anchor);
  }
  out.push_back(strict);
  return out;
}

// Iterated localization at the powers of s_1, ..., s_n against the single localization at
// the powers of s_1 ... s_n, on sampled fractions and in both orders of the first two letters.
inline Check word_compose_commutative(const QuotientRing& A, const std::vector<Polynomial>& letters, int samples,
                                      int maxdeg, int max_power, std::uint32_t seed = 13) {
  const std::string name = "word composition";
  if (letters.empty()) throw PreconditionError("empty word");
  std::mt19937 rng(seed);
  auto els = sample_elements(A, samples, maxdeg, seed);
  Polynomial prod = A.one();
  for (const auto& s : letters) prod = A.mul(prod, s);
  for (int i = 0; i < samples; ++i) {
    const Polynomial& f = els[static_cast<std::size_t>(i)];
    std::vector<int> e(letters.size());
    int top = 0;
    for (auto& x : e) {
      x = static_cast<int>(rng() % static_cast<std::uint32_t>(max_power + 1));
      top = std::max(top, x);
    }
    // iterated, in word order: ((f / s_1^e1) / s_2^e2) ...
    Fraction it{f, A.one()};
    for (std::size_t k = 0; k < letters.size(); ++k) it.den = A.mul(it.den, A.pow(letters[k], e[k]));
    // the reverse order of the letters
    Fraction rev{f, A.one()};
    for (std::size_t k = letters.size(); k-- > 0;) rev.den = A.mul(A.pow(letters[k], e[k]), rev.den);
    // single localization at the product: f * prod_k s_k^(top - e_k) / (s_1 ... s_n)^top
    Fraction single{f, A.pow(prod, top)};
    for (std::size_t k = 0; k < letters.size(); ++k) single.num = A.mul(single.num, A.pow(letters[k], top - e[k]));
    auto eq = [&](const Fraction& a, const Fraction& b) { return A.equal(A.mul(a.num, b.den), A.mul(b.num, a.den)); };
    if (!eq(it, single) || !eq(it, rev))
      return fail(name, "sample " + std::to_string(i) + ": " + to_string(it) + " vs " + to_string(single),
                  "iterated localization");
  }
  return pass(name, std::to_string(samples) + " sampled fractions, powers <= " + std::to_string(max_power),
              "iterated localization");
}

}  // namespace gw::localize
