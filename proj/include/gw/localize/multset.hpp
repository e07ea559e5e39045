#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gw/exactalg/quotient_ring.hpp"
#include "gw/filtring/filtered_module.hpp"
#include "gw/glider/filtration.hpp"
#include "gw/report.hpp"

namespace gw::localize {

using filtring::FiltDegree;
using filtring::FilteredModule;
using filtring::FilteredRing;
using Module = FilteredModule<QuotientRing>;
using ModulePtr = std::shared_ptr<const Module>;

// s^-power * num in the localization at the powers of s.
struct LocalFraction {
  Polynomial num;
  int power = 0;
};

struct LocDegree {
  FiltDegree value;
  std::vector<std::pair<int, FiltDegree>> witnesses;  // (n, deg(s^n z) - deg(s^n))
  bool witness_independent = true;
};

inline std::string to_string(const LocalFraction& z) {
  if (z.power == 0) return z.num.to_string();
  return "(" + z.num.to_string() + ")/s^" + std::to_string(z.power);
}

// Localization of a filtered module at the powers of a ring element s (commutative engine).
// The degree of z is the least deg(s^n z) - deg(s^n) over witnesses n <= power + power_bound;
// values that keep strictly decreasing over the last three witnesses give a below-bound marker.
class MultSetLocalization {
 public:
  MultSetLocalization(ModulePtr M, Polynomial s, int power_bound, int bound)
      : M_(std::move(M)), s_(M_->engine().nf(s)), N_(power_bound), bound_(bound) {
    if (M_->engine().is_zero(s_)) throw PreconditionError("cannot localize at zero");
  }

  const Module& module() const { return *M_; }
  const QuotientRing& engine() const { return M_->engine(); }
  const Polynomial& element() const { return s_; }
  int power_bound() const { return N_; }
  int bound() const { return bound_; }

  Polynomial s_pow(int n) const { return engine().pow(s_, n); }

  int ring_degree_of_power(int n) const { return M_->ring().finite_degree(s_pow(n), bound_); }

  LocDegree loc_degree(const LocalFraction& z) const {
    const auto& E = engine();
    LocDegree out;
    if (E.is_zero(z.num)) {
      out.value = FiltDegree::minus_infinity();
      return out;
    }
    bool below = false;
    int best = 0;
    std::vector<int> vals;
    for (int n = z.power; n <= z.power + N_; ++n) {
      Polynomial x = E.mul(s_pow(n - z.power), z.num);
      if (E.is_zero(x)) {
        out.value = FiltDegree::minus_infinity();  // s-torsion: zero after localizing
        return out;
      }
      FiltDegree d = M_->degree_auto(x, bound_);
      int p = ring_degree_of_power(n);
      FiltDegree v = d.is_finite() ? FiltDegree::finite(d.value - p) : FiltDegree::below(d.value - p);
      out.witnesses.emplace_back(n, v);
      if (!v.is_finite()) below = true;
      if (vals.empty() || v.value < best) best = v.value;
      vals.push_back(v.value);
    }
    for (std::size_t i = 1; i < vals.size(); ++i) out.witness_independent = out.witness_independent && vals[i] == vals[0];
    const std::size_t k = vals.size();
    if (k >= 3 && vals[k - 1] < vals[k - 2] && vals[k - 2] < vals[k - 3]) below = true;
    out.value = below ? FiltDegree::below(best) : FiltDegree::finite(best);
    return out;
  }

  FiltDegree loc_deg(const LocalFraction& z) const { return loc_degree(z).value; }

  // z lies in F_d of the localization (a below-bound marker lies in every F_d).
  bool in_level(const LocalFraction& z, int d) const {
    FiltDegree v = loc_deg(z);
    return v.is_minus_infinity() || v.is_below_bound() || v.value <= d;
  }

  bool equal(const LocalFraction& a, const LocalFraction& b) const {
    const auto& E = engine();
    return E.equal(E.mul(a.num, s_pow(b.power)), E.mul(b.num, s_pow(a.power)));
  }

  LocalFraction mul(const LocalFraction& a, const LocalFraction& b) const {
    return {engine().mul(a.num, b.num), a.power + b.power};
  }

  LocalFraction add(const LocalFraction& a, const LocalFraction& b) const {
    const auto& E = engine();
    int k = std::max(a.power, b.power);
    return {E.add(E.mul(a.num, s_pow(k - a.power)), E.mul(b.num, s_pow(k - b.power))), k};
  }

  // Numerators over s^K spanning the bounded part of F_n S^-1 M:
  // s^(K-k) m for k <= K and m in F_{n + deg s^k} M of degree <= bound.
  Subspace<Exponents> window(int n, int K) const {
    const auto& E = engine();
    Subspace<Exponents> out;
    for (int k = 0; k <= K; ++k) {
      int level = n + ring_degree_of_power(k);
      Polynomial lift = s_pow(K - k);
      for (const auto& v : M_->piece(level, bound_).basis()) out.insert(E.vec(E.mul(lift, E.from_vec(v))));
    }
    return out;
  }

  // F_d S^-1 M meet M within the degree bound: { m : s^n m in F_{d + deg s^n} M for some n <= N }.
  Subspace<Exponents> level_in_module(int d) const {
    const auto& E = engine();
    std::vector<SparseVec<Exponents>> dom;
    for (const auto& e : E.standard_monomials(bound_)) dom.push_back(E.vec(Polynomial::monomial(E.context(), e)));
    Subspace<Exponents> out;
    for (int n = 0; n <= N_; ++n) {
      Polynomial sn = s_pow(n);
      std::vector<SparseVec<Exponents>> imgs;
      for (const auto& v : dom) imgs.push_back(E.vec(E.mul(sn, E.from_vec(v))));
      int b = bound_ + std::max(0, E.degree(sn)) + glider::kSlack;
      out = out.sum(preimage(dom, imgs, M_->piece(d + ring_degree_of_power(n), b)));
    }
    return out;
  }

 private:
  ModulePtr M_;
  Polynomial s_;
  int N_, bound_;
};

// Localized glider Q_S(M)_d = F_{-d} S^-1 Omega: body membership of the candidates and,
// when requested, the intersection law Q_S(M)_d meet Omega = M_d.
struct LocalizedGliderReport {
  std::vector<Polynomial> body;  // candidates in every level 0..depth
  std::vector<std::pair<Polynomial, FiltDegree>> degrees;
  std::vector<Check> checks;
};

inline LocalizedGliderReport glider_localize(const glider::Glider<QuotientRing>& G, const Polynomial& s, int bound,
                                             int depth, int power_bound, const std::vector<Polynomial>& candidates,
                                             bool check_intersection = false) {
  auto F = glider::glider_filtration(G, depth + power_bound + 2);
  MultSetLocalization Q(F, s, power_bound, bound);
  LocalizedGliderReport rep;
  for (const auto& c : candidates) {
    FiltDegree v = Q.loc_deg({c, 0});
    rep.degrees.emplace_back(c, v);
    bool all = true;
    for (int d = 0; d <= depth; ++d) all = all && Q.in_level({c, 0}, -d);
    if (all) rep.body.push_back(c);
  }
  if (check_intersection) {
    Check c = pass("localized level meets carrier in M_d", "d <= " + std::to_string(depth) + ", bound " +
                                                              std::to_string(bound), "localized fragment");
    for (int d = 0; d <= depth; ++d) {
      auto lvl = Q.level_in_module(-d);
      const auto& md = G.level(d, bound).space;
      if (!(lvl == md)) {
        c = fail(c.name, "level " + std::to_string(d) + ": dimensions " + std::to_string(lvl.dim()) + " vs " +
                             std::to_string(md.dim()), c.anchor);
        break;
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace gw::localize
