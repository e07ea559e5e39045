#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gw/localize/multset.hpp"

namespace gw::localize {

// num / den inside the total ring of fractions of a commutative domain.
struct Fraction {
  Polynomial num;
  Polynomial den;
};

inline std::string to_string(const Fraction& q) {
  return "(" + q.num.to_string() + ")/(" + q.den.to_string() + ")";
}

// Localization at the symmetric kernel functor of an ideal I, realized as the saturation
// { q : I^n q <= M for some n <= power_bound }, with the quotient filtration degree
// gamma(q) = min over n of max over m of deg(F_m I^n q) - m.
class IdealLocalization {
 public:
  IdealLocalization(ModulePtr M, std::vector<Polynomial> ideal, int power_bound, int bound)
      : M_(std::move(M)), I_(std::move(ideal)), N_(power_bound), bound_(bound), cache_(std::make_shared<Cache>()) {
    for (auto& g : I_) g = M_->engine().nf(g);
  }

  const Module& module() const { return *M_; }
  const QuotientRing& engine() const { return M_->engine(); }
  const std::vector<Polynomial>& ideal() const { return I_; }
  int power_bound() const { return N_; }
  int bound() const { return bound_; }

  std::vector<Polynomial> power_generators(int n) const {
    const auto& E = engine();
    std::vector<Polynomial> cur{E.one()};
    for (int k = 0; k < n; ++k) {
      std::vector<Polynomial> next;
      Subspace<Exponents> seen;
      for (const auto& a : cur)
        for (const auto& g : I_) {
          Polynomial p = E.mul(a, g);
          if (seen.insert(E.vec(p))) next.push_back(p);
        }
      cur = std::move(next);
    }
    return cur;
  }

  // I^n truncated to degree <= bound.
  const Subspace<Exponents>& power_window(int n) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->windows.find(n);
    if (it != cache_->windows.end()) return it->second;
    const auto& E = engine();
    Subspace<Exponents> w;
    for (const auto& g : power_generators(n)) {
      int dg = E.degree(g);
      for (const auto& e : E.standard_monomials(std::max(0, bound_ - dg))) {
        Polynomial p = E.mul(Polynomial::monomial(E.context(), e), g);
        if (E.degree(p) <= bound_) w.insert(E.vec(p));
      }
    }
    return cache_->windows.emplace(n, std::move(w)).first->second;
  }

  std::optional<Polynomial> times(const Polynomial& b, const Fraction& q) const {
    const auto& E = engine();
    return E.divide(E.mul(b, q.num), q.den, bound_ + E.degree(q.num) + E.degree(b));
  }

  // Least n <= power_bound with I^n q inside M.
  std::optional<int> certify(const Fraction& q) const {
    for (int n = 0; n <= N_; ++n) {
      bool ok = true;
      for (const auto& g : power_generators(n)) ok = ok && times(g, q).has_value();
      if (ok) return n;
    }
    return std::nullopt;
  }

  bool equal(const Fraction& a, const Fraction& b) const {
    const auto& E = engine();
    return E.equal(E.mul(a.num, b.den), E.mul(b.num, a.den));
  }

  // gamma_n for each certified power n (index 0 is the certified power).
  std::vector<int> gammas(const Fraction& q) const {
    auto n0 = certify(q);
    if (!n0) throw PreconditionError(to_string(q) + " is not in the localization at power bound " + std::to_string(N_));
    const auto& R = M_->ring();
    std::vector<int> out;
    for (int n = *n0; n <= N_; ++n) {
      std::optional<int> g;
      const auto& In = power_window(n);
      for (int m = 0; m <= R.top(bound_); ++m) {
        auto basis = R.piece(m, bound_).intersect(In).basis();
        for (const auto& v : basis) {
          auto bq = times(engine().from_vec(v), q);
          if (!bq) throw InconclusiveError("product with " + to_string(q) + " not found", bound_);
          FiltDegree d = M_->degree_auto(*bq, bound_);
          if (d.is_minus_infinity()) continue;
          int val = d.value - m;
          if (!g || val > *g) g = val;
        }
      }
      if (!g) throw InconclusiveError("no element of F_m I^" + std::to_string(n) + " within the bound", bound_);
      out.push_back(*g);
    }
    return out;
  }

  FiltDegree degree(const Fraction& q) const {
    if (engine().is_zero(q.num)) return FiltDegree::minus_infinity();
    auto gs = gammas(q);
    int best = *std::min_element(gs.begin(), gs.end());
    bool decreasing = gs.size() >= 3;
    for (std::size_t i = 1; i < gs.size(); ++i) decreasing = decreasing && gs[i] < gs[i - 1];
    return decreasing ? FiltDegree::below(best) : FiltDegree::finite(best);
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, Subspace<Exponents>> windows;
  };
  ModulePtr M_;
  std::vector<Polynomial> I_;
  int N_, bound_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace gw::localize
