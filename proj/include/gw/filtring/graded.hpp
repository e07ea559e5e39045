#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gw/exactalg/quotient_ring.hpp"
#include "gw/filtring/filtered_ring.hpp"
#include "gw/report.hpp"

namespace gw::filtring {

// Presentation of the associated graded ring G(R) = sum F_n/F_{n-1}: one symbol per generator
// (graded by its level) and the homogeneous relations found among symbol monomials of weight
// <= bound and grading degree <= D.
template <class Engine>
class GradedRing {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  struct Monomial {
    Exponents exps;
    Element lift;
    int weight;
  };

  GradedRing(FilteredRing<Engine> R, int D, int bound) : R_(std::move(R)), D_(D), bound_(bound) {
    std::vector<std::string> names;
    for (const auto& g : R_.generators()) {
      names.push_back(g.name);
      degrees_.push_back(g.level);
    }
    ctx_ = make_context(names);
    enumerate();
    std::vector<Polynomial> rels;
    for (int n = 0; n <= D_; ++n) {
      const auto& ms = monos(n);
      std::vector<SparseVec<Key>> vs;
      vs.reserve(ms.size());
      for (const auto& m : ms) vs.push_back(R_.engine().vec(m.lift));
      const Subspace<Key>* mod = n == 0 ? nullptr : &R_.piece(n - 1, bound_);
      for (const auto& c : kernel(vs, mod)) {
        Polynomial p(ctx_);
        for (std::size_t i = 0; i < ms.size(); ++i) p.add_term(ms[i].exps, c[i]);
        rels.push_back(std::move(p));
      }
    }
    Ideal I(ctx_, std::move(rels));
    rel_ = Ideal(ctx_, I.groebner());
    ring_ = QuotientRing(ctx_, rel_.generators());
  }

  const FilteredRing<Engine>& filtered_ring() const { return R_; }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const Ideal& relations() const { return rel_; }
  const QuotientRing& ring() const { return ring_; }
  int degree_bound() const { return D_; }
  int bound() const { return bound_; }

  int grading_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
    return d;
  }

  // Symbol monomials of grading degree n and weight <= bound.
  const std::vector<Monomial>& monos(int n) const {
    static const std::vector<Monomial> none;
    auto it = by_degree_.find(n);
    return it == by_degree_.end() ? none : it->second;
  }

  // Ordered product of the lifts (F_0 generators first, then the rest in index order).
  Element lift_monomial(const Exponents& e) const {
    const auto& E = R_.engine();
    Element r = E.one();
    const auto& G = R_.generators();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) r = E.mul(r, G[i].value);
    return r;
  }

  Element lift(const Polynomial& s) const {
    const auto& E = R_.engine();
    Element r = E.zero();
    for (const auto& [e, c] : s.terms()) r = E.add(r, E.mul(E.constant(c), lift_monomial(e)));
    return r;
  }

  // Class of r (which must lie in F_n) in F_n / F_{n-1}.
  Polynomial symbol_in_degree(const Element& r, int n) const {
    const auto& E = R_.engine();
    if (E.is_zero(r)) return Polynomial(ctx_);
    if (!R_.in_piece(r, n, bound_)) throw PreconditionError("element " + E.str(r) + " not in F_" + std::to_string(n));
    if (R_.in_piece(r, n - 1, bound_)) return Polynomial(ctx_);
    int b = std::max(bound_, E.degree(r));
    const auto& ms = monos(n);
    std::vector<SparseVec<Key>> cols;
    for (const auto& m : ms) cols.push_back(E.vec(m.lift));
    auto sol = solve(cols, E.vec(r), &R_.piece(n - 1, b));
    if (!sol) throw InconclusiveError("no symbol representative for " + E.str(r), bound_);
    Polynomial p(ctx_);
    for (std::size_t i = 0; i < ms.size(); ++i) p.add_term(ms[i].exps, (*sol)[i]);
    return ring_.nf(p);
  }

  // Principal symbol: the class in the degree of r; zero for zero.
  Polynomial sigma(const Element& r) const {
    if (R_.engine().is_zero(r)) return Polynomial(ctx_);
    return symbol_in_degree(r, R_.finite_degree(r, bound_));
  }

  // Grading degree of a homogeneous symbol polynomial; -1 for zero.
  int symbol_degree(const Polynomial& s) const {
    if (s.is_zero()) return -1;
    return grading_degree(s.terms().begin()->first);
  }

  // Symbols of positive degree (generators that are not in F_0).
  std::vector<std::string> positive_symbols() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      if (degrees_[i] > 0) out.push_back(ctx_->name(i));
    return out;
  }

 private:
  FilteredRing<Engine> R_;
  int D_, bound_;
  ContextPtr ctx_;
  std::vector<int> degrees_;
  Ideal rel_;
  QuotientRing ring_;
  std::map<int, std::vector<Monomial>> by_degree_;

  void enumerate() {
    const auto& G = R_.generators();
    Exponents e(G.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int w, int deg) -> void {
      if (deg > D_) return;
      if (i == G.size()) {
        by_degree_[deg].push_back({e, lift_monomial(e), w});
        return;
      }
      for (int k = 0; w + k * G[i].weight <= bound_ && deg + k * G[i].level <= D_; ++k) {
        e[i] = k;
        self(self, i + 1, w + k * G[i].weight, deg + k * G[i].level);
        if (G[i].level == 0 && G[i].weight == 0) break;
      }
      e[i] = 0;
    };
    rec(rec, 0, 0, 0);
  }
};

template <class Engine>
GradedRing<Engine> graded_presentation(const FilteredRing<Engine>& R, int D, int bound) {
  return GradedRing<Engine>(R, D, bound);
}

template <class Engine>
Polynomial sigma_map(const GradedRing<Engine>& G, const typename Engine::Element& u) {
  return G.sigma(u);
}

// Element of the Rees ring: r placed in degree n (r must lie in F_n).
template <class Engine>
struct ReesElement {
  typename Engine::Element value;
  int degree;
};

template <class Engine>
ReesElement<Engine> rees_mul(const FilteredRing<Engine>& R, const ReesElement<Engine>& a, const ReesElement<Engine>& b) {
  return {R.engine().mul(a.value, b.value), a.degree + b.degree};
}

// Checks on sampled homogeneous Rees elements of degree <= D that the t = 1 fiber multiplies
// inside the filtration, that the t = 0 fiber multiplies like the graded presentation, and that
// G(R) is commutative.
template <class Engine>
Check rees_fibers_check(const FilteredRing<Engine>& R, int D, int bound, const std::string& anchor = "Rees fibers") {
  const std::string name = "rees-fibers";
  try {
    GradedRing<Engine> G(R, D, bound);
    const auto& E = R.engine();
    int half = std::max(1, bound / 2);
    std::vector<std::vector<ReesElement<Engine>>> samples(static_cast<std::size_t>(D) + 1);
    for (const auto& p : R.products(half)) {
      if (p.level > D) continue;
      auto& s = samples[static_cast<std::size_t>(p.level)];
      if (s.size() < 5) s.push_back({p.value, p.level});
    }
    for (auto& s : samples)
      if (s.size() >= 2) s.push_back({E.add(s[0].value, E.mul(E.constant(2), s[1].value)), s[0].degree});
    for (int n = 0; n <= D; ++n)
      for (int m = 0; n + m <= D; ++m)
        for (const auto& a : samples[static_cast<std::size_t>(n)])
          for (const auto& b : samples[static_cast<std::size_t>(m)]) {
            auto ab = rees_mul(R, a, b);
            if (!R.in_piece(ab.value, ab.degree, bound))
              return fail(name, "t=1 product " + E.str(ab.value) + " leaves F_" + std::to_string(ab.degree), anchor);
            Polynomial sa = G.symbol_in_degree(a.value, n), sb = G.symbol_in_degree(b.value, m);
            auto lifted = G.lift(G.ring().nf(sa * sb));
            auto diff = E.add(lifted, E.mul(E.constant(-1), ab.value));
            if (!R.in_piece(diff, ab.degree - 1, bound))
              return fail(name, "t=0 product of " + E.str(a.value) + " and " + E.str(b.value), anchor);
            auto ba = E.mul(b.value, a.value);
            if (!R.in_piece(E.add(ab.value, E.mul(E.constant(-1), ba)), ab.degree - 1, bound))
              return fail(name, "graded ring not commutative at " + E.str(a.value) + ", " + E.str(b.value), anchor);
          }
    return pass(name, "degrees <= " + std::to_string(D) + ", bound " + std::to_string(bound), anchor);
  } catch (const InconclusiveError& e) {
    return inconclusive(name, e.what(), anchor);
  }
}

}  // namespace gw::filtring
