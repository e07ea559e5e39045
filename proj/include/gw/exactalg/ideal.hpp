#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gw/exactalg/groebner.hpp"

namespace gw {

// Ideal of a polynomial ring given by generators; Groebner bases are computed lazily per order
// and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(ContextPtr ctx, std::vector<Polynomial> gens) : st_(std::make_shared<State>()) {
    st_->ctx = std::move(ctx);
    for (auto& g : gens) {
      if (g.context() && !g.context()->same_as(*st_->ctx)) throw ContextError("generator from another context");
      if (!g.is_zero()) st_->gens.push_back(std::move(g));
    }
  }
  Ideal(ContextPtr ctx, const std::vector<std::string>& gens) : Ideal(ctx, parse_polynomials(ctx, gens)) {}
  Ideal(ContextPtr ctx, std::initializer_list<std::string> gens)
      : Ideal(ctx, std::vector<std::string>(gens)) {}

  static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), std::vector<Polynomial>{}); }
  static Ideal unit(ContextPtr ctx) {
    auto c = ctx;
    return Ideal(std::move(ctx), std::vector<Polynomial>{Polynomial(c, 1)});
  }

  const ContextPtr& context() const { return st_->ctx; }
  const std::vector<Polynomial>& generators() const { return st_->gens; }

  const std::vector<Polynomial>& groebner(const MonomialOrder& o) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->cache.find(o);
    if (it == st_->cache.end()) it = st_->cache.emplace(o, groebner_basis(st_->gens, o)).first;
    return it->second;
  }
  const std::vector<Polynomial>& groebner() const { return groebner(st_->ctx->order()); }

  Polynomial normal_form(const Polynomial& f, const MonomialOrder& o) const {
    check(f);
    return reduce_by(f, groebner(o), o);
  }
  Polynomial normal_form(const Polynomial& f) const { return normal_form(f, st_->ctx->order()); }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& J) const {
    for (const auto& g : J.generators())
      if (!contains(g)) return false;
    return true;
  }
  bool is_zero() const { return st_->gens.empty(); }
  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
  }
  bool equals(const Ideal& J) const { return contains(J) && J.contains(*this); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < st_->gens.size(); ++i) {
      if (i) s += ", ";
      s += st_->gens[i].to_string();
    }
    return s + ")";
  }

 private:
  struct State {
    ContextPtr ctx;
    std::vector<Polynomial> gens;
    std::mutex mu;
    std::map<MonomialOrder, std::vector<Polynomial>> cache;
  };
  std::shared_ptr<State> st_;

  void check(const Polynomial& f) const {
    if (f.context() && !f.context()->same_as(*st_->ctx)) throw ContextError("polynomial from another context");
  }
};

inline Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& o) {
  return I.normal_form(f, o);
}

inline bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

// Context with one fresh variable prepended; the fresh name avoids collisions.
inline ContextPtr with_fresh_variable(const ContextPtr& ctx, const std::string& stem = "t_") {
  std::string name = stem;
  while (ctx->index(name) >= 0) name += "_";
  std::vector<std::string> names{name};
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  return make_context(std::move(names), MonomialOrder::elimination(1));
}

// f lies in the radical of I iff 1 is in I + (1 - t f).
inline bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  auto ext = with_fresh_variable(I.context());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
  Polynomial t = Polynomial::variable(ext, 0);
  gens.push_back(Polynomial(ext, 1) - t * embed(f, ext));
  return Ideal(ext, std::move(gens)).is_unit();
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  auto g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.context(), std::move(g));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back(a * b);
  return Ideal(I.context(), std::move(g));
}

inline Ideal ideal_power(const Ideal& I, int n) {
  Ideal r = Ideal::unit(I.context());
  Ideal base(I.context(), I.groebner());
  // reduce after every factor so the generator list stays small
  for (int k = 0; k < n; ++k) r = Ideal(I.context(), ideal_product(r, base).groebner());
  return r;
}

// Generators of I ∩ k[original variables], computed by elimination of the prepended variable.
inline Ideal eliminate_first(const Ideal& ext_ideal, const ContextPtr& base) {
  std::vector<Polynomial> out;
  for (const auto& g : ext_ideal.groebner(MonomialOrder::elimination(1))) {
    bool free = true;
    for (const auto& [e, c] : g.terms())
      if (e[0] != 0) free = false;
    if (free) out.push_back(restrict_to(g, base));
  }
  return Ideal(base, std::move(out));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.context());
  auto ext = with_fresh_variable(I.context());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial(ext, 1) - t;
  std::vector<Polynomial> g;
  for (const auto& a : I.generators()) g.push_back(t * embed(a, ext));
  for (const auto& b : J.generators()) g.push_back(one_minus_t * embed(b, ext));
  return eliminate_first(Ideal(ext, std::move(g)), I.context());
}

// Exact quotient f / d in the polynomial ring, if d divides f.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d) {
  auto [q, r] = divide_single(f, d, f.context()->order());
  if (!r.is_zero()) return std::nullopt;
  return q;
}

inline Ideal ideal_quotient_element(const Ideal& I, const Polynomial& g) {
  if (g.is_zero()) return Ideal::unit(I.context());
  Ideal K = ideal_intersection(I, Ideal(I.context(), std::vector<Polynomial>{g}));
  std::vector<Polynomial> out;
  for (const auto& h : K.generators()) {
    auto q = exact_divide(h, g);
    if (!q) throw Error("internal: intersection generator not divisible");
    out.push_back(*q);
  }
  return Ideal(I.context(), std::move(out));
}

// I : J
inline Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  Ideal r = Ideal::unit(I.context());
  bool first = true;
  for (const auto& g : J.generators()) {
    Ideal q = ideal_quotient_element(I, g);
    r = first ? q : ideal_intersection(r, q);
    first = false;
  }
  return r;
}

// I : J^infinity
inline Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal cur(I.context(), I.groebner());
  for (;;) {
    Ideal next = ideal_colon(cur, J);
    if (cur.contains(next)) return cur;
    cur = Ideal(I.context(), next.groebner());
  }
}

enum class IdealOp { Sum, Product, Intersection, Colon };

inline Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealOp op) {
  switch (op) {
    case IdealOp::Sum: return ideal_sum(I, J);
    case IdealOp::Product: return ideal_product(I, J);
    case IdealOp::Intersection: return ideal_intersection(I, J);
    case IdealOp::Colon: return ideal_colon(I, J);
  }
  return I;
}

// sqrt(I) = sqrt(J)
inline bool radical_equal(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators())
    if (!radical_membership(g, J)) return false;
  for (const auto& g : J.generators())
    if (!radical_membership(g, I)) return false;
  return true;
}

// sqrt(J) ⊆ sqrt(I)
inline bool radical_contained(const Ideal& J, const Ideal& I) {
  for (const auto& g : J.generators())
    if (!radical_membership(g, I)) return false;
  return true;
}

}  // namespace gw
