#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "gw/exactalg/polynomial.hpp"

namespace gw {
namespace detail {

struct Term {
  Exponents e;
  Rational c;
};

// Terms kept in ascending order so the leading term sits at back().
using TermVec = std::vector<Term>;

inline TermVec to_termvec(const Polynomial& p, const MonomialOrder& o) {
  TermVec v;
  v.reserve(p.size());
  for (const auto& [e, c] : p.terms()) v.push_back({e, c});
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return o.compare(a.e, b.e) < 0; });
  return v;
}

inline Polynomial from_termvec(const ContextPtr& ctx, const TermVec& v) {
  TermMap t;
  for (const auto& x : v) t.emplace(x.e, x.c);
  return Polynomial(ctx, std::move(t));
}

// p -= c * x^shift * g, both ascending.
inline void sub_mul(TermVec& p, const Rational& c, const Exponents& shift, const TermVec& g,
                    const MonomialOrder& o) {
  TermVec out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(std::move(p[i++]));
      continue;
    }
    Exponents ge = mono_mul(g[j].e, shift);
    int cmp = i == p.size() ? 1 : o.compare(p[i].e, ge);
    if (cmp < 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp > 0) {
      out.push_back({std::move(ge), -c * g[j].c});
      ++j;
    } else {
      Rational v = p[i].c - c * g[j].c;
      if (v != 0) out.push_back({std::move(ge), std::move(v)});
      ++i;
      ++j;
    }
  }
  p = std::move(out);
}

// Full reduction of p by the monic family G.
inline TermVec reduce_full(TermVec p, const std::vector<TermVec>& G, const MonomialOrder& o) {
  TermVec rem;
  while (!p.empty()) {
    const Term& lead = p.back();
    const TermVec* hit = nullptr;
    for (const auto& g : G)
      if (divides(g.back().e, lead.e)) {
        hit = &g;
        break;
      }
    if (hit) {
      Rational c = lead.c / hit->back().c;
      Exponents shift = mono_div(lead.e, hit->back().e);
      sub_mul(p, c, shift, *hit, o);
    } else {
      rem.push_back(std::move(p.back()));
      p.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

inline void make_monic(TermVec& p) {
  if (p.empty()) return;
  Rational inv = Rational(1) / p.back().c;
  for (auto& t : p) t.c *= inv;
}

}  // namespace detail

// Reduced Groebner basis, monic, sorted by leading monomial descending.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& o) {
  using namespace detail;
  ContextPtr ctx;
  std::vector<TermVec> G;
  for (const auto& g : gens) {
    if (!ctx) ctx = g.context();
    if (g.is_zero()) continue;
    TermVec t = to_termvec(g, o);
    make_monic(t);
    G.push_back(std::move(t));
  }
  if (!ctx || G.empty()) return {};

  auto lcm_of = [&](std::size_t i, std::size_t j) { return mono_lcm(G[i].back().e, G[j].back().e); };
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  bool unit = false;
  for (const auto& g : G)
    if (total_degree(g.back().e) == 0) unit = true;

  while (!pending.empty() && !unit) {
    auto best = pending.begin();
    Exponents bl = lcm_of(best->first, best->second);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = lcm_of(it->first, it->second);
      if (o.compare(l, bl) < 0) {
        best = it;
        bl = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Exponents& li = G[i].back().e;
    const Exponents& lj = G[j].back().e;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(G[k].back().e, bl) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    TermVec s = G[i];
    for (auto& t : s) t.e = mono_mul(t.e, mono_div(bl, li));
    sub_mul(s, Rational(1), mono_div(bl, lj), G[j], o);
    TermVec h = reduce_full(std::move(s), G, o);
    if (h.empty()) continue;
    make_monic(h);
    if (total_degree(h.back().e) == 0) unit = true;
    G.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.emplace(k, G.size() - 1);
  }

  if (unit) return {Polynomial(ctx, 1)};

  // minimalize
  std::vector<TermVec> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t k = 0; k < G.size() && !drop; ++k) {
      if (k == i) continue;
      if (divides(G[k].back().e, G[i].back().e)) {
        // among equal leading monomials keep the first occurrence
        if (G[k].back().e != G[i].back().e || k < i) drop = true;
      }
    }
    if (!drop) M.push_back(G[i]);
  }
  // interreduce
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<TermVec> others;
    for (std::size_t k = 0; k < M.size(); ++k)
      if (k != i) others.push_back(M[k]);
    Term lead = M[i].back();
    TermVec tail(M[i].begin(), std::prev(M[i].end()));
    TermVec r = reduce_full(std::move(tail), others, o);
    r.push_back(std::move(lead));
    make_monic(r);
    M[i] = std::move(r);
  }
  std::sort(M.begin(), M.end(),
            [&](const TermVec& a, const TermVec& b) { return o.compare(a.back().e, b.back().e) > 0; });
  std::vector<Polynomial> out;
  out.reserve(M.size());
  for (const auto& t : M) out.push_back(from_termvec(ctx, t));
  return out;
}

// Remainder of f on division by a Groebner basis (unique).
inline Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& o) {
  using namespace detail;
  if (f.is_zero() || gb.empty()) return f;
  std::vector<TermVec> G;
  G.reserve(gb.size());
  for (const auto& g : gb) G.push_back(to_termvec(g, o));
  return from_termvec(f.context(), reduce_full(to_termvec(f, o), G, o));
}

// Quotient and remainder of f by a single divisor d.
inline std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f, const Polynomial& d,
                                                       const MonomialOrder& o) {
  using namespace detail;
  if (d.is_zero()) throw PreconditionError("division by zero polynomial");
  TermVec p = to_termvec(f, o), D = to_termvec(d, o), rem;
  Polynomial q(f.context());
  while (!p.empty()) {
    const Term& lead = p.back();
    if (divides(D.back().e, lead.e)) {
      Rational c = lead.c / D.back().c;
      Exponents shift = mono_div(lead.e, D.back().e);
      q.add_term(shift, c);
      sub_mul(p, c, shift, D, o);
    } else {
      rem.push_back(std::move(p.back()));
      p.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return {q, from_termvec(f.context(), rem)};
}

}  // namespace gw
