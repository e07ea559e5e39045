#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/exactalg/linalg.hpp"

namespace gw {

// Commutative ring k[x]/J with elements kept in normal form; the ring engine used by the
// filtered-ring layer.
class QuotientRing {
 public:
  using Element = Polynomial;
  using Key = Exponents;
  static constexpr bool commutative = true;

  QuotientRing() = default;
  QuotientRing(ContextPtr ctx, std::vector<Polynomial> relations)
      : ctx_(ctx), rel_(ctx, std::move(relations)), cache_(std::make_shared<Cache>()) {}
  QuotientRing(ContextPtr ctx, const std::vector<std::string>& relations)
      : QuotientRing(ctx, parse_polynomials(ctx, relations)) {}
  QuotientRing(ContextPtr ctx, std::initializer_list<std::string> relations)
      : QuotientRing(ctx, std::vector<std::string>(relations)) {}
  explicit QuotientRing(ContextPtr ctx) : QuotientRing(ctx, std::vector<Polynomial>{}) {}

  const ContextPtr& context() const { return ctx_; }
  const Ideal& relations() const { return rel_; }
  const MonomialOrder& order() const { return ctx_->order(); }

  Polynomial nf(const Polynomial& p) const { return rel_.is_zero() ? p : rel_.normal_form(p); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return nf(a * b); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial one() const { return Polynomial(ctx_, 1); }
  Polynomial zero() const { return Polynomial(ctx_); }
  Polynomial constant(const Rational& c) const { return Polynomial(ctx_, c); }
  Polynomial var(const std::string& name) const {
    int i = ctx_->index(name);
    if (i < 0) throw ContextError("unknown variable " + name);
    return Polynomial::variable(ctx_, static_cast<std::size_t>(i));
  }
  Polynomial parse(const std::string& s) const { return nf(parse_polynomial(ctx_, s)); }
  Polynomial pow(const Polynomial& a, int n) const {
    Polynomial r = one();
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }
  bool is_zero(const Polynomial& p) const { return nf(p).is_zero(); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return nf(a - b).is_zero(); }

  int degree(const Polynomial& p) const { return p.degree(); }
  SparseVec<Key> vec(const Polynomial& p) const { return p.terms(); }
  Polynomial from_vec(const SparseVec<Key>& v) const { return Polynomial(ctx_, v); }
  std::string str(const Polynomial& p) const { return p.to_string(); }
  int key_degree(const Key& k) const { return total_degree(k); }

  bool is_standard(const Exponents& e) const {
    for (const auto& g : rel_.groebner())
      if (divides(g.leading_term().first, e)) return false;
    return true;
  }

  std::vector<Exponents> standard_monomials(int max_degree) const {
    std::vector<Exponents> out;
    for (auto& e : monomials_up_to(ctx_->size(), max_degree))
      if (rel_.is_zero() || is_standard(e)) out.push_back(std::move(e));
    return out;
  }

  // x with d x = a in the ring, searched by division first and then by linear algebra
  // over standard monomials of degree <= bound.
  std::optional<Polynomial> divide(const Polynomial& a, const Polynomial& d, int bound) const {
    Polynomial an = nf(a), dn = nf(d);
    if (dn.is_zero()) throw PreconditionError("division by zero element");
    if (an.is_zero()) return zero();
    auto [q, r] = divide_single(an, dn, order());
    if (r.is_zero()) {
      Polynomial qn = nf(q);
      if (equal(mul(qn, dn), an)) return qn;
    }
    if (rel_.is_zero()) return std::nullopt;
    const auto& basis = multiples(dn, bound);
    std::vector<SparseVec<Key>> cols;
    cols.reserve(basis.size());
    for (const auto& e : basis) cols.push_back(vec(mul(Polynomial::monomial(ctx_, e), dn)));
    auto sol = solve(cols, vec(an));
    if (!sol) return std::nullopt;
    Polynomial x(ctx_);
    for (std::size_t i = 0; i < basis.size(); ++i) x.add_term(basis[i], (*sol)[i]);
    return x;
  }

  bool same_ring(const QuotientRing& o) const { return ctx_->same_as(*o.ctx_) && rel_.equals(o.rel_); }

 private:
  ContextPtr ctx_;
  Ideal rel_;
  struct Cache {
    std::mutex mu;
    std::map<int, std::vector<Exponents>> standard;
  };
  std::shared_ptr<Cache> cache_;

  const std::vector<Exponents>& multiples(const Polynomial&, int bound) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->standard.find(bound);
    if (it == cache_->standard.end()) it = cache_->standard.emplace(bound, standard_monomials(bound)).first;
    return it->second;
  }
};

}  // namespace gw
