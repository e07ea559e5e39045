#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gw/errors.hpp"
#include "gw/exactalg/monomial.hpp"
#include "gw/exactalg/parse.hpp"
#include "gw/exactalg/rational.hpp"

namespace gw {

// Variable names plus the default order used for printing and Groebner work.
class Context {
 public:
  Context(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex())
      : names_(std::move(names)), order_(order) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw ContextError("duplicate variable " + names_[i]);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }

  int index(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }

  bool same_as(const Context& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(std::vector<std::string> names,
                               MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Context>(std::move(names), order);
}

using TermMap = std::map<Exponents, Rational>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(ContextPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (c != 0) terms_[Exponents(ctx_->size(), 0)] = c;
  }
  Polynomial(ContextPtr ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  static Polynomial variable(ContextPtr ctx, std::size_t i) {
    Exponents e(ctx->size(), 0);
    e.at(i) = 1;
    return monomial(std::move(ctx), e, 1);
  }
  static Polynomial monomial(ContextPtr ctx, const Exponents& e, const Rational& c = 1) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_term() const {
    if (!ctx_) return 0;
    auto it = terms_.find(Exponents(ctx_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  std::pair<Exponents, Rational> leading_term(const MonomialOrder& o) const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (o.greater(it->first, best->first)) best = it;
    return *best;
  }
  std::pair<Exponents, Rational> leading_term() const { return leading_term(ctx_->order()); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= k;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.ctx_ ? a.ctx_ : b.ctx_);
    r.check(b);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(mono_mul(ea, eb), ca * cb);
    return r;
  }

  Polynomial mul_term(const Exponents& e, const Rational& k) const {
    Polynomial r(ctx_);
    if (k == 0) return r;
    for (const auto& [ea, ca] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono_mul(ea, e), ca * k);
    return r;
  }

  Polynomial pow(int n) const {
    if (n < 0) throw PreconditionError("negative exponent");
    Polynomial r(ctx_, 1), b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  Polynomial monic(const MonomialOrder& o) const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_term(o).second);
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Terms in descending order under o.
  std::vector<std::pair<Exponents, Rational>> sorted_terms(const MonomialOrder& o) const {
    std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return o.greater(x.first, y.first); });
    return v;
  }

  std::string to_string(const MonomialOrder& o) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(o)) {
      Rational a = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        os << a.get_str();
      } else if (a == 1) {
        os << mono;
      } else {
        os << a.get_str() << '*' << mono;
      }
    }
    return os.str();
  }
  std::string to_string() const { return ctx_ ? to_string(ctx_->order()) : "0"; }

  std::string monomial_string(const Exponents& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += ctx_->name(i);
      if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
  }

  void check(const Polynomial& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_))
      throw ContextError("polynomials from different variable contexts");
  }

 private:
  ContextPtr ctx_;
  TermMap terms_;

  void adopt(const Polynomial& o) {
    check(o);
    if (!ctx_) ctx_ = o.ctx_;
  }
};

namespace detail {

struct PolynomialBuilder {
  using Value = Polynomial;
  ContextPtr ctx;
  Value variable(std::string_view n, std::size_t at) {
    int i = ctx->index(n);
    if (i < 0) throw ParseError("unknown variable '" + std::string(n) + "'", at);
    return Polynomial::variable(ctx, static_cast<std::size_t>(i));
  }
  Value constant(const Rational& q) { return Polynomial(ctx, q); }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, int n) { return a.pow(n); }
};

}  // namespace detail

inline Polynomial parse_polynomial(const ContextPtr& ctx, std::string_view text) {
  detail::PolynomialBuilder b{ctx};
  return ExpressionParser<detail::PolynomialBuilder>(text, b).parse();
}

inline std::vector<Polynomial> parse_polynomials(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(ctx, t));
  return out;
}

// Copies p into a context whose variables are a superset, matching by name.
inline Polynomial embed(const Polynomial& p, const ContextPtr& target) {
  const auto& src = *p.context();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = target->index(src.name(i));
    if (map[i] < 0) throw ContextError("variable " + src.name(i) + " missing from target context");
  }
  TermMap t;
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(map[i])] += e[i];
    t.emplace(std::move(f), c);
  }
  return Polynomial(target, std::move(t));
}

// Inverse of embed; throws if p uses a variable absent from target.
inline Polynomial restrict_to(const Polynomial& p, const ContextPtr& target) {
  const auto& src = *p.context();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index(src.name(i));
  TermMap t;
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw ContextError("variable " + src.name(i) + " cannot be dropped");
      f[static_cast<std::size_t>(map[i])] = e[i];
    }
    t.emplace(std::move(f), c);
  }
  return Polynomial(target, std::move(t));
}

}  // namespace gw
