#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/exactalg/linalg.hpp"
#include "gw/exactalg/parse.hpp"

namespace gw::weyl {

// (a, b) stands for X^a d^b, the normally ordered basis of A_1.
using WeylKey = std::pair<int, int>;

class WeylElement {
 public:
  using Terms = std::map<WeylKey, Rational>;

  WeylElement() = default;
  explicit WeylElement(const Rational& c) {
    if (c != 0) t_[{0, 0}] = c;
  }
  explicit WeylElement(Terms t) : t_(std::move(t)) {
    for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
  }
  static WeylElement monomial(int a, int b, const Rational& c = 1) {
    WeylElement w;
    if (c != 0) w.t_[{a, b}] = c;
    return w;
  }
  static WeylElement X() { return monomial(1, 0); }
  static WeylElement D() { return monomial(0, 1); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const WeylKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  WeylElement& operator+=(const WeylElement& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) {
    for (auto& [k, c] : a.t_) c = -c;
    return a;
  }
  friend WeylElement operator*(const Rational& s, WeylElement a) {
    if (s == 0) return WeylElement();
    for (auto& [k, c] : a.t_) c *= s;
    return a;
  }

  // X^a d^b * X^c d^e = sum_k C(b,k) c!/(c-k)! X^(a+c-k) d^(b+e-k)
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    WeylElement r;
    for (const auto& [ku, cu] : u.t_)
      for (const auto& [kv, cv] : v.t_) {
        auto [a, b] = ku;
        auto [c, e] = kv;
        for (int k = 0; k <= std::min(b, c); ++k)
          r.add_term({a + c - k, b + e - k}, cu * cv * binomial(b, k) * falling_factorial(c, k));
      }
    return r;
  }

  WeylElement pow(int n) const {
    WeylElement r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  bool operator==(const WeylElement& o) const { return t_ == o.t_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  // Bernstein degree a + b; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
  }
  int order() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<WeylKey, Rational>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
      if (dx != dy) return dx > dy;
      return x.first.second > y.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
      Rational a = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string m;
      if (k.first) m += k.first > 1 ? "x^" + std::to_string(k.first) : "x";
      if (k.second) {
        if (!m.empty()) m += '*';
        m += k.second > 1 ? "d^" + std::to_string(k.second) : "d";
      }
      if (m.empty()) {
        os << a.get_str();
      } else if (a == 1) {
        os << m;
      } else {
        os << a.get_str() << '*' << m;
      }
    }
    return os.str();
  }

 private:
  Terms t_;
};

inline WeylElement weyl_product(const WeylElement& u, const WeylElement& v) { return u * v; }

namespace detail {
struct WeylBuilder {
  using Value = WeylElement;
  Value variable(std::string_view n, std::size_t at) {
    if (n == "x" || n == "X") return WeylElement::X();
    if (n == "d" || n == "D") return WeylElement::D();
    throw ParseError("unknown Weyl generator '" + std::string(n) + "'", at);
  }
  Value constant(const Rational& q) { return WeylElement(q); }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, int n) { return a.pow(n); }
};
}  // namespace detail

// Reads words in x and d (juxtaposition is the noncommutative product) into normal order.
inline WeylElement parse_weyl(std::string_view text) {
  detail::WeylBuilder b;
  return ExpressionParser<detail::WeylBuilder>(text, b).parse();
}

enum class WeylFiltration { Sigma, Bernstein };

inline int filtration_degree(const WeylKey& k, WeylFiltration f) {
  return f == WeylFiltration::Sigma ? k.second : k.first + k.second;
}

inline int filtration_degree(const WeylElement& u, WeylFiltration f) {
  int d = -1;
  for (const auto& [k, c] : u.terms()) d = std::max(d, filtration_degree(k, f));
  return d;
}

// Commutative ring Q[X, xi] receiving symbols.
inline ContextPtr symbol_context() { return make_context({"X", "xi"}); }

inline Polynomial symbol_of_part(const WeylElement& u, WeylFiltration f, int deg, const ContextPtr& ctx) {
  Polynomial p(ctx);
  for (const auto& [k, c] : u.terms())
    if (filtration_degree(k, f) == deg) p.add_term({k.first, k.second}, c);
  return p;
}

// Principal symbol; zero maps to zero.
inline Polynomial weyl_symbol(const WeylElement& u, WeylFiltration f, const ContextPtr& ctx = symbol_context()) {
  if (u.is_zero()) return Polynomial(ctx);
  return symbol_of_part(u, f, filtration_degree(u, f), ctx);
}

// Cofactors p_i of Bernstein degree <= D with f = sum p_i g_i, if they exist. Under the order
// filtration the cofactors have order <= D and Bernstein degree <= total_cap.
inline std::optional<std::vector<WeylElement>> left_membership_bounded(const WeylElement& f,
                                                                      const std::vector<WeylElement>& gens, int D,
                                                                      WeylFiltration filt = WeylFiltration::Bernstein,
                                                                      int total_cap = -1) {
  const int top = filt == WeylFiltration::Bernstein ? D : std::max(D, total_cap);
  std::vector<std::pair<std::size_t, WeylKey>> labels;
  std::vector<SparseVec<WeylKey>> cols;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int d = 0; d <= top; ++d)
      for (int a = d; a >= 0; --a) {
        if (filtration_degree(WeylKey{a, d - a}, filt) > D) continue;
        WeylElement m = WeylElement::monomial(a, d - a) * gens[i];
        labels.push_back({i, {a, d - a}});
        cols.push_back(m.terms());
      }
  auto sol = solve(cols, f.terms());
  if (!sol) return std::nullopt;
  std::vector<WeylElement> cof(gens.size());
  for (std::size_t j = 0; j < labels.size(); ++j) cof[labels[j].first].add_term(labels[j].second, (*sol)[j]);
  return cof;
}

// Symbols of the elements sum p_i g_i with deg p_i <= D, as an ideal of Q[X, xi].
inline Ideal gr_left_ideal_bounded(const std::vector<WeylElement>& gens, WeylFiltration f, int D,
                                   const ContextPtr& ctx = symbol_context()) {
  Subspace<WeylKey> ID;
  for (const auto& g : gens)
    for (int d = 0; d <= D; ++d)
      for (int a = d; a >= 0; --a) ID.insert((WeylElement::monomial(a, d - a) * g).terms());
  int top = -1;
  for (const auto& v : ID.basis()) top = std::max(top, filtration_degree(WeylElement(v), f));
  std::vector<Polynomial> syms;
  for (int k = 0; k <= top; ++k) {
    auto piece = ID.restrict_support([&](const WeylKey& key) { return filtration_degree(key, f) <= k; });
    for (const auto& v : piece.basis()) {
      Polynomial s = symbol_of_part(WeylElement(v), f, k, ctx);
      if (!s.is_zero()) syms.push_back(s);
    }
  }
  Ideal I(ctx, std::move(syms));
  return Ideal(ctx, I.groebner());
}

struct OreCertificate {
  bool certified = true;
  std::string witness;  // first failure, if any
};

// Left Ore condition for the powers of s against the given samples: s^j a in A_1 s for some j <= D.
inline OreCertificate ore_certify(const WeylElement& s, const std::vector<WeylElement>& samples, int D) {
  OreCertificate out;
  for (const auto& a : samples) {
    bool ok = false;
    WeylElement sj(1);
    for (int j = 0; j <= D && !ok; ++j) {
      if (left_membership_bounded(sj * a, {s}, D + a.degree())) ok = true;
      sj = sj * s;
    }
    if (!ok) {
      out.certified = false;
      out.witness = a.to_string();
      return out;
    }
  }
  return out;
}

// Ring engine over A_1 for the filtered-ring layer.
struct WeylEngine {
  using Element = WeylElement;
  using Key = WeylKey;
  static constexpr bool commutative = false;

  Element nf(const Element& a) const { return a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element one() const { return WeylElement(1); }
  Element zero() const { return WeylElement(); }
  Element constant(const Rational& c) const { return WeylElement(c); }
  Element parse(const std::string& s) const { return parse_weyl(s); }
  Element pow(const Element& a, int n) const { return a.pow(n); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  int degree(const Element& a) const { return a.degree(); }
  SparseVec<Key> vec(const Element& a) const { return a.terms(); }
  Element from_vec(const SparseVec<Key>& v) const { return WeylElement(v); }
  std::string str(const Element& a) const { return a.to_string(); }
  int key_degree(const Key& k) const { return k.first + k.second; }
};

}  // namespace gw::weyl
