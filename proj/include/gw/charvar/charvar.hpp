#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/exactalg/quotient_ring.hpp"
#include "gw/filtring/graded.hpp"
#include "gw/glider/filtration.hpp"
#include "gw/report.hpp"
#include "gw/weyl/weyl.hpp"

namespace gw::charvar {

using Coeffs = SparseVec<int>;

// A graded module over a commutative graded ring Q[vars]/rel, given by finitely many classes
// in each module degree and the action of homogeneous ring elements on them.
class GradedModuleData {
 public:
  virtual ~GradedModuleData() = default;

  virtual const ContextPtr& context() const = 0;
  virtual const Ideal& ring_relations() const = 0;
  virtual int degree_bound() const = 0;
  virtual int grading_degree(const Exponents& e) const = 0;
  // Homogeneous ring monomials of grading degree n within the bounds, in enumeration order.
  virtual std::vector<Exponents> ring_monomials(int n) const = 0;
  virtual std::vector<int> module_degrees() const = 0;
  virtual std::size_t class_count(int d) const = 0;
  // Coefficient vectors of classes in degree d killed by every homogeneous g in gs.
  virtual Subspace<int> killed_space(const std::vector<Polynomial>& gs, int d) const = 0;
  virtual std::string class_string(int d, const Coeffs& c) const = 0;
  virtual Ideal annihilator() const = 0;

  int symbol_degree(const Polynomial& g) const {
    if (g.is_zero()) return 0;
    return grading_degree(g.terms().begin()->first);
  }
  bool is_zero_module() const {
    for (int d : module_degrees())
      if (class_count(d) > 0) return false;
    return true;
  }
};

// Cyclic module G(R)/J over Q[vars]/rel with rel <= J; the annihilator is J itself.
class CyclicGraded : public GradedModuleData {
 public:
  CyclicGraded(ContextPtr ctx, std::vector<int> degrees, Ideal rel, Ideal J, int D)
      : ctx_(std::move(ctx)), degrees_(std::move(degrees)), rel_(std::move(rel)), D_(D) {
    std::vector<Polynomial> gens = rel_.generators();
    for (const auto& g : J.generators()) gens.push_back(g);
    Ideal full(ctx_, gens);
    J_ = Ideal(ctx_, full.groebner());
    quotient_ = QuotientRing(ctx_, J_.generators());
    if (!J_.is_unit())
      for (const auto& e : quotient_.standard_monomials(D_)) classes_[grading_degree(e)].push_back(e);
  }

  const ContextPtr& context() const override { return ctx_; }
  const Ideal& ring_relations() const override { return rel_; }
  int degree_bound() const override { return D_; }
  int grading_degree(const Exponents& e) const override {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
    return d;
  }
  std::vector<Exponents> ring_monomials(int n) const override {
    std::vector<Exponents> out;
    for (auto& e : monomials_up_to(ctx_->size(), D_))
      if (grading_degree(e) == n) out.push_back(std::move(e));
    return out;
  }
  std::vector<int> module_degrees() const override {
    std::vector<int> out;
    for (const auto& [d, v] : classes_) out.push_back(d);
    return out;
  }
  std::size_t class_count(int d) const override {
    auto it = classes_.find(d);
    return it == classes_.end() ? 0 : it->second.size();
  }
  Subspace<int> killed_space(const std::vector<Polynomial>& gs, int d) const override {
    const auto& cls = at(d);
    std::vector<Coeffs> dom;
    for (std::size_t k = 0; k < cls.size(); ++k) dom.push_back({{static_cast<int>(k), Rational(1)}});
    std::optional<Subspace<int>> acc;
    for (const auto& g : gs) {
      std::vector<SparseVec<Exponents>> imgs;
      for (const auto& e : cls) imgs.push_back(quotient_.mul(g, Polynomial::monomial(ctx_, e)).terms());
      auto k = preimage(dom, imgs, Subspace<Exponents>{});
      acc = acc ? acc->intersect(k) : k;
    }
    return acc ? *acc : Subspace<int>::span(dom);
  }
  std::string class_string(int d, const Coeffs& c) const override {
    const auto& cls = at(d);
    Polynomial p(ctx_);
    for (const auto& [k, a] : c) p.add_term(cls[static_cast<std::size_t>(k)], a);
    return p.to_string();
  }
  Ideal annihilator() const override { return J_; }

 private:
  ContextPtr ctx_;
  std::vector<int> degrees_;
  Ideal rel_, J_;
  int D_;
  QuotientRing quotient_;
  std::map<int, std::vector<Exponents>> classes_;

  const std::vector<Exponents>& at(int d) const {
    static const std::vector<Exponents> none;
    auto it = classes_.find(d);
    return it == classes_.end() ? none : it->second;
  }
};

// g(M) = sum_i M_i / M_{i+1} of a glider, module degree -i, over the graded ring of its filtration.
class LevelGraded : public GradedModuleData {
 public:
  LevelGraded(const glider::Glider<QuotientRing>& G, int depth, int D, int bound)
      : graded_(G.ring(), D, bound), fragment_(G, depth, bound), depth_(depth), bound_(bound) {
    for (int i = 0; i <= depth_; ++i) classes_.push_back(fragment_.classes(i));
  }

  const filtring::GradedRing<QuotientRing>& graded() const { return graded_; }
  const glider::GradedFragment<QuotientRing>& fragment() const { return fragment_; }

  const ContextPtr& context() const override { return graded_.context(); }
  const Ideal& ring_relations() const override { return graded_.relations(); }
  int degree_bound() const override { return graded_.degree_bound(); }
  int grading_degree(const Exponents& e) const override { return graded_.grading_degree(e); }
  std::vector<Exponents> ring_monomials(int n) const override {
    std::vector<Exponents> out;
    for (const auto& m : graded_.monos(n)) out.push_back(m.exps);
    return out;
  }
  std::vector<int> module_degrees() const override {
    std::vector<int> out;
    for (int i = 0; i <= depth_; ++i) out.push_back(-i);
    return out;
  }
  std::size_t class_count(int d) const override {
    int i = -d;
    return i < 0 || i > depth_ ? 0 : classes_[static_cast<std::size_t>(i)].size();
  }
  Subspace<int> killed_space(const std::vector<Polynomial>& gs, int d) const override {
    const int i = -d;
    const auto& cls = classes_[static_cast<std::size_t>(i)];
    std::vector<Coeffs> dom;
    for (std::size_t k = 0; k < cls.size(); ++k) dom.push_back({{static_cast<int>(k), Rational(1)}});
    std::optional<Subspace<int>> acc;
    for (const auto& g : gs) {
      auto k = killed_by(graded_.lift(g), symbol_degree(g), i, dom);
      acc = acc ? acc->intersect(k) : k;
    }
    return acc ? *acc : Subspace<int>::span(dom);
  }
  std::string class_string(int d, const Coeffs& c) const override {
    const auto& cls = classes_[static_cast<std::size_t>(-d)];
    const auto& E = fragment_.filtration().engine();
    Polynomial p = E.zero();
    for (const auto& [k, a] : c) p = E.add(p, E.mul(E.constant(a), cls[static_cast<std::size_t>(k)]));
    return "[" + E.str(p) + "] in g_" + std::to_string(d);
  }

  // Homogeneous symbols of degree n <= D killing all of g(M), degree by degree.
  Ideal annihilator() const override {
    std::vector<Polynomial> gens = graded_.relations().generators();
    const auto& E = fragment_.filtration().engine();
    for (int n = 0; n <= graded_.degree_bound(); ++n) {
      const auto& ms = graded_.monos(n);
      if (ms.empty()) continue;
      std::vector<Coeffs> dom;
      for (std::size_t k = 0; k < ms.size(); ++k) dom.push_back({{static_cast<int>(k), Rational(1)}});
      Subspace<int> acc = Subspace<int>::span(dom);
      for (int i = 0; i <= depth_ && !acc.empty(); ++i)
        for (const auto& c : classes_[static_cast<std::size_t>(i)]) {
          std::vector<SparseVec<Exponents>> imgs;
          int top = 0;
          for (const auto& m : ms) {
            auto rc = E.mul(m.lift, c);
            top = std::max(top, E.degree(rc));
            imgs.push_back(E.vec(rc));
          }
          const auto& target = fragment_.filtration().piece(n - i - 1, std::max(bound_, top) + glider::kSlack);
          acc = acc.intersect(preimage(dom, imgs, target));
        }
      for (const auto& v : acc.basis()) {
        Polynomial p(graded_.context());
        for (const auto& [k, a] : v) p.add_term(ms[static_cast<std::size_t>(k)].exps, a);
        p = graded_.ring().nf(p);
        if (!p.is_zero()) gens.push_back(p);
      }
    }
    Ideal I(graded_.context(), gens);
    return Ideal(graded_.context(), I.groebner());
  }

 private:
  filtring::GradedRing<QuotientRing> graded_;
  glider::GradedFragment<QuotientRing> fragment_;
  int depth_, bound_;
  std::vector<std::vector<Polynomial>> classes_;

  Subspace<int> killed_by(const Polynomial& r, int n, int i, const std::vector<Coeffs>& dom) const {
    const auto& E = fragment_.filtration().engine();
    const auto& cls = classes_[static_cast<std::size_t>(i)];
    std::vector<SparseVec<Exponents>> imgs;
    int top = 0;
    for (const auto& c : cls) {
      auto rc = E.mul(r, c);
      top = std::max(top, E.degree(rc));
      imgs.push_back(E.vec(rc));
    }
    return preimage(dom, imgs, fragment_.filtration().piece(n - i - 1, std::max(bound_, top) + glider::kSlack));
  }
};

// G(M) for M = A_1 / A_1 L with the order filtration, truncated at symbol degree D.
inline CyclicGraded weyl_cyclic(const std::vector<weyl::WeylElement>& L, int D) {
  auto ctx = weyl::symbol_context();
  Ideal J = weyl::gr_left_ideal_bounded(L, weyl::WeylFiltration::Sigma, D, ctx);
  return CyclicGraded(ctx, {0, 1}, Ideal::zero(ctx), J, D);
}

// ---------------------------------------------------------------- characteristic variety

struct CharVarietyReport {
  Ideal annihilator;
  bool empty = false;  // unit annihilator
};

inline CharVarietyReport char_variety(const GradedModuleData& M) {
  CharVarietyReport r{M.annihilator()};
  r.empty = r.annihilator.is_unit();
  return r;
}

// P (a prime of G(R), given by generators) lies in chi(M) iff Ann(G(M)) <= P.
inline bool in_char_variety(const GradedModuleData& M, const std::vector<Polynomial>& P) {
  std::vector<Polynomial> gens = M.ring_relations().generators();
  gens.insert(gens.end(), P.begin(), P.end());
  return Ideal(M.context(), gens).contains(M.annihilator());
}

// ---------------------------------------------------------------- strong characteristic variety

enum class DatumKind { Prime, MultSymbol, IdealDatum };

// Torsion datum on G(R): the complement of a prime, the powers of a homogeneous symbol, or
// the powers of an ideal generated by homogeneous symbols.
struct Datum {
  DatumKind kind = DatumKind::Prime;
  std::vector<Polynomial> gens;

  static Datum prime(std::vector<Polynomial> g) { return {DatumKind::Prime, std::move(g)}; }
  static Datum symbol(Polynomial s) { return {DatumKind::MultSymbol, {std::move(s)}}; }
  static Datum ideal(std::vector<Polynomial> g) { return {DatumKind::IdealDatum, std::move(g)}; }

  std::string label() const {
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : ", ") + g.to_string();
    switch (kind) {
      case DatumKind::Prime: return "prime (" + s + ")";
      case DatumKind::MultSymbol: return "powers of " + s;
      case DatumKind::IdealDatum: return "ideal (" + s + ")";
    }
    return s;
  }
};

struct Exclusion {
  std::vector<Polynomial> annihilators;  // the element g, or generators of a power of the ideal
  int module_degree = 0;
  Coeffs coeffs;
  std::string g_text, m_text;
};

struct XiVerdict {
  bool excluded = false;
  std::optional<Exclusion> witness;
  int bound = 0;

  std::string to_string() const {
    if (!excluded) return "in-xi-up-to(" + std::to_string(bound) + ")";
    return "excluded(" + witness->g_text + ", " + witness->m_text + ")";
  }
};

namespace detail {

inline std::vector<Polynomial> power_gens(const GradedModuleData& M, const std::vector<Polynomial>& I, int k) {
  QuotientRing A(M.context(), M.ring_relations().generators());
  std::vector<Polynomial> cur{A.one()};
  for (int j = 0; j < k; ++j) {
    std::vector<Polynomial> next;
    for (const auto& a : cur)
      for (const auto& g : I) {
        Polynomial p = A.mul(a, g);
        if (!p.is_zero() && std::none_of(next.begin(), next.end(), [&](const Polynomial& q) { return (p - q).is_zero(); }))
          next.push_back(p);
      }
    cur = std::move(next);
  }
  return cur;
}

inline std::string join(const std::vector<Polynomial>& gs) {
  if (gs.empty()) return "0";
  std::string s;
  for (const auto& g : gs) s += (s.empty() ? "" : ", ") + g.to_string();
  return gs.size() == 1 ? s : "(" + s + ")";
}

inline std::optional<Exclusion> try_pair(const GradedModuleData& M, const std::vector<Polynomial>& gs, int d) {
  if (M.class_count(d) == 0) return std::nullopt;
  auto K = M.killed_space(gs, d);
  if (K.empty()) return std::nullopt;
  // the kernel vector with the smallest top class index
  auto basis = K.basis();
  auto best = std::min_element(basis.begin(), basis.end(), [](const Coeffs& a, const Coeffs& b) {
    return std::prev(a.end())->first < std::prev(b.end())->first;
  });
  Exclusion w{gs, d, *best, join(gs), M.class_string(d, *best)};
  return w;
}

}  // namespace detail

// Searches homogeneous g in the filter of the datum and a nonzero class m with g m = 0, in the
// order (max of the two degrees, their sum, enumeration order). A miss is a bounded answer.
inline XiVerdict strong_char_excludes(const GradedModuleData& M, const Datum& datum, int D) {
  XiVerdict out;
  out.bound = D;
  if (M.is_zero_module()) return out;
  const auto mdeg = M.module_degrees();
  struct Cand {
    int max, sum;
    std::size_t order;
    std::size_t gens;
    int d;
  };
  std::vector<Cand> cands;
  std::vector<std::vector<Polynomial>> pool;
  auto add = [&](std::vector<Polynomial> gs, int n) {
    pool.push_back(std::move(gs));
    for (int d : mdeg) {
      int ad = std::abs(d);
      if (ad <= D) cands.push_back({std::max(n, ad), n + ad, cands.size(), pool.size() - 1, d});
    }
  };
  QuotientRing A(M.context(), M.ring_relations().generators());
  switch (datum.kind) {
    case DatumKind::Prime: {
      std::vector<Polynomial> pg = M.ring_relations().generators();
      pg.insert(pg.end(), datum.gens.begin(), datum.gens.end());
      Ideal P(M.context(), pg);
      for (int n = 0; n <= D; ++n) {
        auto ms = M.ring_monomials(n);
        std::vector<Polynomial> outside;
        for (const auto& e : ms) {
          Polynomial g = Polynomial::monomial(M.context(), e);
          if (!P.contains(g)) {
            add({g}, n);
            outside.push_back(g);
          }
        }
        // low-degree combinations of two monomials not both inside P
        for (std::size_t a = 0; a < ms.size(); ++a)
          for (std::size_t b = a + 1; b < ms.size() && b < a + 4; ++b) {
            Polynomial g = Polynomial::monomial(M.context(), ms[a]) - Polynomial::monomial(M.context(), ms[b]);
            if (!P.contains(g)) add({g}, n);
          }
      }
      break;
    }
    case DatumKind::MultSymbol: {
      const Polynomial& s = datum.gens.front();
      int ds = M.symbol_degree(s);
      for (int k = 1; k * std::max(ds, 1) <= std::max(D, ds); ++k) add({A.pow(s, k)}, k * ds);
      break;
    }
    case DatumKind::IdealDatum: {
      int dmax = 0;
      for (const auto& g : datum.gens) dmax = std::max(dmax, M.symbol_degree(g));
      for (int k = 1; k * std::max(dmax, 1) <= std::max(D, dmax); ++k)
        add(detail::power_gens(M, datum.gens, k), k * dmax);
      break;
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.max, a.sum, a.order) < std::tie(b.max, b.sum, b.order);
  });
  for (const auto& c : cands)
    if (auto w = detail::try_pair(M, pool[c.gens], c.d)) {
      out.excluded = true;
      out.witness = std::move(w);
      return out;
    }
  return out;
}

// Re-checks an exclusion witness: every listed element kills the class and the class is nonzero.
inline bool verify_exclusion(const GradedModuleData& M, const Exclusion& w) {
  if (w.coeffs.empty()) return false;
  return M.killed_space(w.annihilators, w.module_degree).contains(w.coeffs);
}

// Filter containment between data of the same kind: L(a) <= L(b).
inline bool datum_leq(const GradedModuleData& M, const Datum& a, const Datum& b) {
  auto with_rel = [&](const std::vector<Polynomial>& g) {
    std::vector<Polynomial> v = M.ring_relations().generators();
    v.insert(v.end(), g.begin(), g.end());
    return Ideal(M.context(), v);
  };
  if (a.kind != b.kind) throw PreconditionError("data of different kinds");
  switch (a.kind) {
    case DatumKind::Prime: return with_rel(a.gens).contains(with_rel(b.gens));  // complement of P grows as P shrinks
    case DatumKind::MultSymbol: return radical_membership(b.gens.front(), with_rel(a.gens));
    case DatumKind::IdealDatum: return radical_contained(with_rel(b.gens), with_rel(a.gens));
  }
  return false;
}

// The same witness excludes every larger datum: for a prime the element g stays outside the
// smaller prime; for powers of a symbol or an ideal some power of the larger datum lies inside
// the ideal generated by the witness and still kills the class.
inline bool witness_transfers(const GradedModuleData& M, const Exclusion& w, const Datum& larger, int power_bound) {
  switch (larger.kind) {
    case DatumKind::Prime: {
      std::vector<Polynomial> pg = M.ring_relations().generators();
      pg.insert(pg.end(), larger.gens.begin(), larger.gens.end());
      Ideal P(M.context(), pg);
      for (const auto& g : w.annihilators)
        if (P.contains(g)) return false;
      return verify_exclusion(M, w);
    }
    case DatumKind::MultSymbol:
    case DatumKind::IdealDatum:
      for (int k = 1; k <= power_bound; ++k) {
        auto gs = detail::power_gens(M, larger.gens, k);
        if (gs.empty() || M.killed_space(gs, w.module_degree).contains(w.coeffs)) return true;
      }
      return false;
  }
  return false;
}

// ---------------------------------------------------------------- non-smoothness glider

struct SmoothnessInput {
  QuotientRing ring;                   // K[V]
  std::vector<Polynomial> base;        // generators of K[W] = F_0
  Polynomial designated;               // the generator X_1 of K[W] lying in P^2
  Polynomial f, g;                     // X_1 = f g, both without constant term
  std::vector<Polynomial> extra;       // a_1..a_k
  std::vector<std::string> base_names;
};

struct SmoothnessReport {
  glider::Glider<QuotientRing> glider;
  std::vector<Check> checks;
  XiVerdict exclusion;
  Status status() const { return combine(checks); }
};

inline SmoothnessReport smoothness_glider(const SmoothnessInput& in, int bound, int depth, int D = 4) {
  const auto& A = in.ring;
  if (!A.equal(A.mul(in.f, in.g), in.designated))
    throw PreconditionError("factorization does not multiply to " + in.designated.to_string());
  for (const auto* p : {&in.f, &in.g})
    if (A.nf(*p).constant_term() != 0)
      throw PreconditionError(p->to_string() + " has a nonzero constant term, no zero-constant factorization");
  std::vector<Polynomial> gens{in.f, in.g};
  std::vector<std::string> names{"f", "g"};
  for (std::size_t i = 0; i < in.extra.size(); ++i) {
    gens.push_back(in.extra[i]);
    names.push_back("a" + std::to_string(i + 1));
  }
  filtring::FilteredRing<QuotientRing> R(A, in.base, gens, in.base_names, names);
  glider::Chain<QuotientRing> chain;
  chain.coefficients = in.base;
  for (const auto& a : in.extra) chain.coefficients->push_back(a);
  chain.coefficients->push_back(in.f);
  chain.levels = {{A.one()}, {in.f}};
  chain.tail = glider::Tail::Multiply;
  chain.factor = in.f;
  auto G = glider::build_glider(R, chain, bound);
  SmoothnessReport rep{G, {}, {}};
  auto frag = glider::check_fragment_axioms(G, bound, depth);
  rep.checks = frag.checks;
  LevelGraded gm(G, depth, D, bound);
  Polynomial fbar = gm.graded().sigma(in.f);
  rep.exclusion = strong_char_excludes(gm, Datum::symbol(fbar), D);
  if (rep.exclusion.excluded && verify_exclusion(gm, *rep.exclusion.witness))
    rep.checks.push_back(pass("proper strong characteristic variety", "powers of " + fbar.to_string() + " excluded by " +
                                                                          rep.exclusion.to_string(),
                              "non-smooth morphism glider"));
  else
    rep.checks.push_back(fail("proper strong characteristic variety", rep.exclusion.to_string(), "non-smooth morphism glider"));
  return rep;
}

}  // namespace gw::charvar
