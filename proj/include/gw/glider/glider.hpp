#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gw/filtring/filtered_ring.hpp"
#include "gw/report.hpp"

namespace gw::glider {

using filtring::FilteredRing;

// How the chain continues past its last listed level.
enum class Tail {
  Zero,        // M_n = 0
  RepeatLast,  // M_n = M_D
  Multiply     // M_{n+1} = factor * M_n (ideal powers and the like)
};

inline const char* tail_name(Tail t) {
  switch (t) {
    case Tail::Zero: return "zero";
    case Tail::RepeatLast: return "repeat-last";
    case Tail::Multiply: return "multiply";
  }
  return "?";
}

// Descending chain M_0 >= M_1 >= ... inside the carrier. Level n is the module over the
// coefficient algebra A generated by levels[n]; A defaults to the subring F_0 R, and an empty
// coefficient list makes each level a plain rational span.
template <class Engine>
struct Chain {
  using Element = typename Engine::Element;

  std::vector<std::vector<Element>> levels;
  std::optional<std::vector<Element>> coefficients;
  Tail tail = Tail::RepeatLast;
  std::optional<Element> factor;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

// Extra degree allowed when testing membership in a truncated level, so that elements whose
// normal form dropped in degree are still matched against enough spanning products.
inline constexpr int kSlack = 2;

// Glider representation: the chain together with the filtered ring acting on the carrier. The
// carrier is the ring itself (cyclic quotients are modelled by passing the quotient engine).
template <class Engine>
class Glider {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  struct Level {
    std::vector<Element> span;  // products a * g
    std::vector<int> weights;
    Subspace<Key> space;
  };

  Glider() = default;

  Glider(FilteredRing<Engine> R, Chain<Engine> c) : st_(std::make_shared<State>()) {
    if (c.levels.empty()) throw PreconditionError("a chain needs at least the level M_0");
    if (c.tail == Tail::Multiply && !c.factor) throw PreconditionError("multiply tail without a factor");
    st_->ring = std::move(R);
    const auto& E = st_->ring.engine();
    for (auto& lv : c.levels)
      for (auto& g : lv) g = E.nf(g);
    std::vector<Element> coeffs;
    if (c.coefficients) {
      coeffs = *c.coefficients;
    } else {
      for (std::size_t i = 0; i < st_->ring.f0_count(); ++i) coeffs.push_back(st_->ring.generators()[i].value);
    }
    st_->coeffs = FilteredRing<Engine>(E, coeffs, {});
    st_->chain = std::move(c);
  }

  const FilteredRing<Engine>& ring() const { return st_->ring; }
  const Engine& engine() const { return st_->ring.engine(); }
  const Chain<Engine>& chain() const { return st_->chain; }
  int depth() const { return st_->chain.depth(); }
  const std::vector<Check>& validation() const { return st_->validation; }

  // Generators of M_n for any n >= 0, following the tail policy.
  std::vector<Element> generators(int n) const {
    const auto& c = st_->chain;
    if (n <= c.depth()) return c.levels[static_cast<std::size_t>(n)];
    if (c.tail == Tail::Zero) return {};
    std::vector<Element> g = c.levels.back();
    if (c.tail == Tail::Multiply) {
      const auto& E = engine();
      Element f = E.pow(*c.factor, n - c.depth());
      for (auto& x : g) x = E.mul(f, x);
    }
    return g;
  }

  const Level& level(int n, int bound) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto key = std::make_pair(n, bound);
    auto it = st_->levels.find(key);
    if (it == st_->levels.end()) it = st_->levels.emplace(key, build_level(n, bound)).first;
    return *it->second;
  }

  bool contains(const Element& v, int n, int bound) const {
    const auto& E = engine();
    if (E.is_zero(v)) return true;
    return level(n, std::max(bound, E.degree(v)) + kSlack).space.contains(E.vec(v));
  }

  void set_validation(std::vector<Check> v) { st_->validation = std::move(v); }

 private:
  struct State {
    FilteredRing<Engine> ring;
    FilteredRing<Engine> coeffs;
    Chain<Engine> chain;
    std::vector<Check> validation;
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<const Level>> levels;
  };
  std::shared_ptr<State> st_;

  std::shared_ptr<const Level> build_level(int n, int bound) const {
    auto lv = std::make_shared<Level>();
    const auto& E = engine();
    for (const auto& g : generators(n)) {
      if (E.is_zero(g)) continue;
      int wg = std::max(0, E.degree(g));
      if (wg > bound) continue;
      for (const auto& a : st_->coeffs.products(bound - wg)) {
        Element v = E.mul(a.value, g);
        if (E.is_zero(v)) continue;
        lv->span.push_back(v);
        lv->weights.push_back(a.weight + wg);
        lv->space.insert(E.vec(v));
      }
    }
    return lv;
  }
};

// Validates descent M_{n+1} <= M_n through one level past the listed chain.
template <class Engine>
Glider<Engine> build_glider(FilteredRing<Engine> R, Chain<Engine> chain, int bound) {
  Glider<Engine> G(std::move(R), std::move(chain));
  const auto& E = G.engine();
  for (int n = 0; n <= G.depth(); ++n)
    for (const auto& g : G.generators(n + 1))
      if (!G.contains(g, n, bound))
        throw PreconditionError("chain is not descending: " + E.str(g) + " lies in M_" + std::to_string(n + 1) +
                                " but not in M_" + std::to_string(n));
  G.set_validation({pass("descent", "levels 0.." + std::to_string(G.depth() + 1) + ", bound " + std::to_string(bound),
                         "descending chain")});
  return G;
}

struct FragmentReport {
  std::vector<Check> checks;
  bool standard = false;
  std::string standard_witness;
  bool natural = false;

  Status status() const {
    Status s = Status::Pass;
    for (const auto& c : checks) s = combine(s, c.status);
    return s;
  }
};

template <class Engine>
struct StarChain {
  Chain<Engine> chain;
  std::vector<bool> natural;  // M_i == M_i* per level
  bool all_natural = true;
};

// M_i* = { m in M_0 : F_i R m <= M_0 } at the bound. M_0 is stable under F_0 R, so only the
// products of at most i filtration generators (no F_0 factors) need testing.
template <class Engine>
StarChain<Engine> star_chain(const Glider<Engine>& G, int bound, int depth = -1) {
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;
  if (depth < 0) depth = G.depth();
  const auto& E = G.engine();
  const auto& R = G.ring();
  const std::size_t n0 = R.f0_count();
  std::vector<const typename FilteredRing<Engine>::Product*> pure;
  for (const auto& p : R.products(bound)) {
    bool ok = true;
    for (std::size_t i = 0; i < n0 && i < p.exps.size(); ++i) ok = ok && p.exps[i] == 0;
    if (ok) pure.push_back(&p);
  }
  std::vector<Element> m0;
  for (const auto& v : G.level(0, bound).space.basis()) m0.push_back(E.from_vec(v));

  StarChain<Engine> out;
  out.chain.coefficients = std::vector<Element>{};
  for (std::size_t i = 0; i < n0; ++i) out.chain.coefficients->push_back(R.generators()[i].value);
  out.chain.tail = Tail::RepeatLast;
  for (int i = 0; i <= depth; ++i) {
    std::vector<Element> cur = m0;
    for (const auto* p : pure) {
      if (p->level > i || p->level == 0 || cur.empty()) continue;
      std::vector<SparseVec<Key>> imgs;
      int top = 0;
      for (const auto& w : cur) {
        Element pw = E.mul(p->value, w);
        top = std::max(top, E.degree(pw));
        imgs.push_back(E.vec(pw));
      }
      const auto& target = G.level(0, std::max(bound, top) + kSlack).space;
      std::vector<Element> next;
      for (const auto& c : kernel(imgs, &target)) {
        Element x = E.zero();
        for (std::size_t j = 0; j < cur.size(); ++j)
          if (c[j] != 0) x = E.add(x, E.mul(E.constant(c[j]), cur[j]));
        next.push_back(x);
      }
      cur = std::move(next);
    }
    Subspace<Key> star;
    for (const auto& x : cur) star.insert(E.vec(x));
    std::vector<Element> basis;
    for (const auto& v : star.basis()) basis.push_back(E.from_vec(v));
    out.chain.levels.push_back(std::move(basis));
    bool nat = star == G.level(i, bound).space;
    out.natural.push_back(nat);
    out.all_natural = out.all_natural && nat;
  }
  return out;
}

// Verifies F_m R * M_n <= M_{n-m} for m <= n <= depth on products of weight <= bound, reports
// standardness (F_1 M_n = M_{n-1}) and naturality, and, given the ambient glider N, whether
// G is a strict subfragment (M_n = N_n meet M_0).
template <class Engine>
FragmentReport check_fragment_axioms(const Glider<Engine>& G, int bound, int depth = -1,
                                     const Glider<Engine>* ambient = nullptr) {
  using Key = typename Engine::Key;
  if (depth < 0) depth = G.depth() + 1;
  const auto& E = G.engine();
  const auto& R = G.ring();
  FragmentReport rep;
  const auto& prods = R.products(bound);
  for (int m = 0; m <= depth; ++m) {
    std::string name = "action F_" + std::to_string(m);
    Check c = pass(name, "levels " + std::to_string(m) + ".." + std::to_string(depth) + ", bound " +
                             std::to_string(bound), "fragment action");
    for (int n = m; n <= depth && c.status == Status::Pass; ++n) {
      const auto& lv = G.level(n, bound);
      for (const auto& p : prods) {
        if (p.level != m) continue;
        for (std::size_t k = 0; k < lv.span.size(); ++k) {
          if (p.weight + lv.weights[k] > bound) continue;
          auto pv = E.mul(p.value, lv.span[k]);
          if (!G.contains(pv, n - m, bound)) {
            c = fail(name, "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": " + E.str(p.value) + " * " +
                               E.str(lv.span[k]) + " = " + E.str(pv) + " not in M_" + std::to_string(n - m),
                     "fragment action");
            break;
          }
        }
        if (c.status != Status::Pass) break;
      }
    }
    rep.checks.push_back(c);
  }

  rep.standard = true;
  for (int n = 1; n <= depth && rep.standard; ++n) {
    Subspace<Key> f1m;
    const auto& lv = G.level(n, bound);
    for (const auto& p : prods) {
      if (p.level > 1) continue;
      for (std::size_t k = 0; k < lv.span.size(); ++k)
        if (p.weight + lv.weights[k] <= bound) f1m.insert(E.vec(E.mul(p.value, lv.span[k])));
    }
    const auto& lower = G.level(n - 1, bound);
    for (std::size_t k = 0; k < lower.span.size(); ++k) {
      if (lower.weights[k] > bound - kSlack) continue;
      if (!f1m.contains(E.vec(lower.span[k]))) {
        rep.standard = false;
        rep.standard_witness = E.str(lower.span[k]) + " in M_" + std::to_string(n - 1) + " but not in F_1 M_" +
                               std::to_string(n);
        break;
      }
    }
  }
  rep.natural = star_chain(G, bound, std::min(depth, G.depth())).all_natural;

  if (ambient) {
    Check c = pass("strict subfragment", "levels 0.." + std::to_string(depth), "strict subfragment");
    const auto& top = G.level(0, bound).space;
    for (int n = 0; n <= depth; ++n) {
      if (!(ambient->level(n, bound).space.intersect(top) == G.level(n, bound).space)) {
        c = fail("strict subfragment", "level " + std::to_string(n) + " differs from N_n meet M", "strict subfragment");
        break;
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

template <class Engine>
struct Body {
  std::vector<typename Engine::Element> basis;
  Subspace<typename Engine::Key> space;
  bool stabilized = false;
};

// Intersection of M_0..M_depth at the bound. Stabilized when the running intersection did not
// change over the last three levels, or became zero.
template <class Engine>
Body<Engine> body(const Glider<Engine>& G, int depth, int bound) {
  Body<Engine> b;
  std::vector<std::size_t> dims;
  b.space = G.level(0, bound).space;
  dims.push_back(b.space.dim());
  for (int n = 1; n <= depth; ++n) {
    b.space = b.space.intersect(G.level(n, bound).space);
    dims.push_back(b.space.dim());
  }
  const std::size_t k = dims.size();
  b.stabilized = b.space.empty() || (k >= 3 && dims[k - 1] == dims[k - 2] && dims[k - 2] == dims[k - 3]);
  for (const auto& v : b.space.basis()) b.basis.push_back(G.engine().from_vec(v));
  return b;
}

}  // namespace gw::glider
