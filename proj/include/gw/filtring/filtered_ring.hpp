#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gw/errors.hpp"
#include "gw/exactalg/linalg.hpp"
#include "gw/filtring/degree.hpp"

namespace gw::filtring {

enum class FiltrationMode { Standard, Tower };

// Ring with an ascending filtration. Standard mode: F_n is spanned by s * (product of at most n
// filtration generators) with s in the subring generated by the F_0 generators. Tower mode:
// F_i is the subring generated by the generators of levels <= i and F_m = R beyond the top level.
// Pieces are materialized only for products whose weight (sum of generator degrees) is <= bound.
template <class Engine>
class FilteredRing {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  struct Generator {
    Element value;
    std::string name;
    int level;
    int weight;
  };

  struct Product {
    Element value;
    std::vector<int> exps;  // exponent per generator (commutative) or S-exponents then word letters
    int level;
    int weight;
  };

  FilteredRing() = default;

  FilteredRing(Engine e, std::vector<Element> f0, std::vector<Element> gens, std::vector<std::string> f0_names = {},
               std::vector<std::string> gen_names = {})
      : st_(std::make_shared<State>()) {
    st_->engine = std::move(e);
    st_->mode = FiltrationMode::Standard;
    add(f0, f0_names, 0, "s");
    add(gens, gen_names, 1, "e");
    st_->n0 = f0.size();
  }

  static FilteredRing tower(Engine e, std::vector<Element> f0, std::vector<std::vector<Element>> levels,
                            std::vector<std::string> f0_names = {},
                            std::vector<std::vector<std::string>> level_names = {}) {
    if (!Engine::commutative) throw PreconditionError("tower filtrations need a commutative engine");
    FilteredRing R;
    R.st_ = std::make_shared<State>();
    R.st_->engine = std::move(e);
    R.st_->mode = FiltrationMode::Tower;
    R.add(f0, f0_names, 0, "s");
    R.st_->n0 = f0.size();
    for (std::size_t i = 0; i < levels.size(); ++i)
      R.add(levels[i], i < level_names.size() ? level_names[i] : std::vector<std::string>{}, static_cast<int>(i + 1),
            "t" + std::to_string(i + 1) + "_");
    R.st_->tower_len = static_cast<int>(levels.size());
    return R;
  }

  const Engine& engine() const { return st_->engine; }
  FiltrationMode mode() const { return st_->mode; }
  const std::vector<Generator>& generators() const { return st_->gens; }
  std::size_t f0_count() const { return st_->n0; }
  int tower_length() const { return st_->tower_len; }

  const std::vector<Product>& products(int bound) const { return table(bound).products; }

  // Highest level at which the pieces can still grow at this bound.
  int top(int bound) const { return static_cast<int>(table(bound).pieces.size()) - 1; }

  const Subspace<Key>& piece(int n, int bound) const {
    const Table& t = table(bound);
    if (n < 0) return empty_;
    if (n >= static_cast<int>(t.pieces.size())) return t.pieces.back();
    return t.pieces[static_cast<std::size_t>(n)];
  }

  // Membership in F_n, raising the bound to the element's degree when needed.
  bool in_piece(const Element& r, int n, int bound) const {
    if (st_->engine.is_zero(r)) return true;
    if (n < 0) return false;
    return piece(n, std::max(bound, st_->engine.degree(r))).contains(st_->engine.vec(r));
  }

  // Filtration degree certified at exactly this bound; an element of ambient degree above the
  // bound cannot be expressed and raises InconclusiveError.
  FiltDegree degree(const Element& r, int bound) const {
    if (st_->engine.is_zero(r)) return FiltDegree::minus_infinity();
    if (st_->engine.degree(r) > bound)
      throw InconclusiveError("element " + st_->engine.str(r) + " exceeds the ambient bound", bound);
    return degree_auto(r, bound);
  }

  // Same, with the bound raised to the element's degree first.
  FiltDegree degree_auto(const Element& r, int bound) const {
    if (st_->engine.is_zero(r)) return FiltDegree::minus_infinity();
    int b = std::max(bound, st_->engine.degree(r));
    auto v = st_->engine.vec(r);
    const Table& t = table(b);
    for (std::size_t n = 0; n < t.pieces.size(); ++n)
      if (t.pieces[n].contains(v)) return FiltDegree::finite(static_cast<int>(n));
    throw InconclusiveError("element " + st_->engine.str(r) + " not reached by the filtration", b);
  }

  int finite_degree(const Element& r, int bound) const {
    FiltDegree d = degree_auto(r, bound);
    if (!d.is_finite()) throw PreconditionError("degree of zero requested");
    return d.value;
  }

  int weight_of(const std::vector<int>& exps) const {
    int w = 0;
    for (std::size_t i = 0; i < exps.size() && i < st_->gens.size(); ++i) w += exps[i] * st_->gens[i].weight;
    return w;
  }

 private:
  struct Table {
    std::vector<Product> products;
    std::vector<Subspace<Key>> pieces;
  };
  struct State {
    Engine engine;
    FiltrationMode mode = FiltrationMode::Standard;
    std::vector<Generator> gens;
    std::size_t n0 = 0;
    int tower_len = 0;
    std::mutex mu;
    std::map<int, std::shared_ptr<const Table>> tables;
  };
  std::shared_ptr<State> st_;
  inline static const Subspace<Key> empty_{};

  void add(const std::vector<Element>& xs, const std::vector<std::string>& names, int level, const std::string& stem) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Element v = st_->engine.nf(xs[i]);
      int w = std::max(1, st_->engine.degree(v));
      std::string n = i < names.size() ? names[i] : stem + std::to_string(i + 1);
      st_->gens.push_back({v, n, level, w});
    }
  }

  const Table& table(int bound) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->tables.find(bound);
    if (it == st_->tables.end()) it = st_->tables.emplace(bound, build(bound)).first;
    return *it->second;
  }

  std::shared_ptr<const Table> build(int bound) const {
    auto t = std::make_shared<Table>();
    const auto& E = st_->engine;
    const auto& G = st_->gens;
    std::vector<int> exps(G.size(), 0);
    auto level_of = [&](const std::vector<int>& ex) {
      int lv = 0;
      for (std::size_t i = 0; i < G.size(); ++i) {
        if (ex[i] == 0) continue;
        if (st_->mode == FiltrationMode::Standard) {
          lv += G[i].level * ex[i];
        } else {
          lv = std::max(lv, G[i].level);
        }
      }
      return lv;
    };
    if constexpr (Engine::commutative) {
      auto rec = [&](auto&& self, std::size_t i, const Element& val, int w) -> void {
        if (i == G.size()) {
          t->products.push_back({val, exps, level_of(exps), w});
          return;
        }
        Element cur = val;
        for (int k = 0; w + k * G[i].weight <= bound; ++k) {
          exps[i] = k;
          self(self, i + 1, cur, w + k * G[i].weight);
          cur = E.mul(cur, G[i].value);
        }
        exps[i] = 0;
      };
      rec(rec, 0, E.one(), 0);
    } else {
      const std::size_t n0 = st_->n0;
      std::vector<int> word;
      auto rec_word = [&](auto&& self, const Element& val, int w, const std::vector<int>& s_exps) -> void {
        std::vector<int> ex = s_exps;
        ex.insert(ex.end(), word.begin(), word.end());
        t->products.push_back({val, ex, static_cast<int>(word.size()), w});
        for (std::size_t j = n0; j < G.size(); ++j) {
          if (w + G[j].weight > bound) continue;
          word.push_back(static_cast<int>(j));
          self(self, E.mul(val, G[j].value), w + G[j].weight, s_exps);
          word.pop_back();
        }
      };
      std::vector<int> s_exps(n0, 0);
      auto rec_s = [&](auto&& self, std::size_t i, const Element& val, int w) -> void {
        if (i == n0) {
          rec_word(rec_word, val, w, s_exps);
          return;
        }
        Element cur = val;
        for (int k = 0; w + k * G[i].weight <= bound; ++k) {
          s_exps[i] = k;
          self(self, i + 1, cur, w + k * G[i].weight);
          cur = E.mul(cur, G[i].value);
        }
        s_exps[i] = 0;
      };
      rec_s(rec_s, 0, E.one(), 0);
    }
    int maxlv = 0;
    for (const auto& p : t->products) maxlv = std::max(maxlv, p.level);
    t->pieces.resize(static_cast<std::size_t>(maxlv) + 1);
    std::vector<std::vector<const Product*>> by_level(static_cast<std::size_t>(maxlv) + 1);
    for (const auto& p : t->products) by_level[static_cast<std::size_t>(p.level)].push_back(&p);
    Subspace<Key> acc;
    for (int n = 0; n <= maxlv; ++n) {
      for (const Product* p : by_level[static_cast<std::size_t>(n)]) acc.insert(E.vec(p->value));
      t->pieces[static_cast<std::size_t>(n)] = acc;
    }
    return t;
  }
};

}  // namespace gw::filtring
