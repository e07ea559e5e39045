#pragma once

#include <algorithm>
#include <memory>

#include "gw/filtring/filtered_ring.hpp"

namespace gw::filtring {

// What the filtration looks like below its lowest materialized level.
enum class Bottom {
  Zero,      // F_n = 0 below the lowest level
  Constant,  // F_n equals the lowest piece for every lower n
  Unknown    // not materialized
};

// Filtered module carried by the ring engine: pieces F_n M at a weight bound, for integer n.
template <class Engine>
class FilteredModule {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  virtual ~FilteredModule() = default;

  virtual const Engine& engine() const = 0;
  virtual const FilteredRing<Engine>& ring() const = 0;
  virtual int lowest() const = 0;
  virtual Bottom bottom() const = 0;
  // Pieces are constant from this level upwards at the given bound.
  virtual int highest(int bound) const = 0;
  // Requires lowest() <= n <= highest(bound).
  virtual const Subspace<Key>& level_piece(int n, int bound) const = 0;

  const Subspace<Key>& piece(int n, int bound) const {
    static const Subspace<Key> none;
    if (n < lowest()) {
      if (bottom() == Bottom::Zero) return none;
      if (bottom() == Bottom::Constant) return level_piece(lowest(), bound);
      throw InconclusiveError("level " + std::to_string(n) + " below the materialized depth", bound);
    }
    return level_piece(std::min(n, highest(bound)), bound);
  }

  bool in_piece(const Element& m, int n, int bound) const {
    if (engine().is_zero(m)) return true;
    return piece(n, std::max(bound, engine().degree(m))).contains(engine().vec(m));
  }

  FiltDegree degree(const Element& m, int bound) const {
    if (engine().is_zero(m)) return FiltDegree::minus_infinity();
    if (engine().degree(m) > bound)
      throw InconclusiveError("element " + engine().str(m) + " exceeds the ambient bound", bound);
    return degree_auto(m, bound);
  }

  FiltDegree degree_auto(const Element& m, int bound) const {
    const auto& E = engine();
    if (E.is_zero(m)) return FiltDegree::minus_infinity();
    int b = std::max(bound, E.degree(m));
    auto v = E.vec(m);
    int hi = highest(b);
    for (int n = lowest(); n <= hi; ++n) {
      if (!level_piece(n, b).contains(v)) continue;
      if (n == lowest()) {
        if (bottom() == Bottom::Constant) return FiltDegree::minus_infinity();
        if (bottom() == Bottom::Unknown) return FiltDegree::below(n);
      }
      return FiltDegree::finite(n);
    }
    throw InconclusiveError("element " + E.str(m) + " not reached by the filtration", b);
  }
};

// R viewed as a module over itself with F_n R.
template <class Engine>
class RingModule : public FilteredModule<Engine> {
 public:
  explicit RingModule(FilteredRing<Engine> R) : R_(std::move(R)) {}
  const Engine& engine() const override { return R_.engine(); }
  const FilteredRing<Engine>& ring() const override { return R_; }
  int lowest() const override { return 0; }
  Bottom bottom() const override { return Bottom::Zero; }
  int highest(int bound) const override { return R_.top(bound); }
  const Subspace<typename Engine::Key>& level_piece(int n, int bound) const override { return R_.piece(n, bound); }

 private:
  FilteredRing<Engine> R_;
};

}  // namespace gw::filtring
