#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gw/filtring/filtered_module.hpp"
#include "gw/glider/glider.hpp"

namespace gw::glider {

using filtring::Bottom;
using filtring::FilteredModule;

// Filtration of the carrier induced by a glider: F_{-n} = M_n and, for n > 0,
// F_n = sum over j >= 0 of F_{n+j} R * M_j. Levels below -depth follow the chain's tail.
template <class Engine>
class GliderFiltration : public FilteredModule<Engine> {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  GliderFiltration(Glider<Engine> G, int depth) : G_(std::move(G)), depth_(depth), cache_(std::make_shared<Cache>()) {}

  const Glider<Engine>& glider() const { return G_; }
  const Engine& engine() const override { return G_.engine(); }
  const FilteredRing<Engine>& ring() const override { return G_.ring(); }
  int lowest() const override { return -depth_; }
  Bottom bottom() const override {
    const auto& c = G_.chain();
    if (c.tail == Tail::Zero && depth_ > c.depth()) return Bottom::Zero;
    if (c.tail == Tail::RepeatLast && depth_ >= c.depth()) return Bottom::Constant;
    return Bottom::Unknown;
  }
  int highest(int bound) const override { return std::max(0, G_.ring().top(bound)); }

  const Subspace<Key>& level_piece(int n, int bound) const override {
    if (n <= 0) return G_.level(-n, bound).space;
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = std::make_pair(n, bound);
    auto it = cache_->pieces.find(key);
    if (it != cache_->pieces.end()) return *it->second;
    auto sp = std::make_shared<Subspace<Key>>(G_.level(0, bound).space);
    const auto& E = engine();
    for (int j = 0; j <= depth_; ++j) {
      const auto& lv = G_.level(j, bound);
      if (lv.span.empty()) break;
      for (const auto& p : G_.ring().products(bound)) {
        if (p.level > n + j) continue;
        for (std::size_t k = 0; k < lv.span.size(); ++k)
          if (p.weight + lv.weights[k] <= bound) sp->insert(E.vec(E.mul(p.value, lv.span[k])));
      }
    }
    return *cache_->pieces.emplace(key, sp).first->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<const Subspace<Key>>> pieces;
  };
  Glider<Engine> G_;
  int depth_;
  std::shared_ptr<Cache> cache_;
};

template <class Engine>
std::shared_ptr<GliderFiltration<Engine>> glider_filtration(const Glider<Engine>& G, int depth) {
  return std::make_shared<GliderFiltration<Engine>>(G, depth);
}

// g(M) = sum M_i / M_{i+1} with the symbol action of ring elements. An element r of filtration
// degree j sends the class of level i to degree j - i of the induced filtration; it acts as zero
// on g_{-i} when r * M_i lands one step lower.
template <class Engine>
class GradedFragment {
 public:
  using Element = typename Engine::Element;
  using Key = typename Engine::Key;

  GradedFragment(const Glider<Engine>& G, int depth, int bound)
      : F_(std::make_shared<GliderFiltration<Engine>>(G, depth + 2)), depth_(depth), bound_(bound) {}

  const GliderFiltration<Engine>& filtration() const { return *F_; }
  int depth() const { return depth_; }

  // Representatives of a basis of M_i / M_{i+1} at the bound.
  std::vector<Element> classes(int i) const {
    const auto& E = F_->engine();
    const auto& lower = F_->glider().level(i + 1, bound_).space;
    Subspace<Key> acc = lower;
    std::vector<Element> out;
    for (const auto& v : F_->glider().level(i, bound_).space.basis())
      if (acc.insert(v)) out.push_back(E.from_vec(lower.reduce(v)));
    return out;
  }

  bool level_zero(int i) const { return classes(i).empty(); }

  // Nonzero class of g_{-i} killed by r (taken in filtration degree j), if any.
  std::optional<Element> killed_class(const Element& r, int j, int i) const {
    const auto& E = F_->engine();
    auto cls = classes(i);
    if (cls.empty()) return std::nullopt;
    const auto& lower = F_->glider().level(i + 1, bound_).space;
    std::vector<SparseVec<Key>> dom, imgs;
    int top = 0;
    for (const auto& c : cls) {
      Element rc = E.mul(r, c);
      top = std::max(top, E.degree(rc));
      dom.push_back(E.vec(c));
      imgs.push_back(E.vec(rc));
    }
    // r * M_{i+1} is already inside the target, so it suffices to test class representatives
    const auto& target = F_->piece(j - i - 1, std::max(bound_, top) + kSlack);
    for (const auto& c : kernel(imgs, &target)) {
      auto v = combine(dom, c);
      if (!lower.contains(v)) return E.from_vec(v);
    }
    return std::nullopt;
  }

  bool acts_as_zero(const Element& r, int j, int i) const {
    const auto& E = F_->engine();
    for (const auto& c : classes(i))
      if (!F_->in_piece(E.mul(r, c), j - i - 1, bound_)) return false;
    return true;
  }

  // The action is well defined: r * M_{i+1} <= F_{j-i-1} for every filtration generator r.
  Check fragment_check() const {
    const auto& E = F_->engine();
    for (const auto& g : F_->ring().generators())
      for (int i = 0; i < depth_; ++i)
        for (const auto& v : F_->glider().level(i + 1, bound_).span)
          if (!F_->in_piece(E.mul(g.value, v), g.level - i - 1, bound_))
            return fail("graded fragment", g.name + " * " + E.str(v) + " leaves degree " + std::to_string(g.level - i - 1),
                        "associated graded fragment");
    return pass("graded fragment", "levels 0.." + std::to_string(depth_), "associated graded fragment");
  }

 private:
  std::shared_ptr<GliderFiltration<Engine>> F_;
  int depth_, bound_;
};

}  // namespace gw::glider
