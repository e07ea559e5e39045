#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "gw/exactalg/rational.hpp"

namespace gw {

template <class Key>
using SparseVec = std::map<Key, Rational>;

// y += a * x
template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x) {
  if (a == 0) return;
  for (const auto& [k, c] : x) {
    auto [it, fresh] = y.emplace(k, a * c);
    if (!fresh) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

template <class Key>
SparseVec<Key> scaled(SparseVec<Key> v, const Rational& a) {
  if (a == 0) return {};
  for (auto& [k, c] : v) c *= a;
  return v;
}

// Row-reduced echelon basis of a subspace of the free vector space on Key.
// Each row has coefficient 1 at its pivot (the row's largest key) and 0 at every other pivot.
template <class Key>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const std::vector<SparseVec<Key>>& vs) {
    Subspace s;
    for (const auto& v : vs) s.insert(v);
    return s;
  }

  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::map<Key, SparseVec<Key>>& rows() const { return rows_; }

  std::vector<SparseVec<Key>> basis() const {
    std::vector<SparseVec<Key>> b;
    b.reserve(rows_.size());
    for (const auto& [p, r] : rows_) b.push_back(r);
    return b;
  }

  SparseVec<Key> reduce(SparseVec<Key> v) const {
    if (rows_.empty()) return v;
    std::vector<std::pair<const Key*, Rational>> hits;
    if (v.size() < rows_.size()) {
      for (const auto& [k, c] : v) {
        auto r = rows_.find(k);
        if (r != rows_.end()) hits.emplace_back(&r->first, c);
      }
    } else {
      for (const auto& [p, r] : rows_) {
        auto it = v.find(p);
        if (it != v.end()) hits.emplace_back(&p, it->second);
      }
    }
    for (const auto& [p, c] : hits) axpy(v, -c, rows_.at(*p));
    return v;
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).empty(); }

  bool contains(const Subspace& o) const {
    for (const auto& [p, r] : o.rows_)
      if (!contains(r)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return rows_ == o.rows_; }

  // Returns true when v was independent of the current rows.
  bool insert(const SparseVec<Key>& v) {
    SparseVec<Key> r = reduce(v);
    if (r.empty()) return false;
    auto top = std::prev(r.end());
    Key pivot = top->first;
    Rational inv = Rational(1) / top->second;
    for (auto& [k, c] : r) c *= inv;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) {
        Rational c = it->second;
        axpy(row, -c, r);
      }
    }
    rows_.emplace(std::move(pivot), std::move(r));
    return true;
  }

  Subspace sum(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& [p, r] : o.rows_) s.insert(r);
    return s;
  }

  Subspace intersect(const Subspace& o) const;

  // Elements supported only on keys accepted by keep.
  template <class Pred>
  Subspace restrict_support(Pred keep) const;

 private:
  std::map<Key, SparseVec<Key>> rows_;
};

// Basis of { c : sum_i c_i v_i lies in modulo } (modulo may be null for the zero space).
template <class Key>
std::vector<std::vector<Rational>> kernel(const std::vector<SparseVec<Key>>& vs,
                                          const Subspace<Key>* modulo = nullptr) {
  struct Row {
    SparseVec<Key> v;
    std::map<int, Rational> combo;
  };
  std::map<Key, Row> pivots;
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Row row{modulo ? modulo->reduce(vs[i]) : vs[i], {{static_cast<int>(i), Rational(1)}}};
    // eliminate from the top key downwards
    auto cursor = row.v.end();
    while (!row.v.empty()) {
      if (cursor == row.v.begin()) break;
      auto it = std::prev(cursor);
      auto pv = pivots.find(it->first);
      if (pv == pivots.end()) {
        cursor = it;
        continue;
      }
      Key k = it->first;
      Rational c = it->second / pv->second.v.rbegin()->second;
      axpy(row.v, -c, pv->second.v);
      for (const auto& [j, a] : pv->second.combo) {
        auto [ci, fresh] = row.combo.emplace(j, -c * a);
        if (!fresh) {
          ci->second -= c * a;
          if (ci->second == 0) row.combo.erase(ci);
        }
      }
      cursor = row.v.lower_bound(k);
    }
    if (row.v.empty()) {
      std::vector<Rational> c(vs.size());
      for (const auto& [j, a] : row.combo) c[static_cast<std::size_t>(j)] = a;
      out.push_back(std::move(c));
    } else {
      Key top = std::prev(row.v.end())->first;
      pivots.emplace(std::move(top), std::move(row));
    }
  }
  return out;
}

// Coefficients c with sum_i c_i cols_i - target in modulo, or nullopt.
template <class Key>
std::optional<std::vector<Rational>> solve(const std::vector<SparseVec<Key>>& cols, const SparseVec<Key>& target,
                                           const Subspace<Key>* modulo = nullptr) {
  std::vector<SparseVec<Key>> all = cols;
  all.push_back(target);
  auto ker = kernel(all, modulo);
  const std::size_t t = cols.size();
  for (const auto& c : ker) {
    if (c[t] == 0) continue;
    std::vector<Rational> x(t);
    Rational s = -Rational(1) / c[t];
    for (std::size_t i = 0; i < t; ++i) x[i] = c[i] * s;
    return x;
  }
  return std::nullopt;
}

template <class Key>
SparseVec<Key> combine(const std::vector<SparseVec<Key>>& vs, const std::vector<Rational>& c) {
  SparseVec<Key> r;
  for (std::size_t i = 0; i < vs.size(); ++i) axpy(r, c[i], vs[i]);
  return r;
}

// Basis of { sum c_i v_i : c in kernel(images, modulo) }, i.e. the preimage of modulo inside span(vs).
template <class Key, class Key2>
Subspace<Key> preimage(const std::vector<SparseVec<Key>>& domain, const std::vector<SparseVec<Key2>>& images,
                       const Subspace<Key2>& target) {
  Subspace<Key> out;
  for (const auto& c : kernel(images, &target)) out.insert(combine(domain, c));
  return out;
}

template <class Key>
Subspace<Key> Subspace<Key>::intersect(const Subspace& o) const {
  auto b = basis();
  Subspace out;
  for (const auto& c : kernel(b, &o)) out.insert(combine(b, c));
  return out;
}

template <class Key>
template <class Pred>
Subspace<Key> Subspace<Key>::restrict_support(Pred keep) const {
  auto b = basis();
  std::vector<SparseVec<Key>> outside;
  outside.reserve(b.size());
  for (const auto& v : b) {
    SparseVec<Key> w;
    for (const auto& [k, c] : v)
      if (!keep(k)) w.emplace(k, c);
    outside.push_back(std::move(w));
  }
  Subspace out;
  for (const auto& c : kernel(outside)) out.insert(combine(b, c));
  return out;
}

}  // namespace gw
