#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/report.hpp"

namespace gw::torsheaf {

// Symmetric kernel functor kappa_I of a commutative ring, represented by I. Its filter is the
// set of ideals containing a power of I.
struct KernelFunctor {
  Ideal ideal;
  std::string label;

  KernelFunctor(Ideal I, std::string name = {}) : ideal(std::move(I)), label(std::move(name)) {
    if (label.empty()) label = "kappa" + ideal.to_string();
  }
};

// kappa_I <= kappa_J  iff  sqrt(J) <= sqrt(I).
inline bool kf_leq(const KernelFunctor& a, const KernelFunctor& b) { return radical_contained(b.ideal, a.ideal); }

inline bool kf_equal(const KernelFunctor& a, const KernelFunctor& b) { return radical_equal(a.ideal, b.ideal); }

inline KernelFunctor kf_meet(const KernelFunctor& a, const KernelFunctor& b) {
  return KernelFunctor(ideal_sum(a.ideal, b.ideal), "(" + a.label + " meet " + b.label + ")");
}

inline KernelFunctor kf_join(const KernelFunctor& a, const KernelFunctor& b) {
  return KernelFunctor(ideal_intersection(a.ideal, b.ideal), "(" + a.label + " join " + b.label + ")");
}

// The least functor: its filter is {R}.
inline KernelFunctor kf_trivial(const ContextPtr& ctx) { return KernelFunctor(Ideal::unit(ctx), "kappa_1"); }

// ---------------------------------------------------------------- filter oracle

// Brute-force filter membership on a fixed family of test ideals: L lies in the filter of
// kappa_I iff I^m <= L for some m <= power_bound. Powers only grow smaller, so the test
// I^power_bound <= L is equivalent; the top powers are cached.
class FilterOracle {
 public:
  FilterOracle(std::vector<Ideal> family, int power_bound)
      : family_(std::move(family)), N_(power_bound), cache_(std::make_shared<Cache>()) {}

  const std::vector<Ideal>& family() const { return family_; }
  int power_bound() const { return N_; }

  const Ideal& top_power(const Ideal& I) const {
    std::string key = I.to_string();
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(key);
    if (it != cache_->powers.end()) return it->second;
    return cache_->powers.emplace(key, ideal_power(I, N_)).first->second;
  }

  bool member(const Ideal& L, const Ideal& I) const { return L.contains(top_power(I)); }

  // Member of the filter generated by products of the two filters: I^a J^b <= L.
  bool member_product(const Ideal& L, const Ideal& I, const Ideal& J) const {
    return L.contains(ideal_product(top_power(I), top_power(J)));
  }

  bool leq(const Ideal& I, const Ideal& J) const {
    for (const auto& L : family_)
      if (member(L, I) && !member(L, J)) return false;
    return true;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, Ideal> powers;
  };
  std::vector<Ideal> family_;
  int N_;
  std::shared_ptr<Cache> cache_;
};

// All ideals generated by a nonempty subset of the given generators.
inline std::vector<Ideal> subset_ideals(const ContextPtr& ctx, const std::vector<std::string>& gens) {
  auto ps = parse_polynomials(ctx, gens);
  std::vector<Ideal> out;
  for (unsigned mask = 1; mask < (1u << ps.size()); ++mask) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask & (1u << i)) g.push_back(ps[i]);
    out.emplace_back(ctx, std::move(g));
  }
  return out;
}

// Order, meet and join from radicals against the brute-force filters, over every pair of the
// oracle family. Meets are compared filter by filter; joins against the product filter.
// Truncating powers at N makes the oracle err in one direction only: it can miss I^M <= L for
// M > N. Disagreements of that kind are inconclusive; the others are failures.
inline std::vector<Check> lattice_oracle_check(const FilterOracle& O) {
  const auto& F = O.family();
  const std::size_t n = F.size();
  struct Tally {
    std::size_t bad = 0, short_power = 0;
    std::string bad_w, short_w;
    void note(bool genuine, const std::string& w) {
      if (genuine) {
        if (bad++ == 0) bad_w = w;
      } else if (short_power++ == 0) {
        short_w = w;
      }
    }
  } leq, meet_t, join_t;
  std::vector<std::vector<bool>> mem(n, std::vector<bool>(n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) mem[l][i] = O.member(F[l], F[i]);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++pairs;
      // kappa_i <= kappa_j; F[i] itself sits in the family, so an oracle "yes" forces the radicals
      bool oracle = true;
      for (std::size_t l = 0; l < n && oracle; ++l) oracle = !mem[l][i] || mem[l][j];
      bool radical = kf_leq(KernelFunctor(F[i]), KernelFunctor(F[j]));
      if (oracle != radical) leq.note(oracle, F[i].to_string() + " <= " + F[j].to_string());
      if (j < i) continue;  // meet and join are symmetric
      KernelFunctor meet = kf_meet(KernelFunctor(F[i]), KernelFunctor(F[j]));
      KernelFunctor join = kf_join(KernelFunctor(F[i]), KernelFunctor(F[j]));
      const Ideal& pm = O.top_power(meet.ideal);
      const Ideal& pj = O.top_power(join.ideal);
      Ideal prod(F[i].context(), ideal_product(O.top_power(F[i]), O.top_power(F[j])).groebner());
      for (std::size_t l = 0; l < n; ++l) {
        // (I+J)^N <= L forces I^N, J^N <= L
        bool in_meet = F[l].contains(pm), in_both = mem[l][i] && mem[l][j];
        if (in_meet != in_both) {
          meet_t.note(in_meet, meet.label + " at " + F[l].to_string());
          break;
        }
        // (I meet J)^N <= L forces (IJ)^N <= L
        bool in_join = F[l].contains(pj), in_prod = F[l].contains(prod);
        if (in_join != in_prod) {
          join_t.note(in_join, join.label + " at " + F[l].to_string());
          break;
        }
      }
    }
  const std::string powers = ", powers <= " + std::to_string(O.power_bound());
  auto mk = [&](const char* name, const Tally& t, std::size_t total) {
    std::string s = std::to_string(total - t.bad - t.short_power) + "/" + std::to_string(total) + " pairs agree" + powers;
    if (t.bad) return fail(name, s + "; first disagreement " + t.bad_w, "filter containment");
    if (t.short_power)
      return inconclusive(name, s + "; " + std::to_string(t.short_power) + " need higher powers, first " + t.short_w +
                                    " (bound " + std::to_string(O.power_bound()) + ")",
                          "filter containment");
    return pass(name, s, "filter containment");
  };
  const std::size_t sym = n * (n + 1) / 2;
  return {mk("order agrees with filters", leq, pairs), mk("meet agrees with filters", meet_t, sym),
          mk("join agrees with filters", join_t, sym)};
}

// ---------------------------------------------------------------- opens and covers

// Basis open X(I); X(I) <= X(J) iff kappa_J <= kappa_I.
struct BasisOpen {
  Ideal ideal;
  std::string label() const { return "X" + ideal.to_string(); }
};

inline bool open_contained(const BasisOpen& U, const BasisOpen& V) {
  return kf_leq(KernelFunctor(V.ideal), KernelFunctor(U.ideal));
}

// The parts cover the target iff the meet of their functors is the target's functor.
inline bool is_cover(const BasisOpen& target, const std::vector<BasisOpen>& parts) {
  if (parts.empty()) throw PreconditionError("empty cover");
  Ideal sum = parts.front().ideal;
  for (std::size_t i = 1; i < parts.size(); ++i) sum = ideal_sum(sum, parts[i].ideal);
  return radical_equal(sum, target.ideal);
}

// ---------------------------------------------------------------- gen-topology

// gen(kappa) = { tau : kappa <= tau } restricted to a finite sample of functors.
inline std::vector<std::size_t> gen_set(const KernelFunctor& k, const std::vector<KernelFunctor>& space) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (kf_leq(k, space[i])) out.push_back(i);
  return out;
}

// gen(a) meet gen(b) = gen(a join b) by membership, gen(kappa_1) = everything, and
// distributivity of the lattice on every triple of the given functors.
inline std::vector<Check> gen_topology_check(const std::vector<KernelFunctor>& basis,
                                             const std::vector<KernelFunctor>& space) {
  std::vector<Check> out;
  Check inter = pass("gen intersections", std::to_string(basis.size()) + " functors, " + std::to_string(space.size()) +
                                              " sampled points", "gen-topology basis");
  for (std::size_t a = 0; a < basis.size() && inter.status == Status::Pass; ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      auto ga = gen_set(basis[a], space), gb = gen_set(basis[b], space);
      std::vector<std::size_t> both;
      std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(both));
      if (both != gen_set(kf_join(basis[a], basis[b]), space)) {
        inter = fail(inter.name, basis[a].label + ", " + basis[b].label, inter.anchor);
        break;
      }
    }
  out.push_back(inter);
  if (!space.empty()) {
    auto all = gen_set(kf_trivial(space.front().ideal.context()), space);
    out.push_back(all.size() == space.size()
                      ? pass("gen of the trivial functor", "all " + std::to_string(space.size()) + " points", "gen-topology")
                      : fail("gen of the trivial functor", std::to_string(all.size()) + " points", "gen-topology"));
  }
  Check dist = pass("distributivity", {}, "distributive lattice");
  std::size_t triples = 0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        ++triples;
        bool d1 = kf_equal(kf_meet(a, kf_join(b, c)), kf_join(kf_meet(a, b), kf_meet(a, c)));
        bool d2 = kf_equal(kf_join(a, kf_meet(b, c)), kf_meet(kf_join(a, b), kf_join(a, c)));
        if ((!d1 || !d2) && dist.status == Status::Pass)
          dist = fail(dist.name, a.label + ", " + b.label + ", " + c.label, dist.anchor);
      }
  if (dist.status == Status::Pass) dist.witness = std::to_string(triples) + " triples";
  out.push_back(dist);
  return out;
}

}  // namespace gw::torsheaf
