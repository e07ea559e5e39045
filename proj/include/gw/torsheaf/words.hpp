#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gw/exactalg/ideal.hpp"
#include "gw/report.hpp"
#include "gw/weyl/weyl.hpp"

namespace gw::torsheaf {

// A word S_1 ... S_n of multiplicative sets, each named by its generating element.
using Word = std::vector<std::string>;

inline std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) s += "S_" + l;
  return s;
}

// A morphism W' -> W is a strictly increasing map alpha with W'_i = W_alpha(i).
inline bool word_morphism(const Word& from, const Word& to) {
  std::size_t j = 0;
  for (const auto& l : from) {
    while (j < to.size() && to[j] != l) ++j;
    if (j == to.size()) return false;
    ++j;
  }
  return true;
}

inline bool word_morphism_bruteforce(const Word& from, const Word& to) {
  std::vector<std::size_t> alpha;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == from.size()) return true;
    std::size_t start = alpha.empty() ? 0 : alpha.back() + 1;
    for (std::size_t k = start; k < to.size(); ++k)
      if (to[k] == from[i]) {
        alpha.push_back(k);
        if (rec(i + 1)) return true;
        alpha.pop_back();
      }
    return false;
  };
  return rec(0);
}

inline std::vector<Word> all_words(const std::vector<std::string>& alphabet, int max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (int n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& a : alphabet) {
        Word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Word morphisms against the brute-force embedding search, plus reflexivity and transitivity.
inline std::vector<Check> word_category_check(const std::vector<std::string>& alphabet, int max_len) {
  auto ws = all_words(alphabet, max_len);
  std::vector<Check> out;
  Check agree = pass("morphisms match embeddings", {}, "word category");
  std::vector<std::vector<bool>> hom(ws.size(), std::vector<bool>(ws.size()));
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      hom[i][j] = word_morphism(ws[i], ws[j]);
      if (hom[i][j] != word_morphism_bruteforce(ws[i], ws[j]) && agree.status == Status::Pass)
        agree = fail(agree.name, word_string(ws[i]) + " -> " + word_string(ws[j]), agree.anchor);
    }
  if (agree.status == Status::Pass)
    agree.witness = std::to_string(ws.size() * ws.size()) + " pairs, length <= " + std::to_string(max_len);
  out.push_back(agree);
  Check refl = pass("reflexive", std::to_string(ws.size()) + " words", "word category");
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (!hom[i][i]) {
      refl = fail(refl.name, word_string(ws[i]), refl.anchor);
      break;
    }
  out.push_back(refl);
  Check trans = pass("transitive", std::to_string(ws.size()) + " words", "word category");
  for (std::size_t i = 0; i < ws.size() && trans.status == Status::Pass; ++i)
    for (std::size_t j = 0; j < ws.size() && trans.status == Status::Pass; ++j) {
      if (!hom[i][j]) continue;
      for (std::size_t k = 0; k < ws.size(); ++k)
        if (hom[j][k] && !hom[i][k]) {
          trans = fail(trans.name, word_string(ws[i]) + " -> " + word_string(ws[j]) + " -> " + word_string(ws[k]),
                       trans.anchor);
          break;
        }
    }
  out.push_back(trans);
  return out;
}

// Filter of the composed kernel functors kappa_S1 ... kappa_Sn: L qualifies when some power of
// s_n carries it, by colon, into the filter of the shorter word.
inline bool composed_filter_member(const Ideal& L, const std::vector<Polynomial>& letters, int power_bound) {
  if (letters.empty()) return L.is_unit();
  std::vector<Polynomial> rest(letters.begin(), letters.end() - 1);
  Polynomial p(L.context(), 1);
  for (int a = 0; a <= power_bound; ++a) {
    if (composed_filter_member(ideal_quotient_element(L, p), rest, power_bound)) return true;
    p = p * letters.back();
  }
  return false;
}

// Filter of the word: L contains s_1^a1 ... s_n^an for some a_i <= power_bound.
inline bool word_filter_member(const Ideal& L, const std::vector<Polynomial>& letters, int power_bound) {
  Polynomial p(L.context(), 1);
  for (const auto& s : letters) p = p * s.pow(power_bound);
  return L.contains(p);
}

inline Check word_lemma_check(const std::vector<Polynomial>& letters, const std::vector<Ideal>& tests, int power_bound) {
  const std::string name = "word filter lemma";
  std::size_t inside = 0;
  for (const auto& L : tests) {
    bool c = composed_filter_member(L, letters, power_bound);
    bool w = word_filter_member(L, letters, power_bound);
    if (c != w)
      return fail(name, L.to_string() + (c ? " is in the composed filter only" : " is in the word filter only"),
                  "composed filters");
    inside += c ? 1 : 0;
  }
  return pass(name, std::to_string(tests.size()) + " test ideals, " + std::to_string(inside) + " in both filters, powers <= " +
                        std::to_string(power_bound), "composed filters");
}

// ---------------------------------------------------------------- schematic rings

struct SchematicVerdict {
  bool schematic = true;
  bool within_degree = true;  // least cofactor order <= a + b on every tuple
  std::vector<std::string> witnesses;  // one per choice tuple: certificate or failing tuple
  std::vector<std::pair<int, int>> degrees;  // least order, least Bernstein degree
};

// A_1 with the Ore sets of X and d: 1 lies in A_1 X^a + A_1 d^b for every a, b <= max_power.
// Per tuple: cofactors of least order (Bernstein degree <= degree_cap), and separately the
// least Bernstein degree of any cofactor pair.
inline SchematicVerdict schematic_check_weyl(int max_power, int degree_cap = 16) {
  using weyl::WeylElement;
  using weyl::WeylFiltration;
  SchematicVerdict v;
  auto least = [&](const std::vector<WeylElement>& g, WeylFiltration f)
      -> std::pair<int, std::optional<std::vector<WeylElement>>> {
    for (int D = 0; D <= degree_cap; ++D)
      if (auto c = weyl::left_membership_bounded(WeylElement(1), g, D, f, degree_cap)) return {D, c};
    return {-1, std::nullopt};
  };
  for (int a = 0; a <= max_power; ++a)
    for (int b = 0; b <= max_power; ++b) {
      auto xa = WeylElement::X().pow(a), db = WeylElement::D().pow(b);
      std::string tup = "(X^" + std::to_string(a) + ", d^" + std::to_string(b) + ")";
      auto [ord, cof] = least({xa, db}, WeylFiltration::Sigma);
      auto [bern, cof2] = least({xa, db}, WeylFiltration::Bernstein);
      if (!cof || !cof2 || !((*cof)[0] * xa + (*cof)[1] * db == WeylElement(1))) {
        v.schematic = false;
        v.within_degree = false;
        v.degrees.emplace_back(-1, -1);
        v.witnesses.push_back(tup + " no cofactors of degree <= " + std::to_string(degree_cap));
        continue;
      }
      if (ord > a + b) v.within_degree = false;
      v.degrees.emplace_back(ord, bern);
      v.witnesses.push_back(tup + ": 1 = (" + (*cof)[0].to_string() + ") X^" + std::to_string(a) + " + (" +
                            (*cof)[1].to_string() + ") d^" + std::to_string(b) + ", order " + std::to_string(ord) +
                            (ord > a + b ? " > " : " <= ") + std::to_string(a + b) + ", least Bernstein degree " +
                            std::to_string(bern));
    }
  return v;
}

// Commutative version: 1 in (s_1^a1, ..., s_n^an) + relations, decided by ideal membership.
inline SchematicVerdict schematic_check_commutative(const Ideal& relations, const std::vector<Polynomial>& sets,
                                                   int max_power) {
  SchematicVerdict v;
  std::vector<int> e(sets.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sets.size()) {
      std::vector<Polynomial> g = relations.generators();
      std::string tup;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        g.push_back(sets[k].pow(e[k]));
        tup += (k ? ", " : "(") + sets[k].to_string() + "^" + std::to_string(e[k]);
      }
      tup += ")";
      if (Ideal(relations.context(), g).is_unit()) {
        v.witnesses.push_back(tup + " generates the unit ideal");
      } else {
        v.schematic = false;
        v.witnesses.push_back(tup + " is proper");
      }
      return;
    }
    for (int a = 0; a <= max_power; ++a) {
      e[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return v;
}

}  // namespace gw::torsheaf
