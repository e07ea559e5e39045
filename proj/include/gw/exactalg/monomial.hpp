#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace gw {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponents mono_div(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// All exponent vectors in n variables of total degree exactly d, lexicographically descending.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline std::vector<Exponents> monomials_up_to(std::size_t n, int d) {
  std::vector<Exponents> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

enum class OrderKind { Lex, GrLex, GRevLex, Block };

// Block orders compare the first `block` variables by grevlex, then the rest by grevlex;
// any monomial involving the first block beats every monomial free of it.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  int block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grlex() { return {OrderKind::GrLex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GRevLex, 0}; }
  static MonomialOrder elimination(int k) { return {OrderKind::Block, k}; }

  bool operator==(const MonomialOrder&) const = default;
  bool operator<(const MonomialOrder& o) const {
    return kind != o.kind ? kind < o.kind : block < o.block;
  }

  // Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Exponents& a, const Exponents& b) const {
    switch (kind) {
      case OrderKind::Lex:
        return lex_cmp(a, b, 0, a.size());
      case OrderKind::GrLex: {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
        return lex_cmp(a, b, 0, a.size());
      }
      case OrderKind::GRevLex:
        return grevlex_cmp(a, b, 0, a.size());
      case OrderKind::Block: {
        std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(block), a.size());
        int c = grevlex_cmp(a, b, 0, k);
        if (c != 0) return c;
        return grevlex_cmp(a, b, k, a.size());
      }
    }
    return 0;
  }

  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind) {
      case OrderKind::Lex: return "lex";
      case OrderKind::GrLex: return "grlex";
      case OrderKind::GRevLex: return "grevlex";
      case OrderKind::Block: return "block" + std::to_string(block);
    }
    return "?";
  }

 private:
  static int lex_cmp(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static int grevlex_cmp(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
};

}  // namespace gw
