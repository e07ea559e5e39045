#pragma once

// Independent reference computations for the test suite. Nothing here calls the Groebner
// engine or the library's sparse elimination; everything reduces to dense rational
// Gaussian elimination over explicit monomial bases.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gw/exactalg/polynomial.hpp"

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;

// Solve A x = b (A is rows x cols); returns one solution or nullopt.
inline std::optional<std::vector<Q>> dense_solve(Matrix A, std::vector<Q> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Q inv = 1 / A[r][c];
    for (std::size_t k = c; k < cols; ++k) A[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Q f = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
      b[i] -= f * b[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Q> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

inline std::size_t dense_rank(Matrix A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (A[i][c] == 0) continue;
      Q f = A[i][c] / A[r][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<gw::Exponents> all_monomials(std::size_t n, int maxdeg) {
  return gw::monomials_up_to(n, maxdeg);
}

// Columns are the polynomials; rows are indexed by every monomial that occurs.
inline Matrix columns_matrix(const std::vector<gw::Polynomial>& cols, std::map<gw::Exponents, std::size_t>& index) {
  for (const auto& p : cols)
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, i] : index) i = k++;
  Matrix A(index.size(), std::vector<Q>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, c] : cols[j].terms()) A[index.at(e)][j] = c;
  return A;
}

// f = sum c_i g_i with every cofactor of degree <= D (polynomial ring, no relations).
inline bool member_with_cofactors(const gw::Polynomial& f, const std::vector<gw::Polynomial>& gens, int D) {
  const auto& ctx = f.context();
  std::vector<gw::Polynomial> cols;
  for (const auto& g : gens)
    for (const auto& m : all_monomials(ctx->size(), D)) cols.push_back(gw::Polynomial::monomial(ctx, m) * g);
  std::vector<gw::Polynomial> with_f = cols;
  with_f.push_back(f);
  std::map<gw::Exponents, std::size_t> index;
  Matrix A = columns_matrix(with_f, index);
  std::vector<Q> b(index.size());
  for (auto& row : A) row.pop_back();
  for (const auto& [e, c] : f.terms()) b[index.at(e)] = c;
  return dense_solve(A, b).has_value();
}

// f^k in (gens) for some k <= K, with cofactors of degree <= D.
inline bool radical_member_bounded(const gw::Polynomial& f, const std::vector<gw::Polynomial>& gens, int K, int D) {
  gw::Polynomial p(f.context(), 1);
  for (int k = 1; k <= K; ++k) {
    p = p * f;
    if (member_with_cofactors(p, gens, D)) return true;
  }
  return false;
}

// Small deterministic generator; std::mt19937 output is fixed by the standard.
struct Sampler {
  std::mt19937 rng;
  explicit Sampler(std::uint32_t seed) : rng(seed) {}
  int range(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); }
  gw::Polynomial polynomial(const gw::ContextPtr& ctx, int maxdeg, int terms, int coeff = 5) {
    gw::Polynomial p(ctx);
    for (int t = 0; t < terms; ++t) {
      gw::Exponents e(ctx->size(), 0);
      int d = range(0, maxdeg);
      for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(range(0, static_cast<int>(ctx->size()) - 1))]++;
      int num = range(-coeff, coeff);
      int den = range(1, 3);
      Q q(num, den);
      q.canonicalize();
      p.add_term(e, q);
    }
    return p;
  }
};

}  // namespace oracle
