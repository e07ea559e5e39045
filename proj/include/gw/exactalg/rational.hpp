#pragma once

#include <gmpxx.h>

#include <string>

namespace gw {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// n (n-1) ... (n-k+1)
inline Rational falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return Rational(r);
}

}  // namespace gw
