#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace injwords {

// All counting is exact. Int is an arbitrary-precision signed integer,
// Rational its quotient field (used for inner products before
// integrality is established).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n*(n-1)*...*(n-k+1); zero when k > n, one when k == 0.
inline Int falling_factorial(int n, int k) {
  if (k < 0) return 0;
  Int f = 1;
  for (int i = 0; i < k; ++i) f *= (n - i);
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;  // exact: b is C(n-k+i, i) after this step
  }
  return b;
}

inline Int int_pow(const Int& base, int exp) {
  Int p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

}  // namespace injwords
