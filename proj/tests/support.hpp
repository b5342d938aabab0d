#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// Each one is deliberately naive and shares no code with the library routes it
// checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "aurif/poly.hpp"

namespace aurif::testing {

/// Legendre symbol (a|p) for an odd prime p by listing the squares mod p.
inline int legendre_by_residues(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t t = 1; t < p; ++t) squares.insert(t * t % p);
  return squares.count(r) != 0 ? 1 : -1;
}

/// Jacobi symbol (a|k), k odd, as the product of Legendre symbols over the
/// prime factors of k found by trial division.
inline int jacobi_by_residues(std::int64_t a, std::int64_t k) {
  int out = 1;
  for (std::int64_t p = 3; k > 1; p += 2) {
    while (k % p == 0) {
      out *= legendre_by_residues(a, p);
      k /= p;
    }
  }
  return out;
}

/// sum over j coprime to n of cos(2 pi j k / n), rounded.
inline std::int64_t ramanujan_by_roots(std::int64_t n, std::int64_t k) {
  long double sum = 0;
  for (std::int64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    sum += std::cos(2 * std::numbers::pi_v<long double> * static_cast<long double>(j * k % n) /
                    static_cast<long double>(n));
  }
  return std::llround(sum);
}

/// Number of reduced forms (a, b, c) with b^2 - 4ac = -n.
inline std::int64_t class_number_by_forms(std::int64_t n) {
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      ++h;
    }
  }
  return h;
}

/// Horner evaluation of an integer polynomial at a complex point.
inline std::complex<long double> eval_complex(const IntPolynomial& p, std::complex<long double> x) {
  std::complex<long double> acc = 0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

}  // namespace aurif::testing
