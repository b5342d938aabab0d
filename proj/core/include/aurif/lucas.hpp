#pragma once

// Aurifeuillian factors F_n(x) = C_n(x)^2 - n x D_n(x)^2 for square-free n > 1.
//
// The degree-2d polynomial L_n(x) = C_n(x^2) - s' x sqrt(n) D_n(x^2) has power
// sums that are integers (even k) or integer multiples of s' sqrt(n) (odd k);
// calling both q_k, Newton's identities become
//
//   gamma_k = 1/(2k)   sum_{j<k} (n q_{2k-2j-1} delta_j - q_{2k-2j} gamma_j)
//   delta_k = 1/(2k+1) (gamma_k + sum_{j<k} (q_{2k+1-2j} gamma_j - q_{2k-2j} delta_j))
//
// with gamma_0 = delta_0 = 1. C_n and D_n are palindromic, so only the first
// half of each sequence needs the recurrence.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "aurif/poly.hpp"

namespace aurif {

struct LucasPair {
  std::int64_t n = 0;
  std::int64_t n_prime = 0;
  int s_prime = 1;
  std::size_t d = 0;              // phi(n')/2
  std::vector<mpz_class> gamma;   // gamma[j] multiplies x^(d-j) in C_n
  std::vector<mpz_class> delta;   // delta[j] multiplies x^(d-1-j) in D_n
  std::vector<std::int64_t> q;    // q[k-1] = q_k (empty for oracle-built pairs)

  IntPolynomial c_poly() const;
  IntPolynomial d_poly() const;
};

struct LucasOptions {
  bool use_symmetry = true;
};

/// q_k = (n|k) for odd k; mu(n'/g) phi(g) cos((n-1) k pi/4) for even k,
/// g = gcd(k, n'). The cosine is read from a table, never evaluated.
std::int64_t lucas_q(std::int64_t n, std::int64_t k);

/// Throws NotSquareFree, NTooSmall or NonIntegerStep.
LucasPair algorithm_l(std::int64_t n, LucasOptions options = {});

/// Exact check of F_n = C_n^2 - n x D_n^2.
bool verify_lucas(std::int64_t n);
bool verify_lucas(const LucasPair& pair);

/// (F-, F+) = C_n(x) -/+ sqrt(n x) D_n(x) at x = m^2 n, m > 0 rational.
/// Throws NotAurifeuillianPoint when x/n is not the square of a positive
/// rational.
std::pair<Rational, Rational> aurifeuillian_polys_eval(std::int64_t n, const Rational& x);
std::pair<Rational, Rational> aurifeuillian_polys_eval(const LucasPair& pair, const Rational& x);

}  // namespace aurif
