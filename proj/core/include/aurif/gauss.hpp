#pragma once

// Dirichlet's algorithm for the polynomials A_n, B_n with
//
//   4 Phi_n(x) = A_n(x)^2 - s n B_n(x)^2,   s = (-1)^((n-1)/2),
//
// for odd square-free n > 1. Writing G_n for the factor of Phi_n over the
// residues, 2 G_n = A_n - sqrt(sn) B_n and twice the k-th power sum of its
// roots is q_k + r_k sqrt(sn) with integers
//
//   q_k = mu(n/g) phi(g),  r_k = (k|n),  g = gcd(k, n).
//
// Newton's identities then split into two coupled integer recurrences:
//
//   alpha_k = 1/(2k) sum_{j<k} (s n r_{k-j} beta_j - q_{k-j} alpha_j)
//   beta_k  = 1/(2k) sum_{j<k} (r_{k-j} alpha_j - q_{k-j} beta_j)
//
// starting from alpha_0 = 2, beta_0 = 0. Each division by 2k must be exact.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "aurif/poly.hpp"

namespace aurif {

struct GaussPair {
  std::int64_t n = 0;
  int s = 1;
  std::size_t d = 0;              // phi(n)/2
  std::vector<mpz_class> alpha;   // alpha[j] multiplies x^(d-j) in A_n
  std::vector<mpz_class> beta;    // beta[j] multiplies x^(d-j) in B_n
  std::vector<std::int64_t> q;    // q[k-1] = q_k, k = 1..d (empty for oracle-built pairs)
  std::vector<std::int64_t> r;    // r[k-1] = r_k

  IntPolynomial a_poly() const;
  IntPolynomial b_poly() const;
};

struct GaussOptions {
  /// Fill alpha_k, beta_k for 2k > d from the (anti)symmetry of A_n and B_n/x.
  bool use_symmetry = true;
};

/// (q_k, r_k) with 2 p_k = q_k + r_k sqrt(sn).
std::pair<std::int64_t, std::int64_t> gauss_power_parts(std::int64_t n, std::int64_t k);

/// Throws NotOddSquareFree, NTooSmall (n < 3) or NonIntegerStep.
GaussPair algorithm_d(std::int64_t n, GaussOptions options = {});

/// Exact check of 4 Phi_n = A_n^2 - s n B_n^2.
bool verify_gauss(std::int64_t n);
bool verify_gauss(const GaussPair& pair);

}  // namespace aurif
