#pragma once

// Elementary arithmetic functions on machine integers and the per-n context
// (n', s, s', degrees) shared by the Gauss and Lucas constructions.
//
// Factorization is plain trial division; every n handled here is small.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace aurif {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 1 in ascending prime order (empty for n = 1).
std::vector<PrimePower> factorize(std::int64_t n);

/// Positive divisors of n >= 1 in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_squarefree(std::int64_t n);
bool is_prime(std::int64_t n);

/// Jacobi symbol (m|k) with the convention (m|k) = 0 whenever gcd(m,k) > 1.
///
/// k must be positive. An even k is accepted only for odd m, in which case the
/// Kronecker value at 2 is used; (even|even) throws UnsupportedSymbol.
int kronecker(std::int64_t m, std::int64_t k);

struct NumTheoryContext {
  std::int64_t n = 0;
  std::int64_t n_prime = 0;  // n if n = 1 (mod 4), else 2n
  int s = 1;                 // -1 iff n = 3 (mod 4)
  int s_prime = 1;           // -1 iff n = 5 (mod 8)
  std::optional<std::int64_t> d_gauss;       // phi(n)/2, odd n only
  std::int64_t d_lucas = 0;                  // phi(n')/2
  std::int64_t lambda = 0;                   // phi(2n)/2
  std::optional<std::int64_t> discriminant;  // s*n, odd n only
  bool squarefree = true;
};

/// Throws NTooSmall for n < 2 and NotSquareFree when n has a square factor.
NumTheoryContext make_context(std::int64_t n);

struct ClassNumberData {
  std::int64_t n = 0;
  std::int64_t sigma = 0;  // sum_{j<n} (j|n) j
  std::int64_t h = 0;      // class number h(-n)
  int w = 2;               // roots of unity in Q(sqrt(-n))
};

/// Class number of Q(sqrt(-n)) for square-free n = 3 (mod 4), through the
/// character sum sigma = -n h(-n) (n > 3). n = 3 gives w = 6 and h = 1.
ClassNumberData class_number_neg(std::int64_t n);

/// Minimal solution (u, v), v >= 1, of u^2 - n v^2 = 4.
struct PellUnit {
  std::int64_t n = 0;
  mpz_class u;
  mpz_class v;
};

/// Continued-fraction expansion of (1 + sqrt n)/2 for square-free n = 1 (mod 4).
/// `max_steps` bounds the number of partial quotients examined.
PellUnit fundamental_unit(std::int64_t n, std::int64_t max_steps = 1'000'000);

/// Ascending search over v = 1, 2, ..., max_v. Slow but obviously minimal.
PellUnit fundamental_unit_by_search(std::int64_t n, std::int64_t max_v = 1'000'000);

}  // namespace aurif
