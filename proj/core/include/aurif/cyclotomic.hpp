#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "aurif/poly.hpp"

namespace aurif {

/// Phi_n from prod_{d|n} (x^d - 1)^{mu(n/d)}: numerator and denominator
/// products are formed separately and divided once, exactly.
IntPolynomial phi_moebius(std::int64_t n);

/// Phi_n for square-free n by Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x), one prime
/// at a time. Throws NotSquareFree.
IntPolynomial phi_recursive(std::int64_t n);

/// Sum of the k-th powers of the primitive n-th roots of unity,
/// mu(n/g) phi(n) / phi(n/g) with g = gcd(k, n).
std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k);

/// Classical name for ramanujan_sum: c_n(k).
inline std::int64_t ramanujan_c(std::int64_t n, std::int64_t k) { return ramanujan_sum(n, k); }

/// Monic degree-d polynomial whose roots have power sums p[0] = p_1, ...,
/// p[d-1] = p_d, from k a_k = -sum_{j<k} p_{k-j} a_j. Throws
/// NonIntegerCoefficient when a division by k is inexact.
IntPolynomial newton_from_power_sums(std::span<const mpz_class> power_sums, std::size_t degree);

/// Power sums p_1..p_count of the roots of a monic polynomial (Newton's
/// identities solved for p_k instead of a_k).
std::vector<mpz_class> power_sums_of(const IntPolynomial& monic, std::size_t count);

/// F_n(x): Phi_n(s x) for odd n, (-1)^phi(n/2) Phi_{n/2}(-x^2) for even n.
IntPolynomial f_poly(std::int64_t n);

/// Upper bounds on |Phi_n(x)| and |F_n(x)| for |x| >= R > 1. Throw BadRadius.
double phi_bound(std::int64_t n, double radius);
double fn_bound(std::int64_t n, double radius);

}  // namespace aurif
