#pragma once

// Integer factors of m^(2n) n^n -/+ 1 (and of p^(2n) n^n -/+ q^(2n) for
// m = p/q) from the Aurifeuillian splitting F_n(x) = F-(x) F+(x) at x = m^2 n,
// where F-/+ = C_n(x) -/+ sqrt(n x) D_n(x). The sign of the target is "-" iff
// n = 1 (mod 4).
//
// For integer m >= 1 the smaller factor is also
//
//   F- = floor(Fhat + 1/2),
//   Fhat = sqrt(F_n(x)) exp(-(1/m) sum_{j<lambda} (n|2j+1) / ((2j+1) x^j)),
//
// with |Fhat - F-| < 1/2 and lambda = phi(2n)/2.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "aurif/bigfloat.hpp"
#include "aurif/poly.hpp"

namespace aurif {

struct AurifeuilleResult {
  std::int64_t n = 0;
  mpz_class m_num = 1;
  mpz_class m_den = 1;
  Rational x;
  Rational F_value;
  Rational F_minus;
  Rational F_plus;
  /// q^(2 lambda) F-/+ for m = p/q; equal to F-/+ when m is an integer.
  mpz_class integer_minus;
  mpz_class integer_plus;
  std::optional<BigFloat> hat_F;
  std::optional<BigFloat> residual;  // |hat_F - F_minus|
};

/// bitlength(F_n(m^2 n))/2 + 64.
mpfr_prec_t hat_f_min_precision(std::int64_t n, const mpz_class& m);

/// Throws PrecisionTooLow below hat_f_min_precision.
BigFloat hat_f(std::int64_t n, const mpz_class& m, mpfr_prec_t precision_bits);
BigFloat hat_f(std::int64_t n, const mpz_class& m);

/// F- by rounding Fhat, F+ by exact division. Throws RoundingFailed.
AurifeuilleResult factor_by_rounding(std::int64_t n, const mpz_class& m,
                                     std::optional<mpfr_prec_t> precision_bits = std::nullopt);

/// F-/+ from C_n and D_n evaluated at x = m^2 n, m > 0 rational.
AurifeuilleResult factor_by_polynomials(std::int64_t n, const Rational& m);

enum class FactorKind { Prime, ProbablePrime, Composite };

struct PrimeFactor {
  mpz_class value;
  unsigned exponent = 1;
  FactorKind kind = FactorKind::Prime;
};

struct FactorList {
  mpz_class target;                   // p^(2n) n^n -/+ q^(2n)
  char sign = '+';
  std::vector<PrimeFactor> factors;   // ascending; product is |target|
  bool complete = true;               // no Composite entries
  std::vector<mpz_class> pieces;      // algebraic pieces before trial division
  AurifeuilleResult aurifeuillian;
};

/// Splits the target into cyclotomic values Phi_d(x) (d | n for "-", d | 2n
/// with d not dividing n for "+"), replaces the Phi piece equal to F_n(x) by
/// its two Aurifeuillian factors, then trial-divides each piece up to
/// trial_limit. Cofactors above trial_limit^2 are tested for probable
/// primality.
FactorList full_factorization(std::int64_t n, const Rational& m, std::uint64_t trial_limit = 1'000'000);

/// (F+/F-, exp(2/m)).
std::pair<double, double> ratio_estimate(std::int64_t n, const Rational& m);

}  // namespace aurif
