#pragma once

// Truncated power series with exact rational coefficients, used as an
// independent route to A_n ... D_n through their generating functions.
//
// cosh and sinh of sqrt(t) * f / 2 are expanded with t carried as a rational
// scalar, so only even powers of the square root ever occur:
//
//   cosh(sqrt(t) f/2)           = sum_k t^k f^(2k)   / (4^k (2k)!)
//   sinh(sqrt(t) f/2) / sqrt(t) = sum_k t^k f^(2k+1) / (2^(2k+1) (2k+1)!)
//
// A negative t therefore yields cos and sin/sqrt(|t|) without special cases.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "aurif/gauss.hpp"
#include "aurif/lucas.hpp"
#include "aurif/poly.hpp"

namespace aurif {

/// Coefficients c_0..c_K of a series known exactly through order K.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order);
  explicit RationalSeries(std::vector<mpq_class> coeffs);

  /// P truncated (or zero-padded) to the given order.
  static RationalSeries from_polynomial(const IntPolynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const mpq_class> coeffs() const noexcept { return coeffs_; }
  const mpq_class& operator[](std::size_t k) const { return coeffs_.at(k); }
  mpq_class& operator[](std::size_t k) { return coeffs_.at(k); }

  RationalSeries truncated(std::size_t order) const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  /// Result order is the smaller of the two operand orders.
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const mpq_class& c, const RationalSeries& a);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

/// Value of the truncated series at x (a polynomial evaluation).
Rational eval(const RationalSeries& s, const Rational& x);

/// f_n(x) = sum_j (j|n) x^j / j, odd square-free n > 1.
RationalSeries f_series(std::int64_t n, std::size_t order);

/// g_n(x) = sum_j (n|2j+1) x^(2j+1) / (2j+1), square-free n > 1.
RationalSeries g_series(std::int64_t n, std::size_t order);

/// Square root of a series with constant term 1 (BadConstantTerm otherwise).
RationalSeries series_sqrt(const RationalSeries& p, std::size_t order);

/// exp of a series with zero constant term.
RationalSeries series_exp(const RationalSeries& f);

enum class HyperbolicMode { Cosh, SinhOverRoot };

/// cosh(sqrt(t) f/2) or sinh(sqrt(t) f/2)/sqrt(t) through `order`; f must have
/// zero constant term.
RationalSeries series_exp_like(const RationalSeries& f, HyperbolicMode mode, const Rational& t, std::size_t order);

/// A_n, B_n from 2 sqrt(Phi_n) cosh(sqrt(sn) f_n / 2) and
/// 2 sqrt(Phi_n/(sn)) sinh(sqrt(sn) f_n / 2), odd square-free n > 3. The
/// expansions fix A_n and B_n only up to sign; both are normalized so that
/// A_n/2 and B_n are monic. Throws NonIntegralOracle.
GaussPair gauss_via_series(std::int64_t n);

/// C_n, D_n from sqrt(F_n(x)) cosh(sqrt(n) g_n(sqrt x)) and
/// sqrt(F_n(x)/(n x)) sinh(sqrt(n) g_n(sqrt x)), expanded as series in
/// y = sqrt(x). Throws NonIntegralOracle.
LucasPair lucas_via_series(std::int64_t n);

/// Numeric check of L~_n(x0)/L_n(x0) = exp(2 s' sqrt(n) g_n(x0)) with g_n
/// truncated at `order`; |x0| < 1.
bool check_ratio_identity(std::int64_t n, const Rational& x0, std::size_t order, double tol);

}  // namespace aurif
