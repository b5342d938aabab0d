#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace aurif {

/// Owning MPFR value with a fixed precision chosen at construction. Results of
/// binary operations take the larger precision of the operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128);
  BigFloat(const mpz_class& z, mpfr_prec_t bits);
  BigFloat(const mpq_class& q, mpfr_prec_t bits);
  BigFloat(double d, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }

  double to_double() const;
  /// floor(x + 1/2)
  mpz_class round_half_up() const;
  /// Fixed-point decimal with `digits` after the point, truncated toward -inf.
  std::string to_fixed(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat abs(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

}  // namespace aurif
