#pragma once

// Dense univariate polynomials over Z with GMP coefficients.
//
// Coefficients are stored in ascending order of powers and are normalized so
// that the highest stored coefficient is nonzero; the zero polynomial has no
// coefficients at all. Values are immutable once built.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace aurif {

using Rational = mpq_class;

/// Parses "p" or "p/q" into a canonical rational; throws InvalidArgument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  static IntPolynomial from_ascending(std::initializer_list<long> coeffs);
  static IntPolynomial from_descending(std::initializer_list<long> coeffs);
  static IntPolynomial constant(const mpz_class& c);
  /// c * x^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  mpz_class coeff(std::size_t k) const;
  const mpz_class& leading() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

/// Quotient of an exact division; throws InexactDivision on any remainder.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// P(x^k) for k >= 1.
IntPolynomial compose_power(const IntPolynomial& p, std::size_t k);

/// P(-x).
IntPolynomial negate_arg(const IntPolynomial& p);

/// Coefficients reversed about the degree: x^deg P(1/x).
IntPolynomial reversed(const IntPolynomial& p);

/// Horner evaluation.
mpz_class eval(const IntPolynomial& p, const mpz_class& x);
Rational eval(const IntPolynomial& p, const Rational& x);

enum class Symmetry { Palindromic, Antipalindromic, Neither };

/// Classifies coeffs[k] against coeffs[d-k]. The zero polynomial counts as
/// palindromic.
Symmetry symmetry_class(const IntPolynomial& p);
std::string_view to_string(Symmetry s);

/// Descending human form, e.g. "x^4 + 8*x^3 + 13*x^2 + 8*x + 1".
std::string to_string(const IntPolynomial& p);

/// {"order":"ascending","coeffs":["1","-1",...]} with decimal strings.
std::string to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(std::string_view json);

}  // namespace aurif
