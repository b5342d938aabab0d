#include "aurif/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aurif/error.hpp"
#include "aurif/numthy.hpp"

namespace aurif {
namespace {

IntPolynomial x_pow_minus_one(std::size_t d) {
  std::vector<mpz_class> c(d + 1);
  c[0] = -1;
  c[d] = 1;
  return IntPolynomial(std::move(c));
}

void require_squarefree(std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive, got " + std::to_string(n));
  if (!is_squarefree(n)) throw Error(Errc::NotSquareFree, "n = " + std::to_string(n) + " is not square-free");
}

void require_radius(double radius) {
  if (!(radius > 1.0) || !std::isfinite(radius)) {
    throw Error(Errc::BadRadius, "radius must exceed 1, got " + std::to_string(radius));
  }
}

}  // namespace

IntPolynomial phi_moebius(std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "phi_moebius requires n >= 1, got " + std::to_string(n));
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (std::int64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) {
      num = num * x_pow_minus_one(static_cast<std::size_t>(d));
    } else if (mu == -1) {
      den = den * x_pow_minus_one(static_cast<std::size_t>(d));
    }
  }
  return exact_div(num, den);
}

IntPolynomial phi_recursive(std::int64_t n) {
  require_squarefree(n);
  IntPolynomial phi = x_pow_minus_one(1);
  for (const auto& pe : factorize(n)) {
    phi = exact_div(compose_power(phi, static_cast<std::size_t>(pe.prime)), phi);
  }
  return phi;
}

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw Error(Errc::InvalidArgument, "ramanujan_sum requires n, k >= 1");
  const std::int64_t g = std::gcd(k, n);
  return moebius(n / g) * (euler_phi(n) / euler_phi(n / g));
}

IntPolynomial newton_from_power_sums(std::span<const mpz_class> power_sums, std::size_t degree) {
  if (power_sums.size() < degree) {
    throw Error(Errc::InvalidArgument, "need " + std::to_string(degree) + " power sums, got " +
                                           std::to_string(power_sums.size()));
  }
  // a[j] multiplies x^(d-j)
  std::vector<mpz_class> a(degree + 1);
  a[0] = 1;
  mpz_class acc;
  for (std::size_t k = 1; k <= degree; ++k) {
    acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      mpz_addmul(acc.get_mpz_t(), power_sums[k - j - 1].get_mpz_t(), a[j].get_mpz_t());
    }
    acc = -acc;
    if (mpz_divisible_ui_p(acc.get_mpz_t(), k) == 0) {
      throw Error(Errc::NonIntegerCoefficient, "k a_k = " + acc.get_str() + " is not divisible by k = " +
                                                   std::to_string(k));
    }
    mpz_divexact_ui(a[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  std::reverse(a.begin(), a.end());
  return IntPolynomial(std::move(a));
}

std::vector<mpz_class> power_sums_of(const IntPolynomial& monic, std::size_t count) {
  if (monic.is_zero() || monic.leading() != 1) {
    throw Error(Errc::InvalidArgument, "power_sums_of requires a monic polynomial");
  }
  const auto d = static_cast<std::size_t>(monic.degree());
  auto a = [&](std::size_t j) -> mpz_class { return j <= d ? monic.coeff(d - j) : mpz_class(0); };

  std::vector<mpz_class> p(count);
  for (std::size_t k = 1; k <= count; ++k) {
    mpz_class v = -mpz_class(static_cast<unsigned long>(k)) * a(k);
    for (std::size_t j = 1; j < k; ++j) v -= a(j) * p[k - j - 1];
    p[k - 1] = std::move(v);
  }
  return p;
}

IntPolynomial f_poly(std::int64_t n) {
  const NumTheoryContext ctx = make_context(n);
  if (n % 2 == 1) {
    IntPolynomial phi = phi_moebius(n);
    return ctx.s == -1 ? negate_arg(phi) : phi;
  }
  const std::int64_t half = n / 2;
  IntPolynomial f = compose_power(negate_arg(phi_moebius(half)), 2);
  return euler_phi(half) % 2 == 1 ? -f : f;
}

double phi_bound(std::int64_t n, double radius) {
  require_radius(radius);
  return std::pow(radius, static_cast<double>(euler_phi(n))) * std::exp(1.0 / (radius - 1.0));
}

double fn_bound(std::int64_t n, double radius) {
  require_radius(radius);
  return std::pow(radius, static_cast<double>(euler_phi(2 * n))) * std::exp(1.0 / (radius - 1.0));
}

}  // namespace aurif
