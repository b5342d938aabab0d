#include "aurif/lucas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/numthy.hpp"

namespace aurif {
namespace {

std::int64_t lucas_q_in(const NumTheoryContext& ctx, std::int64_t k) {
  if (k % 2 == 1) return kronecker(ctx.n, k);
  // cos((n-1) k pi / 4) depends on (n-1)(k/2) mod 4
  static constexpr int kCos[4] = {1, 0, -1, 0};
  const int c = kCos[((ctx.n - 1) % 4) * ((k / 2) % 4) % 4];
  if (c == 0) return 0;
  const std::int64_t g = std::gcd(k, ctx.n_prime);
  return c * moebius(ctx.n_prime / g) * euler_phi(g);
}

void add_scaled(mpz_class& acc, const mpz_class& v, std::int64_t c) {
  if (c > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(c));
  } else if (c < 0) {
    mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

void divide_step(mpz_class& dst, const mpz_class& sum, unsigned long divisor, std::int64_t n, std::size_t k,
                 const char* which) {
  if (mpz_divisible_ui_p(sum.get_mpz_t(), divisor) == 0) {
    throw Error(Errc::NonIntegerStep, std::string(which) + " step for n = " + std::to_string(n) + ", k = " +
                                          std::to_string(k) + " not divisible by " + std::to_string(divisor));
  }
  mpz_divexact_ui(dst.get_mpz_t(), sum.get_mpz_t(), divisor);
}

IntPolynomial from_descending(const std::vector<mpz_class>& desc) {
  return IntPolynomial(std::vector<mpz_class>(desc.rbegin(), desc.rend()));
}

}  // namespace

IntPolynomial LucasPair::c_poly() const { return from_descending(gamma); }
IntPolynomial LucasPair::d_poly() const { return from_descending(delta); }

std::int64_t lucas_q(std::int64_t n, std::int64_t k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be positive");
  return lucas_q_in(make_context(n), k);
}

LucasPair algorithm_l(std::int64_t n, LucasOptions options) {
  const NumTheoryContext ctx = make_context(n);

  LucasPair out;
  out.n = n;
  out.n_prime = ctx.n_prime;
  out.s_prime = ctx.s_prime;
  out.d = static_cast<std::size_t>(ctx.d_lucas);
  const std::size_t d = out.d;

  const std::size_t gamma_direct = options.use_symmetry ? d / 2 : d;
  const std::size_t delta_direct = options.use_symmetry ? (d - 1) / 2 : d - 1;
  const std::size_t q_count = std::max(2 * gamma_direct, 2 * delta_direct + 1);

  out.q.resize(std::max(q_count, d));
  for (std::size_t k = 1; k <= out.q.size(); ++k) out.q[k - 1] = lucas_q_in(ctx, static_cast<std::int64_t>(k));
  auto q = [&](std::size_t k) { return out.q[k - 1]; };

  out.gamma.assign(d + 1, mpz_class(0));
  out.delta.assign(d, mpz_class(0));
  out.gamma[0] = 1;
  out.delta[0] = 1;

  mpz_class acc;
  for (std::size_t k = 1; k <= std::max(gamma_direct, delta_direct); ++k) {
    if (k <= gamma_direct) {
      acc = 0;
      for (std::size_t j = 0; j < k; ++j) {
        add_scaled(acc, out.delta[j], n * q(2 * k - 2 * j - 1));
        add_scaled(acc, out.gamma[j], -q(2 * k - 2 * j));
      }
      divide_step(out.gamma[k], acc, 2 * k, n, k, "gamma");
    }
    if (k <= delta_direct) {
      acc = out.gamma[k];
      for (std::size_t j = 0; j < k; ++j) {
        add_scaled(acc, out.gamma[j], q(2 * k + 1 - 2 * j));
        add_scaled(acc, out.delta[j], -q(2 * k - 2 * j));
      }
      divide_step(out.delta[k], acc, 2 * k + 1, n, k, "delta");
    }
  }

  for (std::size_t k = gamma_direct + 1; k <= d; ++k) out.gamma[k] = out.gamma[d - k];
  for (std::size_t k = delta_direct + 1; k < d; ++k) out.delta[k] = out.delta[d - 1 - k];
  return out;
}

bool verify_lucas(const LucasPair& pair) {
  const IntPolynomial c = pair.c_poly();
  const IntPolynomial dp = pair.d_poly();
  const IntPolynomial nx = IntPolynomial::monomial(pair.n, 1);
  return f_poly(pair.n) == c * c - nx * (dp * dp);
}

bool verify_lucas(std::int64_t n) { return verify_lucas(algorithm_l(n)); }

std::pair<Rational, Rational> aurifeuillian_polys_eval(const LucasPair& pair, const Rational& x) {
  const Rational m2 = x / Rational(pair.n);
  if (sgn(m2) <= 0 || mpz_perfect_square_p(m2.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(m2.get_den_mpz_t()) == 0) {
    throw Error(Errc::NotAurifeuillianPoint,
                "x = " + to_string(x) + " is not of the form m^2 n for n = " + std::to_string(pair.n));
  }
  Rational m(sqrt(m2.get_num()), sqrt(m2.get_den()));
  m.canonicalize();
  const Rational root = Rational(pair.n) * m;  // sqrt(n x)
  const Rational c = eval(pair.c_poly(), x);
  const Rational dv = eval(pair.d_poly(), x);
  Rational minus = c - root * dv;
  Rational plus = c + root * dv;
  return {std::move(minus), std::move(plus)};
}

std::pair<Rational, Rational> aurifeuillian_polys_eval(std::int64_t n, const Rational& x) {
  return aurifeuillian_polys_eval(algorithm_l(n), x);
}

}  // namespace aurif
