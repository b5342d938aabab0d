#include "aurif/gauss.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/numthy.hpp"

namespace aurif {
namespace {

void require_odd_squarefree(std::int64_t n) {
  if (n < 3) throw Error(Errc::NTooSmall, "n must be an odd square-free integer > 1, got " + std::to_string(n));
  if (n % 2 == 0 || !is_squarefree(n)) {
    throw Error(Errc::NotOddSquareFree, "n = " + std::to_string(n) + " is not odd and square-free");
  }
}

// acc += c * v
void add_scaled(mpz_class& acc, const mpz_class& v, std::int64_t c) {
  if (c > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(c));
  } else if (c < 0) {
    mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

IntPolynomial from_descending(const std::vector<mpz_class>& desc) {
  return IntPolynomial(std::vector<mpz_class>(desc.rbegin(), desc.rend()));
}

}  // namespace

IntPolynomial GaussPair::a_poly() const { return from_descending(alpha); }
IntPolynomial GaussPair::b_poly() const { return from_descending(beta); }

std::pair<std::int64_t, std::int64_t> gauss_power_parts(std::int64_t n, std::int64_t k) {
  require_odd_squarefree(n);
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be positive");
  const std::int64_t g = std::gcd(k, n);
  return {moebius(n / g) * euler_phi(g), kronecker(k, n)};
}

GaussPair algorithm_d(std::int64_t n, GaussOptions options) {
  require_odd_squarefree(n);
  const NumTheoryContext ctx = make_context(n);

  GaussPair out;
  out.n = n;
  out.s = ctx.s;
  out.d = static_cast<std::size_t>(*ctx.d_gauss);
  const std::size_t d = out.d;

  // n = 3 is the one case where A_n breaks the symmetry rule.
  const bool symmetric = options.use_symmetry && n > 3;
  const std::size_t direct = symmetric ? std::max<std::size_t>(1, d / 2) : d;

  out.q.resize(d);
  out.r.resize(d);
  for (std::size_t k = 1; k <= d; ++k) {
    std::tie(out.q[k - 1], out.r[k - 1]) = gauss_power_parts(n, static_cast<std::int64_t>(k));
  }

  out.alpha.assign(d + 1, mpz_class(0));
  out.beta.assign(d + 1, mpz_class(0));
  out.alpha[0] = 2;

  const std::int64_t sn = ctx.s * n;
  mpz_class sa, sb;
  for (std::size_t k = 1; k <= direct; ++k) {
    sa = 0;
    sb = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t q = out.q[k - j - 1];
      const std::int64_t r = out.r[k - j - 1];
      add_scaled(sa, out.beta[j], sn * r);
      add_scaled(sa, out.alpha[j], -q);
      add_scaled(sb, out.alpha[j], r);
      add_scaled(sb, out.beta[j], -q);
    }
    const unsigned long two_k = 2 * k;
    if (mpz_divisible_ui_p(sa.get_mpz_t(), two_k) == 0 || mpz_divisible_ui_p(sb.get_mpz_t(), two_k) == 0) {
      throw Error(Errc::NonIntegerStep, "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                            ": inner product not divisible by " + std::to_string(two_k));
    }
    mpz_divexact_ui(out.alpha[k].get_mpz_t(), sa.get_mpz_t(), two_k);
    mpz_divexact_ui(out.beta[k].get_mpz_t(), sb.get_mpz_t(), two_k);
  }

  if (symmetric) {
    // A_n is antipalindromic iff d is odd; B_n/x is antipalindromic iff n is
    // composite and n = 3 (mod 4).
    const bool a_anti = d % 2 == 1;
    const bool b_anti = !is_prime(n) && n % 4 == 3;
    for (std::size_t k = direct + 1; k <= d; ++k) {
      out.alpha[k] = a_anti ? mpz_class(-out.alpha[d - k]) : out.alpha[d - k];
      out.beta[k] = b_anti ? mpz_class(-out.beta[d - k]) : out.beta[d - k];
    }
  }
  return out;
}

bool verify_gauss(const GaussPair& pair) {
  const IntPolynomial a = pair.a_poly();
  const IntPolynomial b = pair.b_poly();
  const IntPolynomial lhs = mpz_class(4) * phi_moebius(pair.n);
  const IntPolynomial rhs = a * a - mpz_class(pair.s * pair.n) * (b * b);
  return lhs == rhs;
}

bool verify_gauss(std::int64_t n) { return verify_gauss(algorithm_d(n)); }

}  // namespace aurif
