#include "aurif/numthy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aurif/error.hpp"

namespace aurif {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) {
    throw Error(Errc::InvalidArgument, std::string(what) + " requires n >= 1, got " + std::to_string(n));
  }
}

// Jacobi symbol for odd k > 0, zero when gcd(m, k) > 1.
int jacobi_odd(std::int64_t m, std::int64_t k) {
  std::int64_t a = m % k;
  if (a < 0) a += k;
  std::int64_t b = k;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = b % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, b);
    if (a % 4 == 3 && b % 4 == 3) result = -result;
    a %= b;
  }
  return b == 1 ? result : 0;
}

}  // namespace

std::vector<PrimePower> factorize(std::int64_t n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (const auto& pe : factorize(n)) {
    if (pe.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

bool is_squarefree(std::int64_t n) {
  for (const auto& pe : factorize(n)) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

int kronecker(std::int64_t m, std::int64_t k) {
  if (k < 1) {
    throw Error(Errc::InvalidArgument, "kronecker requires k >= 1, got " + std::to_string(k));
  }
  if (k % 2 == 1) return jacobi_odd(m, k);
  if (m % 2 == 0) {
    throw Error(Errc::UnsupportedSymbol,
                "(" + std::to_string(m) + "|" + std::to_string(k) + ") with both arguments even");
  }
  const std::int64_t r = ((m % 8) + 8) % 8;
  const int at_two = (r == 1 || r == 7) ? 1 : -1;
  int result = 1;
  while (k % 2 == 0) {
    k /= 2;
    result *= at_two;
  }
  return result * jacobi_odd(m, k);
}

NumTheoryContext make_context(std::int64_t n) {
  if (n < 2) throw Error(Errc::NTooSmall, "n must be at least 2, got " + std::to_string(n));
  if (!is_squarefree(n)) throw Error(Errc::NotSquareFree, "n = " + std::to_string(n) + " is not square-free");

  NumTheoryContext ctx;
  ctx.n = n;
  ctx.n_prime = (n % 4 == 1) ? n : 2 * n;
  ctx.s = (n % 4 == 3) ? -1 : 1;
  ctx.s_prime = (n % 8 == 5) ? -1 : 1;
  ctx.d_lucas = euler_phi(ctx.n_prime) / 2;
  ctx.lambda = euler_phi(2 * n) / 2;
  if (n % 2 == 1) {
    ctx.d_gauss = euler_phi(n) / 2;
    ctx.discriminant = ctx.s * n;
  }
  ctx.squarefree = true;
  return ctx;
}

ClassNumberData class_number_neg(std::int64_t n) {
  if (n < 3) throw Error(Errc::NTooSmall, "class_number_neg requires n >= 3, got " + std::to_string(n));
  if (n % 4 != 3) throw Error(Errc::BadResidueClass, "n = " + std::to_string(n) + " is not 3 mod 4");
  if (!is_squarefree(n)) throw Error(Errc::NotSquareFree, "n = " + std::to_string(n) + " is not square-free");

  ClassNumberData out;
  out.n = n;
  for (std::int64_t j = 1; j < n; ++j) out.sigma += kronecker(j, n) * j;
  out.w = (n == 3) ? 6 : 2;

  // sigma = -(2n/w) h(-n); for n = 3 this reads -1 = -h.
  const std::int64_t scaled = -out.sigma * out.w;
  if (scaled % (2 * n) != 0 || scaled <= 0) {
    throw Error(Errc::InternalInconsistency,
                "character sum " + std::to_string(out.sigma) + " is inconsistent with n = " + std::to_string(n));
  }
  out.h = scaled / (2 * n);
  return out;
}

namespace {

void check_pell_input(std::int64_t n) {
  if (n < 5) throw Error(Errc::NTooSmall, "fundamental_unit requires n > 1, got " + std::to_string(n));
  if (n % 4 != 1) throw Error(Errc::BadResidueClass, "n = " + std::to_string(n) + " is not 1 mod 4");
  if (!is_squarefree(n)) throw Error(Errc::NotSquareFree, "n = " + std::to_string(n) + " is not square-free");
}

}  // namespace

PellUnit fundamental_unit(std::int64_t n, std::int64_t max_steps) {
  check_pell_input(n);

  // Complete quotients (P + sqrt n)/Q of omega = (1 + sqrt n)/2; the first
  // convergent p/q with |N(p - q omega)| = 1 yields the fundamental unit.
  const mpz_class N = n;
  const mpz_class r = sqrt(N);
  const mpz_class c = (N - 1) / 4;
  mpz_class P = 1, Q = 2;
  mpz_class p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;

  for (std::int64_t step = 0; step < max_steps; ++step) {
    const mpz_class a = (P + r) / Q;
    const mpz_class p = a * p_prev + p_prev2;
    const mpz_class q = a * q_prev + q_prev2;
    const mpz_class norm = p * p - p * q - c * q * q;
    if (norm == 1 || norm == -1) {
      PellUnit out{n, 2 * p - q, q};
      if (norm == -1) {
        // Norm -1 unit: its square is the smallest unit of norm +1.
        mpz_class u2 = (out.u * out.u + N * out.v * out.v) / 2;
        mpz_class v2 = out.u * out.v;
        out.u = std::move(u2);
        out.v = std::move(v2);
      }
      if (out.u * out.u - N * out.v * out.v != 4) {
        throw Error(Errc::InternalInconsistency, "continued fraction produced a non-solution for n = " + std::to_string(n));
      }
      return out;
    }
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    P = a * Q - P;
    Q = (N - P * P) / Q;
  }
  throw Error(Errc::SearchCapExceeded,
              "no unit found within " + std::to_string(max_steps) + " partial quotients for n = " + std::to_string(n));
}

PellUnit fundamental_unit_by_search(std::int64_t n, std::int64_t max_v) {
  check_pell_input(n);
  const mpz_class N = n;
  for (std::int64_t v = 1; v <= max_v; ++v) {
    const mpz_class V = v;
    const mpz_class t = 4 + N * V * V;
    if (mpz_perfect_square_p(t.get_mpz_t()) != 0) return {n, sqrt(t), V};
  }
  throw Error(Errc::SearchCapExceeded,
              "no solution with v <= " + std::to_string(max_v) + " for n = " + std::to_string(n));
}

}  // namespace aurif
