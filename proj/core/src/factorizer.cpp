#include "aurif/factorizer.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/lucas.hpp"
#include "aurif/numthy.hpp"

namespace aurif {
namespace {

void require_positive(const mpz_class& m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be a positive integer, got " + m.get_str());
}

mpz_class integer_x(std::int64_t n, const mpz_class& m) { return m * m * n; }

mpz_class f_value_int(std::int64_t n, const mpz_class& m) { return eval(f_poly(n), integer_x(n, m)); }

// sum_{d} c_d P^d Q^(deg - d)
mpz_class homogeneous_value(const IntPolynomial& p, const mpz_class& num, const mpz_class& den) {
  const long deg = p.degree();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  const auto c = p.coeffs();
  // Horner in num with the matching power of den attached to each coefficient.
  for (long k = deg; k >= 0; --k) {
    acc = acc * num + c[static_cast<std::size_t>(k)] * den_pow;
    den_pow *= den;
  }
  return acc;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

mpfr_prec_t hat_f_min_precision(std::int64_t n, const mpz_class& m) {
  require_positive(m);
  const mpz_class f = f_value_int(n, m);
  return static_cast<mpfr_prec_t>(mpz_sizeinbase(f.get_mpz_t(), 2) / 2 + 64);
}

BigFloat hat_f(std::int64_t n, const mpz_class& m, mpfr_prec_t precision_bits) {
  require_positive(m);
  const NumTheoryContext ctx = make_context(n);
  const mpz_class x = integer_x(n, m);
  const mpz_class f = eval(f_poly(n), x);
  const auto needed = static_cast<mpfr_prec_t>(mpz_sizeinbase(f.get_mpz_t(), 2) / 2 + 64);
  if (precision_bits < needed) {
    throw Error(Errc::PrecisionTooLow, std::to_string(precision_bits) + " bits requested, at least " +
                                           std::to_string(needed) + " needed");
  }

  Rational sum = 0;
  mpz_class x_pow = 1;
  for (std::int64_t j = 0; j < ctx.lambda; ++j) {
    const int chi = kronecker(n, 2 * j + 1);
    if (chi != 0) sum += Rational(mpz_class(chi), mpz_class(x_pow * (2 * j + 1)));
    x_pow *= x;
  }
  sum.canonicalize();
  const Rational exponent = -sum / Rational(m);

  return sqrt(BigFloat(f, precision_bits)) * exp(BigFloat(exponent, precision_bits));
}

BigFloat hat_f(std::int64_t n, const mpz_class& m) { return hat_f(n, m, hat_f_min_precision(n, m)); }

AurifeuilleResult factor_by_rounding(std::int64_t n, const mpz_class& m, std::optional<mpfr_prec_t> precision_bits) {
  require_positive(m);
  const BigFloat hat = precision_bits ? hat_f(n, m, *precision_bits) : hat_f(n, m);

  AurifeuilleResult out;
  out.n = n;
  out.m_num = m;
  out.m_den = 1;
  out.x = integer_x(n, m);
  const mpz_class f = f_value_int(n, m);
  out.F_value = f;

  const mpz_class minus = hat.round_half_up();
  if (minus < 1 || mpz_divisible_p(f.get_mpz_t(), minus.get_mpz_t()) == 0) {
    throw Error(Errc::RoundingFailed, "rounded value " + minus.get_str() + " does not divide F_" + std::to_string(n) +
                                          "(" + out.x.get_str() + ") = " + f.get_str());
  }
  mpz_class plus;
  mpz_divexact(plus.get_mpz_t(), f.get_mpz_t(), minus.get_mpz_t());
  out.F_minus = minus;
  out.F_plus = plus;
  out.integer_minus = minus;
  out.integer_plus = plus;
  out.residual = abs(hat - BigFloat(minus, hat.precision()));
  out.hat_F = hat;
  return out;
}

AurifeuilleResult factor_by_polynomials(std::int64_t n, const Rational& m) {
  if (sgn(m) <= 0) throw Error(Errc::InvalidArgument, "m must be positive, got " + to_string(m));
  const LucasPair pair = algorithm_l(n);

  AurifeuilleResult out;
  out.n = n;
  out.m_num = m.get_num();
  out.m_den = m.get_den();
  out.x = m * m * n;
  out.F_value = eval(f_poly(n), out.x);
  std::tie(out.F_minus, out.F_plus) = aurifeuillian_polys_eval(pair, out.x);

  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), out.m_den.get_mpz_t(), 2 * pair.d);
  const Rational im = out.F_minus * scale;
  const Rational ip = out.F_plus * scale;
  if (im.get_den() != 1 || ip.get_den() != 1) {
    throw Error(Errc::InternalInconsistency, "cleared Aurifeuillian factors are not integers");
  }
  out.integer_minus = im.get_num();
  out.integer_plus = ip.get_num();
  return out;
}

FactorList full_factorization(std::int64_t n, const Rational& m, std::uint64_t trial_limit) {
  if (trial_limit < 2) throw Error(Errc::InvalidArgument, "trial limit must be at least 2");
  FactorList out;
  out.aurifeuillian = factor_by_polynomials(n, m);
  const AurifeuilleResult& aur = out.aurifeuillian;

  const bool minus = n % 4 == 1;
  out.sign = minus ? '-' : '+';
  const mpz_class p = aur.m_num;
  const mpz_class q = aur.m_den;
  const mpz_class num = p * p * n;
  const mpz_class den = q * q;

  mpz_class num_n, den_n;
  mpz_pow_ui(num_n.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den_n.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  out.target = minus ? mpz_class(num_n - den_n) : mpz_class(num_n + den_n);

  // x^n - 1 = prod_{d | n} Phi_d;  x^n + 1 = prod_{d | 2n, d not | n} Phi_d.
  const std::int64_t special = minus ? n : 2 * n;
  for (std::int64_t d : divisors(minus ? n : 2 * n)) {
    if (!minus && n % d == 0) continue;
    if (d == special) {
      out.pieces.push_back(aur.integer_minus);
      out.pieces.push_back(aur.integer_plus);
    } else {
      out.pieces.push_back(homogeneous_value(phi_moebius(d), num, den));
    }
  }

  mpz_class check = 1;
  for (const auto& piece : out.pieces) check *= piece;
  if (check != out.target) {
    throw Error(Errc::InternalInconsistency, "algebraic pieces do not multiply to the target for n = " +
                                                 std::to_string(n) + ", m = " + to_string(m));
  }

  const std::vector<std::uint32_t> primes = primes_up_to(trial_limit);
  const mpz_class limit_sq = mpz_class(static_cast<unsigned long>(trial_limit)) * static_cast<unsigned long>(trial_limit);
  std::map<mpz_class, PrimeFactor> merged;
  auto add = [&](const mpz_class& v, unsigned e, FactorKind kind) {
    auto [it, inserted] = merged.try_emplace(v, PrimeFactor{v, 0, kind});
    it->second.exponent += e;
  };

  for (const auto& piece : out.pieces) {
    mpz_class r = abs(piece);
    if (r == 0) throw Error(Errc::InternalInconsistency, "zero algebraic piece");
    for (std::uint32_t pr : primes) {
      if (r == 1) break;
      if (mpz_class(pr) * pr > r) break;
      unsigned e = 0;
      while (mpz_divisible_ui_p(r.get_mpz_t(), pr) != 0) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), pr);
        ++e;
      }
      if (e > 0) add(mpz_class(pr), e, FactorKind::Prime);
    }
    if (r == 1) continue;
    if (r <= limit_sq) {
      add(r, 1, FactorKind::Prime);
    } else if (mpz_probab_prime_p(r.get_mpz_t(), 30) > 0) {
      add(r, 1, FactorKind::ProbablePrime);
    } else {
      add(r, 1, FactorKind::Composite);
      out.complete = false;
    }
  }
  for (auto& [value, factor] : merged) out.factors.push_back(factor);
  return out;
}

std::pair<double, double> ratio_estimate(std::int64_t n, const Rational& m) {
  const AurifeuilleResult r = factor_by_polynomials(n, m);
  constexpr mpfr_prec_t kBits = 128;
  const double observed = BigFloat(Rational(r.F_plus / r.F_minus), kBits).to_double();
  const double predicted = exp(BigFloat(Rational(2 / m), kBits)).to_double();
  return {observed, predicted};
}

}  // namespace aurif
