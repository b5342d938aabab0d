#include "aurif/series.hpp"

#include <algorithm>
#include <string>

#include "aurif/bigfloat.hpp"
#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/numthy.hpp"

namespace aurif {
namespace {

void require_zero_constant(const RationalSeries& f, const char* what) {
  if (sgn(f[0]) != 0) throw Error(Errc::BadConstantTerm, std::string(what) + " needs a series with zero constant term");
}

mpz_class integral_or_throw(const mpq_class& c, std::int64_t n, const char* which, std::size_t k) {
  if (c.get_den() != 1) {
    throw Error(Errc::NonIntegralOracle, std::string(which) + " coefficient " + std::to_string(k) + " for n = " +
                                             std::to_string(n) + " is " + to_string(c));
  }
  return c.get_num();
}

BigFloat eval_big(const IntPolynomial& p, const BigFloat& x) {
  BigFloat acc(0.0, x.precision());
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigFloat(*it, x.precision());
  return acc;
}

}  // namespace

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

RationalSeries::RationalSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
}

RationalSeries RationalSeries::from_polynomial(const IntPolynomial& p, std::size_t order) {
  RationalSeries out(order);
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size() && k <= order; ++k) out.coeffs_[k] = c[k];
  return out;
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw Error(Errc::InvalidArgument, "cannot extend a series known through order " + std::to_string(this->order()));
  }
  return RationalSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

RationalSeries operator*(const mpq_class& c, const RationalSeries& a) {
  RationalSeries out = a;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

Rational eval(const RationalSeries& s, const Rational& x) {
  Rational acc = 0;
  const auto c = s.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalSeries f_series(std::int64_t n, std::size_t order) {
  if (n < 3 || n % 2 == 0 || !is_squarefree(n)) {
    throw Error(Errc::NotOddSquareFree, "f_n needs odd square-free n > 1, got " + std::to_string(n));
  }
  RationalSeries out(order);
  for (std::size_t j = 1; j <= order; ++j) {
    out[j] = mpq_class(kronecker(static_cast<std::int64_t>(j), n), static_cast<unsigned long>(j));
    out[j].canonicalize();
  }
  return out;
}

RationalSeries g_series(std::int64_t n, std::size_t order) {
  if (n < 2) throw Error(Errc::NTooSmall, "g_n needs n > 1, got " + std::to_string(n));
  if (!is_squarefree(n)) throw Error(Errc::NotSquareFree, "g_n needs square-free n, got " + std::to_string(n));
  RationalSeries out(order);
  for (std::size_t k = 1; k <= order; k += 2) {
    out[k] = mpq_class(kronecker(n, static_cast<std::int64_t>(k)), static_cast<unsigned long>(k));
    out[k].canonicalize();
  }
  return out;
}

RationalSeries series_sqrt(const RationalSeries& p, std::size_t order) {
  if (p[0] != 1) throw Error(Errc::BadConstantTerm, "square root needs constant term 1, got " + to_string(p[0]));
  if (order > p.order()) {
    throw Error(Errc::InvalidArgument, "square root through order " + std::to_string(order) +
                                           " of a series known through " + std::to_string(p.order()));
  }
  RationalSeries r(order);
  r[0] = 1;
  mpq_class acc;
  for (std::size_t k = 1; k <= order; ++k) {
    acc = p[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / 2;
  }
  return r;
}

RationalSeries series_exp(const RationalSeries& f) {
  require_zero_constant(f, "exp");
  RationalSeries e(f.order());
  e[0] = 1;
  mpq_class acc;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<unsigned long>(j) * f[j] * e[k - j];
    e[k] = acc / static_cast<unsigned long>(k);
  }
  return e;
}

RationalSeries series_exp_like(const RationalSeries& f, HyperbolicMode mode, const Rational& t,
                               std::size_t order) {
  require_zero_constant(f, "exp-like expansion");
  if (order > f.order()) {
    throw Error(Errc::InvalidArgument, "expansion through order " + std::to_string(order) +
                                           " of a series known through " + std::to_string(f.order()));
  }
  const RationalSeries base = f.truncated(order);
  const RationalSeries f2 = base * base;
  const bool sinh = mode == HyperbolicMode::SinhOverRoot;

  RationalSeries power(order);
  mpq_class scale;
  if (sinh) {
    power = base;
    scale = mpq_class(1, 2);
  } else {
    power[0] = 1;
    scale = 1;
  }
  RationalSeries result(order);
  // Term k has valuation at least 2k (+1 for sinh).
  for (std::size_t k = 0; 2 * k + (sinh ? 1 : 0) <= order; ++k) {
    result = result + scale * power;
    power = power * f2;
    // scale_{k+1} / scale_k = t / (4 (2k+1)(2k+2))   or   t / (4 (2k+2)(2k+3))
    const unsigned long m = sinh ? 2 * k + 2 : 2 * k + 1;
    scale *= t;
    scale /= static_cast<unsigned long>(4 * m * (m + 1));
  }
  return result;
}

GaussPair gauss_via_series(std::int64_t n) {
  if (n <= 3 || n % 2 == 0 || !is_squarefree(n)) {
    throw Error(Errc::NotOddSquareFree, "series route needs odd square-free n > 3, got " + std::to_string(n));
  }
  const NumTheoryContext ctx = make_context(n);
  const std::size_t d = static_cast<std::size_t>(*ctx.d_gauss);

  const RationalSeries root = series_sqrt(RationalSeries::from_polynomial(phi_moebius(n), d), d);
  const RationalSeries f = f_series(n, d);
  const Rational t(ctx.s * n);
  const RationalSeries a = mpq_class(2) * (root * series_exp_like(f, HyperbolicMode::Cosh, t, d));
  const RationalSeries b = mpq_class(2) * (root * series_exp_like(f, HyperbolicMode::SinhOverRoot, t, d));

  GaussPair out;
  out.n = n;
  out.s = ctx.s;
  out.d = d;
  out.alpha.resize(d + 1);
  out.beta.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    out.alpha[d - k] = integral_or_throw(a[k], n, "A_n", k);
    out.beta[d - k] = integral_or_throw(b[k], n, "B_n", k);
  }
  if (sgn(out.beta[0]) != 0) {
    throw Error(Errc::NonIntegralOracle, "B_n from series has degree d for n = " + std::to_string(n));
  }
  if (out.alpha[0] < 0) {
    for (auto& v : out.alpha) v = -v;
  }
  if (out.beta[1] < 0) {
    for (auto& v : out.beta) v = -v;
  }
  return out;
}

LucasPair lucas_via_series(std::int64_t n) {
  const NumTheoryContext ctx = make_context(n);
  const std::size_t d = static_cast<std::size_t>(ctx.d_lucas);
  const std::size_t order = 2 * d;

  // F_n(y^2) as a series in y
  const IntPolynomial fy = compose_power(f_poly(n), 2);
  const RationalSeries root = series_sqrt(RationalSeries::from_polynomial(fy, order), order);
  const RationalSeries g2 = mpq_class(2) * g_series(n, order);
  const Rational t(n);
  const RationalSeries cy = root * series_exp_like(g2, HyperbolicMode::Cosh, t, order);
  const RationalSeries dy = root * series_exp_like(g2, HyperbolicMode::SinhOverRoot, t, order);

  LucasPair out;
  out.n = n;
  out.n_prime = ctx.n_prime;
  out.s_prime = ctx.s_prime;
  out.d = d;
  out.gamma.resize(d + 1);
  out.delta.resize(d);
  for (std::size_t k = 0; k <= order; ++k) {
    const bool even = k % 2 == 0;
    if (sgn(even ? dy[k] : cy[k]) != 0) {
      throw Error(Errc::NonIntegralOracle, "series for n = " + std::to_string(n) + " has wrong parity at y^" +
                                               std::to_string(k));
    }
    if (even) {
      out.gamma[d - k / 2] = integral_or_throw(cy[k], n, "C_n", k / 2);
    } else if (k / 2 < d) {
      out.delta[d - 1 - k / 2] = integral_or_throw(dy[k], n, "D_n", k / 2);
    } else if (sgn(dy[k]) != 0) {
      throw Error(Errc::NonIntegralOracle, "D_n from series has degree d for n = " + std::to_string(n));
    }
  }
  return out;
}

bool check_ratio_identity(std::int64_t n, const Rational& x0, std::size_t order, double tol) {
  if (abs(x0) >= 1) throw Error(Errc::InvalidArgument, "ratio identity needs |x0| < 1, got " + to_string(x0));
  const LucasPair pair = algorithm_l(n);
  constexpr mpfr_prec_t kBits = 256;

  const BigFloat x(x0, kBits);
  const BigFloat x2 = x * x;
  const BigFloat c = eval_big(pair.c_poly(), x2);
  const BigFloat dv = eval_big(pair.d_poly(), x2);
  const BigFloat root_n = sqrt(BigFloat(mpz_class(n), kBits));
  const BigFloat sp(mpz_class(pair.s_prime), kBits);
  const BigFloat odd = sp * x * root_n * dv;
  const BigFloat lhs = (c + odd) / (c - odd);

  const BigFloat g(eval(g_series(n, order), x0), kBits);
  const BigFloat rhs = exp(BigFloat(mpz_class(2), kBits) * sp * root_n * g);

  const BigFloat one(mpz_class(1), kBits);
  const BigFloat scale = abs(rhs) < one ? one : abs(rhs);
  return abs(lhs - rhs) <= BigFloat(tol, kBits) * scale;
}

}  // namespace aurif
