#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/numthy.hpp"
#include "expect_error.hpp"
#include "support.hpp"

namespace aurif {
namespace {

using testing::code_of;

IntPolynomial phi_by_newton(std::int64_t n) {
  const auto d = static_cast<std::size_t>(euler_phi(n));
  std::vector<mpz_class> p(d);
  for (std::size_t k = 1; k <= d; ++k) p[k - 1] = ramanujan_sum(n, static_cast<std::int64_t>(k));
  return newton_from_power_sums(p, d);
}

TEST(Cyclotomic, Phi15) {
  const IntPolynomial expected = IntPolynomial::from_descending({1, -1, 0, 1, -1, 1, 0, -1, 1});
  EXPECT_EQ(phi_moebius(15), expected);
  EXPECT_EQ(phi_recursive(15), expected);
  EXPECT_EQ(phi_by_newton(15), expected);
}

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(to_string(phi_moebius(1)), "x - 1");
  EXPECT_EQ(to_string(phi_moebius(2)), "x + 1");
  EXPECT_EQ(to_string(phi_moebius(12)), "x^4 - x^2 + 1");
  EXPECT_EQ(to_string(phi_moebius(5)), "x^4 + x^3 + x^2 + x + 1");
}

TEST(Cyclotomic, RoutesAgree) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    const IntPolynomial m = phi_moebius(n);
    ASSERT_EQ(m.degree(), euler_phi(n)) << n;
    EXPECT_EQ(phi_by_newton(n), m) << n;
    if (is_squarefree(n)) {
      EXPECT_EQ(phi_recursive(n), m) << n;
    }
  }
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (std::int64_t n = 1; n <= 80; ++n) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (std::int64_t d : divisors(n)) prod = prod * phi_moebius(d);
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c.front() = -1;
    c.back() = 1;
    EXPECT_EQ(prod, IntPolynomial(c)) << n;
  }
}

TEST(Cyclotomic, RecursiveNeedsSquarefree) {
  EXPECT_EQ(code_of([] { phi_recursive(12); }), Errc::NotSquareFree);
}

TEST(RamanujanSum, MatchesRootsOfUnity) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 1; k <= 70; ++k) {
      const std::int64_t c = ramanujan_sum(n, k);
      EXPECT_EQ(c, testing::ramanujan_by_roots(n, k)) << n << "," << k;
      EXPECT_LE(std::abs(c), std::min(k, n));
      EXPECT_EQ(ramanujan_c(n, k), c);
    }
  }
}

TEST(Newton, PowerSumsRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 10);
    std::vector<mpz_class> c(d + 1);
    for (auto& v : c) v = coeff(rng);
    c.back() = 1;
    const IntPolynomial p(c);
    EXPECT_EQ(newton_from_power_sums(power_sums_of(p, d), d), p);
  }
}

TEST(Newton, NonIntegerCoefficient) {
  const std::vector<mpz_class> p{1, 0};
  EXPECT_EQ(code_of([&] { newton_from_power_sums(p, 2); }), Errc::NonIntegerCoefficient);
}

TEST(FPoly, Listings) {
  EXPECT_EQ(f_poly(14), IntPolynomial::from_descending({1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1}));
  EXPECT_EQ(f_poly(15), IntPolynomial::from_descending({1, 1, 0, -1, -1, -1, 0, 1, 1}));
  EXPECT_EQ(f_poly(2), IntPolynomial::from_descending({1, 0, 1}));
  EXPECT_EQ(f_poly(5), phi_moebius(5));
}

TEST(FPoly, DegreeIsPhiOfTwoN) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    if (!is_squarefree(n)) continue;
    EXPECT_EQ(f_poly(n).degree(), euler_phi(2 * n)) << n;
  }
}

TEST(FPoly, EqualsCyclotomicValueOfTargetIndex) {
  // F_n(x) = Phi_n(x) for n = 1 (mod 4), Phi_2n(x) otherwise.
  for (std::int64_t n = 2; n <= 200; ++n) {
    if (!is_squarefree(n)) continue;
    EXPECT_EQ(f_poly(n), phi_moebius(n % 4 == 1 ? n : 2 * n)) << n;
  }
}

TEST(Bounds, Values) {
  EXPECT_NEAR(fn_bound(2, 5.0), 25.0 * std::exp(0.25), 1e-12);
  EXPECT_NEAR(fn_bound(2, 5.0), 32.10, 0.005);
  EXPECT_NEAR(phi_bound(15, 2.0), 256.0 * std::exp(1.0), 1e-9);
  EXPECT_EQ(code_of([] { phi_bound(5, 1.0); }), Errc::BadRadius);
  EXPECT_EQ(code_of([] { fn_bound(5, 0.5); }), Errc::BadRadius);
}

// The bound holds on the circle |x| = R, and scales as |x|^deg outside it.
void check_disc_bound(const IntPolynomial& p, double radius, double bound_at_r, std::mt19937_64& rng, std::int64_t n) {
  std::uniform_real_distribution<long double> angle(0, 2 * std::numbers::pi_v<long double>);
  std::uniform_real_distribution<long double> stretch(1, 4);
  const long double deg = static_cast<long double>(p.degree());
  for (int trial = 0; trial < 20; ++trial) {
    const long double theta = angle(rng);
    const auto on_circle = std::polar<long double>(radius, theta);
    EXPECT_LT(std::abs(testing::eval_complex(p, on_circle)), bound_at_r * (1 + 1e-9)) << n << " R=" << radius;

    const long double r = radius * stretch(rng);
    const auto outside = std::polar<long double>(r, theta);
    const long double scaled = bound_at_r * std::pow(r / radius, deg);
    EXPECT_LT(std::abs(testing::eval_complex(p, outside)), scaled * (1 + 1e-9)) << n << " |x|=" << r;
  }
}

TEST(BoundsProperty, PhiOutsideDisc) {
  std::mt19937_64 rng(11);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const IntPolynomial p = phi_moebius(n);
    for (double radius : {1.5, 2.0, 5.0}) check_disc_bound(p, radius, phi_bound(n, radius), rng, n);
  }
}

TEST(BoundsProperty, FOutsideDisc) {
  std::mt19937_64 rng(13);
  for (std::int64_t n = 2; n <= 60; ++n) {
    if (!is_squarefree(n)) continue;
    const IntPolynomial p = f_poly(n);
    for (double radius : {1.5, 2.0, 5.0}) check_disc_bound(p, radius, fn_bound(n, radius), rng, n);
  }
}

}  // namespace
}  // namespace aurif
