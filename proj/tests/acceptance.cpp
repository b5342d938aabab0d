#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/factorizer.hpp"
#include "aurif/gauss.hpp"
#include "aurif/lucas.hpp"
#include "aurif/numthy.hpp"
#include "aurif/series.hpp"
#include "support.hpp"

namespace {

using namespace aurif;
using Clock = std::chrono::steady_clock;

constexpr double kExamplesBudgetSeconds = 1.0;
constexpr double kIdentityBudgetSeconds = 60.0;
constexpr double kRoundingHalf = 0.5;
constexpr double kBoundSlack = 1e-9;
constexpr int kBoundSamples = 40;
constexpr std::uint64_t kBoundSeed = 20240917;

struct Check {
  std::ostringstream failures;
  int count = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (count++ < 5) failures << (count > 1 ? "; " : "") << what;
  }
  bool ok() const { return count == 0; }
};

IntPolynomial desc(std::initializer_list<long> c) { return IntPolynomial::from_descending(c); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void examples(Check& c) {
  const auto t0 = Clock::now();
  c.expect(phi_moebius(15) == desc({1, -1, 0, 1, -1, 1, 0, -1, 1}), "Phi15");
  c.expect(f_poly(14) == desc({1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1}), "F14");
  const GaussPair g15 = algorithm_d(15);
  c.expect(g15.a_poly() == desc({2, -1, -4, -1, 2}), "A15");
  c.expect(g15.b_poly() == desc({1, 0, -1, 0}), "B15");
  const GaussPair g5 = algorithm_d(5);
  c.expect(g5.a_poly() == desc({2, 1, 2}), "A5");
  c.expect(g5.b_poly() == desc({1, 0}), "B5");
  const GaussPair g3 = algorithm_d(3);
  c.expect(g3.a_poly() == desc({2, 1}), "A3");
  c.expect(g3.b_poly() == desc({1}), "B3");
  const LucasPair l15 = algorithm_l(15);
  c.expect(l15.c_poly() == desc({1, 8, 13, 8, 1}), "C15");
  c.expect(l15.d_poly() == desc({1, 3, 3, 1}), "D15");
  const LucasPair l14 = algorithm_l(14);
  c.expect(l14.c_poly() == desc({1, 7, 3, -7, 3, 7, 1}), "C14");
  c.expect(l14.d_poly() == desc({1, 2, -1, -1, 2, 1}), "D14");
  const LucasPair l2 = algorithm_l(2);
  c.expect(l2.c_poly() == desc({1, 1}), "C2");
  c.expect(l2.d_poly() == desc({1}), "D2");
  const LucasPair l7 = algorithm_l(7);
  c.expect(l7.c_poly() == desc({1, 3, 3, 1}), "C7");
  c.expect(l7.d_poly() == desc({1, 1, 1}), "D7");
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < kExamplesBudgetSeconds, "took " + std::to_string(elapsed) + " s");
}

void traces(Check& c) {
  const GaussPair g = algorithm_d(15);
  c.expect(g.q == std::vector<std::int64_t>{1, 1, -2, 1}, "D q");
  c.expect(g.r == std::vector<std::int64_t>{1, 1, 0, 1}, "D r");
  c.expect(g.alpha.size() > 2 && g.alpha[1] == -1 && g.alpha[2] == -4, "D alpha");
  c.expect(g.beta.size() > 2 && g.beta[1] == 1 && g.beta[2] == 0, "D beta");
  const LucasPair l = algorithm_l(15);
  c.expect(l.q.size() >= 4 && l.q[0] == 1 && l.q[1] == -1 && l.q[2] == 0 && l.q[3] == 1, "L q");
  c.expect(l.gamma.size() > 2 && l.gamma[1] == 8 && l.gamma[2] == 13, "L gamma");
  c.expect(l.delta.size() > 1 && l.delta[1] == 3, "L delta");
}

void identities(Check& c) {
  const auto t0 = Clock::now();
  int checked = 0;
  for (std::int64_t n = 3; n <= 301; n += 2) {
    if (!is_squarefree(n)) continue;
    ++checked;
    c.expect(verify_gauss(n), "gauss " + std::to_string(n));
  }
  for (std::int64_t n = 2; n <= 301; ++n) {
    if (!is_squarefree(n)) continue;
    ++checked;
    c.expect(verify_lucas(n), "lucas " + std::to_string(n));
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed <= kIdentityBudgetSeconds, "took " + std::to_string(elapsed) + " s");
  c.expect(checked > 0, "nothing checked");
}

void oracles(Check& c) {
  for (std::int64_t n = 5; n <= 61; n += 2) {
    if (!is_squarefree(n)) continue;
    const GaussPair a = algorithm_d(n);
    const GaussPair b = gauss_via_series(n);
    c.expect(a.alpha == b.alpha && a.beta == b.beta, "gauss " + std::to_string(n));
  }
  for (std::int64_t n = 2; n <= 61; ++n) {
    if (!is_squarefree(n)) continue;
    const LucasPair a = algorithm_l(n);
    const LucasPair b = lucas_via_series(n);
    c.expect(a.gamma == b.gamma && a.delta == b.delta, "lucas " + std::to_string(n));
  }
}

void rounding_bound(Check& c) {
  c.expect(hat_f(2, 2).to_fixed(2) == "4.89", "hat F(2,2)");
  c.expect(hat_f(2, 32).to_fixed(2) == "1984.98", "hat F(2,32)");
  c.expect(hat_f(5, 3).to_fixed(5) == "1470.99924", "hat F(5,3)");
  c.expect(hat_f(15, 1).to_fixed(5) == "19231.00217", "hat F(15,1)");
  for (std::int64_t n = 2; n <= 60; ++n) {
    if (!is_squarefree(n)) continue;
    for (long m = 1; m <= 4; ++m) {
      const AurifeuilleResult exact = factor_by_polynomials(n, Rational(m));
      const BigFloat hat = hat_f(n, m);
      const double gap = abs(hat - BigFloat(exact.F_minus, hat.precision())).to_double();
      c.expect(gap < kRoundingHalf, "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
}

std::vector<std::pair<std::string, unsigned>> listing(const FactorList& f) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& p : f.factors) out.emplace_back(p.value.get_str(), p.exponent);
  return out;
}

void factorizations(Check& c) {
  using L = std::vector<std::pair<std::string, unsigned>>;
  const FactorList a = full_factorization(2, Rational(32));
  c.expect(a.target == mpz_class("4194305") && listing(a) == L{{"5", 1}, {"397", 1}, {"2113", 1}} && a.complete,
           "2^22+1");
  const FactorList b = full_factorization(15, Rational(1));
  c.expect(listing(b) == L{{"2", 4}, {"31", 1}, {"211", 1}, {"1531", 1}, {"19231", 1}, {"142111", 1}} && b.complete,
           "15^15+1");
  mpz_class t15;
  mpz_ui_pow_ui(t15.get_mpz_t(), 15, 15);
  c.expect(b.target == t15 + 1, "15^15+1 target");
  const FactorList d = full_factorization(7, Rational(2, 5));
  c.expect(listing(d) == L{{"29", 1}, {"43", 1}, {"53", 1}, {"296507", 1}} && d.complete, "25^7+28^7");
  mpz_class a25, a28;
  mpz_ui_pow_ui(a25.get_mpz_t(), 25, 7);
  mpz_ui_pow_ui(a28.get_mpz_t(), 28, 7);
  c.expect(d.target == a25 + a28, "25^7+28^7 target");
  const AurifeuilleResult r = factor_by_polynomials(7, Rational(2, 5));
  c.expect(r.integer_minus == 1247 && r.integer_plus == 296507, "Aurifeuillian pieces of 25^7+28^7");
  for (const FactorList* f : {&a, &b, &d}) {
    mpz_class prod = 1;
    for (const auto& p : f->factors) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), p.value.get_mpz_t(), p.exponent);
      prod *= pw;
    }
    c.expect(prod == f->target, "product " + f->target.get_str());
  }
}

void class_numbers(Check& c) {
  c.expect(class_number_neg(15).h == 2, "h(-15)");
  c.expect(class_number_neg(3).h == 1, "h(-3)");
  const PellUnit u = fundamental_unit(5);
  c.expect(u.u == 3 && u.v == 1, "unit for 5");
  for (std::int64_t n = 7; n <= 500; n += 4) {
    if (!is_squarefree(n)) continue;
    const ClassNumberData d = class_number_neg(n);
    c.expect(d.sigma % n == 0, "n | sigma for " + std::to_string(n));
    c.expect(d.h == testing::class_number_by_forms(n), "forms count for " + std::to_string(n));
  }
}

void bound_sample(Check& c, const IntPolynomial& p, double radius, double bound, std::mt19937_64& rng,
                  const std::string& tag) {
  std::uniform_real_distribution<long double> angle(0, 2 * std::numbers::pi_v<long double>);
  std::uniform_real_distribution<long double> stretch(1, 4);
  const long double deg = static_cast<long double>(p.degree());
  for (int i = 0; i < kBoundSamples; ++i) {
    const long double theta = angle(rng);
    const long double on = std::abs(testing::eval_complex(p, std::polar<long double>(radius, theta)));
    c.expect(on < bound * (1 + kBoundSlack), tag + " on circle");
    const long double r = radius * stretch(rng);
    const long double out = std::abs(testing::eval_complex(p, std::polar<long double>(r, theta)));
    c.expect(out < bound * std::pow(r / radius, deg) * (1 + kBoundSlack), tag + " outside");
  }
}

void coefficient_bounds(Check& c) {
  std::mt19937_64 rng(kBoundSeed);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const IntPolynomial p = phi_moebius(n);
    for (double radius : {1.5, 2.0, 5.0}) bound_sample(c, p, radius, phi_bound(n, radius), rng, "Phi" + std::to_string(n));
  }
  for (std::int64_t n = 2; n <= 60; ++n) {
    if (!is_squarefree(n)) continue;
    const IntPolynomial p = f_poly(n);
    for (double radius : {1.5, 2.0, 5.0}) bound_sample(c, p, radius, fn_bound(n, radius), rng, "F" + std::to_string(n));
  }
}

void factor_ratio(Check& c) {
  struct Point {
    std::int64_t n;
    long m;
  };
  for (const Point pt : {Point{2, 32}, Point{15, 1}, Point{5, 3}}) {
    const auto [observed, predicted] = ratio_estimate(pt.n, Rational(pt.m));
    const double rel = std::abs(observed - predicted) / predicted;
    c.expect(rel < 2.0 / static_cast<double>(pt.n),
             "n=" + std::to_string(pt.n) + " m=" + std::to_string(pt.m) + " rel=" + std::to_string(rel));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"listed polynomials match exactly", examples},
      {"worked traces for n = 15", traces},
      {"Gauss and Lucas identities through 301", identities},
      {"series oracles agree with the recurrences", oracles},
      {"rounded estimate within 1/2", rounding_bound},
      {"example factorizations", factorizations},
      {"class numbers and units", class_numbers},
      {"coefficient bounds on random samples", coefficient_bounds},
      {"factor ratio against exp(2/m)", factor_ratio},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream line;
    line << (c.ok() ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first;
    line.precision(3);
    line << std::fixed << " (" << elapsed << " s)";
    if (!c.ok()) line << " -- " << c.count << " violation(s): " << c.failures.str();
    std::cout << line.str() << '\n';
    if (!c.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}
