#include "aurif/poly.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "aurif/error.hpp"

namespace aurif {

Rational parse_rational(std::string_view text) {
  Rational r;
  const std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(Errc::InvalidArgument, "cannot parse rational '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(Errc::InvalidArgument, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial IntPolynomial::from_ascending(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_descending(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& p) {
  std::vector<mpz_class> c(p.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * p.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(Errc::InexactDivision, "division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw Error(Errc::InexactDivision, "divisor degree exceeds dividend degree");

  std::vector<mpz_class> rem(num.coeffs().begin(), num.coeffs().end());
  const auto d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  const mpz_class& lead = d.back();
  std::vector<mpz_class> quot(rem.size() - dn);

  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dn];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) {
      throw Error(Errc::InexactDivision, "leading coefficient does not divide the partial remainder");
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (rem[i] != 0) throw Error(Errc::InexactDivision, "nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial compose_power(const IntPolynomial& p, std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "compose_power requires k >= 1");
  if (p.is_zero()) return {};
  const auto c = p.coeffs();
  std::vector<mpz_class> out((c.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial negate_arg(const IntPolynomial& p) {
  std::vector<mpz_class> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial reversed(const IntPolynomial& p) {
  std::vector<mpz_class> out(p.coeffs().begin(), p.coeffs().end());
  std::reverse(out.begin(), out.end());
  return IntPolynomial(std::move(out));
}

mpz_class eval(const IntPolynomial& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

Rational eval(const IntPolynomial& p, const Rational& x) {
  // Horner on numerator and denominator separately, one reduction at the end.
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  const auto c = p.coeffs();
  if (c.empty()) return Rational(0);
  mpz_class num = 0;
  mpz_class bpow = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    num *= a;
    num += c[i] * bpow;
    bpow *= b;
  }
  // bpow = b^(deg+1); value = num / b^deg
  Rational r(num, bpow / b);
  r.canonicalize();
  return r;
}

Symmetry symmetry_class(const IntPolynomial& p) {
  const auto c = p.coeffs();
  bool pal = true;
  bool anti = true;
  for (std::size_t k = 0, j = c.size(); k < c.size(); ++k) {
    --j;
    if (c[k] != c[j]) pal = false;
    if (c[k] != -c[j]) anti = false;
  }
  if (pal) return Symmetry::Palindromic;
  if (anti) return Symmetry::Antipalindromic;
  return Symmetry::Neither;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Palindromic: return "palindromic";
    case Symmetry::Antipalindromic: return "antipalindromic";
    case Symmetry::Neither: return "neither";
  }
  return "neither";
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const mpz_class mag = abs(c[i]);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_json(const IntPolynomial& p) {
  nlohmann::ordered_json j;
  j["order"] = "ascending";
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) j["coeffs"].push_back(c.get_str());
  return j.dump();
}

IntPolynomial polynomial_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("order", "") != "ascending" || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(Errc::InvalidArgument, "polynomial JSON must be {\"order\":\"ascending\",\"coeffs\":[...]}");
  }
  std::vector<mpz_class> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw Error(Errc::InvalidArgument, "coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw Error(Errc::InvalidArgument, "bad coefficient '" + c.get<std::string>() + "'");
    }
    coeffs.push_back(std::move(v));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace aurif
