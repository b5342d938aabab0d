#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aurif/cyclotomic.hpp"
#include "aurif/error.hpp"
#include "aurif/factorizer.hpp"
#include "aurif/gauss.hpp"
#include "aurif/lucas.hpp"
#include "aurif/numthy.hpp"
#include "aurif/series.hpp"

namespace aurif::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsage = 2;

Json poly_json(const IntPolynomial& p) {
  Json j = Json::object();
  j["text"] = to_string(p);
  j["ascending"] = Json::array();
  for (const auto& c : p.coeffs()) j["ascending"].push_back(c.get_str());
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

const char* status(bool ok) { return ok ? "OK" : "FAIL"; }

int cmd_phi(const CommandRequest& r, std::ostream& out) {
  const IntPolynomial p = phi_moebius(*r.n);
  if (r.json) {
    Json j;
    j["n"] = *r.n;
    j["phi"] = poly_json(p);
    emit(out, j);
  } else {
    out << to_string(p) << "\n";
  }
  return 0;
}

int cmd_gauss(const CommandRequest& r, std::ostream& out) {
  const GaussPair g = algorithm_d(*r.n);
  const bool ok = verify_gauss(g);
  if (r.json) {
    Json j;
    j["n"] = g.n;
    j["A"] = poly_json(g.a_poly());
    j["B"] = poly_json(g.b_poly());
    j["identity"] = ok;
    emit(out, j);
  } else {
    out << "A = " << to_string(g.a_poly()) << "\n";
    out << "B = " << to_string(g.b_poly()) << "\n";
    out << "identity: " << status(ok) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_lucas(const CommandRequest& r, std::ostream& out) {
  const LucasPair l = algorithm_l(*r.n);
  const bool ok = verify_lucas(l);
  std::optional<std::pair<Rational, Rational>> pair;
  if (r.m) pair = aurifeuillian_polys_eval(l, Rational(*r.m * *r.m * *r.n));
  if (r.json) {
    Json j;
    j["n"] = l.n;
    j["C"] = poly_json(l.c_poly());
    j["D"] = poly_json(l.d_poly());
    j["identity"] = ok;
    if (pair) {
      j["m"] = to_string(*r.m);
      j["F_minus"] = to_string(pair->first);
      j["F_plus"] = to_string(pair->second);
    }
    emit(out, j);
  } else {
    out << "C = " << to_string(l.c_poly()) << "\n";
    out << "D = " << to_string(l.d_poly()) << "\n";
    out << "identity: " << status(ok) << "\n";
    if (pair) {
      out << "x = " << to_string(Rational(*r.m * *r.m * *r.n)) << "\n";
      out << "F- = " << to_string(pair->first) << "\n";
      out << "F+ = " << to_string(pair->second) << "\n";
    }
  }
  return ok ? 0 : 1;
}

std::optional<mpfr_prec_t> requested_precision(const CommandRequest& r) {
  if (r.precision_bits) return static_cast<mpfr_prec_t>(*r.precision_bits);
  if (const char* env = std::getenv("AURIF_PRECISION_BITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (*end != '\0' || bits <= 0) {
      throw Error(Errc::InvalidArgument, std::string("AURIF_PRECISION_BITS must be a positive integer, got ") + env);
    }
    return static_cast<mpfr_prec_t>(bits);
  }
  return std::nullopt;
}

std::string product_text(const FactorList& f) {
  std::string s;
  for (const auto& p : f.factors) {
    if (!s.empty()) s += " * ";
    s += p.value.get_str();
    if (p.exponent > 1) s += "^" + std::to_string(p.exponent);
    if (p.kind == FactorKind::ProbablePrime) s += " (prp)";
    if (p.kind == FactorKind::Composite) s += " (composite)";
  }
  return s.empty() ? "1" : s;
}

int cmd_factor(const CommandRequest& r, std::ostream& out) {
  const std::int64_t n = *r.n;
  const Rational& m = *r.m;
  const bool integral = m.get_den() == 1;

  std::optional<AurifeuilleResult> rounded;
  if (integral) {
    rounded = factor_by_rounding(n, m.get_num(), requested_precision(r));
  }
  const FactorList f = full_factorization(n, m, r.trial_limit);
  const AurifeuilleResult& poly = f.aurifeuillian;
  if (rounded && (rounded->F_minus != poly.F_minus || rounded->F_plus != poly.F_plus)) {
    throw Error(Errc::InternalInconsistency, "rounding gives " + to_string(rounded->F_minus) +
                                                 " but the polynomial path gives " + to_string(poly.F_minus));
  }

  if (r.json) {
    Json j;
    j["target"] = f.target.get_str();
    j["aurifeuillian"] = {{"F_minus", poly.integer_minus.get_str()}, {"F_plus", poly.integer_plus.get_str()}};
    if (rounded) j["hat_F"] = rounded->hat_F->to_fixed(12);
    j["factors"] = Json::array();
    for (const auto& p : f.factors) j["factors"].push_back(Json::array({p.value.get_str(), p.exponent}));
    j["complete"] = f.complete;
    emit(out, j);
  } else {
    const std::string p = m.get_num().get_str();
    const std::string q = m.get_den().get_str();
    const std::string ns = std::to_string(n);
    out << "target = " << (integral ? "(" + p + "^2*" + ns + ")^" + ns
                                    : p + "^" + std::to_string(2 * n) + "*" + ns + "^" + ns)
        << " " << f.sign << " " << (integral ? "1" : q + "^" + std::to_string(2 * n)) << " = " << f.target.get_str()
        << "\n";
    if (rounded) out << "hat_F = " << rounded->hat_F->to_fixed(12) << "\n";
    out << "F- = " << poly.integer_minus.get_str() << "\n";
    out << "F+ = " << poly.integer_plus.get_str() << "\n";
    out << "factors = " << product_text(f) << "\n";
    out << "complete: " << (f.complete ? "yes" : "no") << "\n";
  }
  return 0;
}

struct Tally {
  int checked = 0;
  int failed = 0;
};

template <class F>
void run_check(Tally& t, std::ostream& err, const char* what, std::int64_t n, F&& check) {
  ++t.checked;
  try {
    if (check()) return;
    err << what << " failed for n = " << n << "\n";
  } catch (const Error& e) {
    err << what << " failed for n = " << n << ": " << e.what() << "\n";
  }
  ++t.failed;
}

int cmd_verify(const CommandRequest& r, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = r.range ? *r.range : std::pair{*r.n, *r.n};
  Tally gauss, lucas, gauss_oracle, lucas_oracle;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
    if (!is_squarefree(n)) continue;
    if (n % 2 == 1) {
      run_check(gauss, err, "gauss identity", n, [n] { return verify_gauss(n); });
      if (r.oracle && n >= 5) {
        run_check(gauss_oracle, err, "gauss oracle", n, [n] {
          const GaussPair a = algorithm_d(n);
          const GaussPair b = gauss_via_series(n);
          return a.alpha == b.alpha && a.beta == b.beta;
        });
      }
    }
    run_check(lucas, err, "lucas identity", n, [n] { return verify_lucas(n); });
    if (r.oracle) {
      run_check(lucas_oracle, err, "lucas oracle", n, [n] {
        const LucasPair a = algorithm_l(n);
        const LucasPair b = lucas_via_series(n);
        return a.gamma == b.gamma && a.delta == b.delta;
      });
    }
  }

  const std::vector<std::pair<const char*, const Tally*>> rows = {
      {"gauss", &gauss}, {"lucas", &lucas}, {"gauss_oracle", &gauss_oracle}, {"lucas_oracle", &lucas_oracle}};
  int failed = 0;
  Json j;
  j["range"] = Json::array({lo, hi});
  for (const auto& [name, t] : rows) {
    if (!r.oracle && std::string_view(name).ends_with("oracle")) continue;
    failed += t->failed;
    if (r.json) {
      j[name] = {{"checked", t->checked}, {"failed", t->failed}};
    } else {
      out << name << ": " << t->checked << " checked, " << t->failed << " failed\n";
    }
  }
  if (r.json) {
    j["ok"] = failed == 0;
    emit(out, j);
  }
  return failed == 0 ? 0 : 1;
}

int cmd_classnum(const CommandRequest& r, std::ostream& out) {
  const std::int64_t n = *r.n;
  Json j;
  j["n"] = n;
  if (n % 4 == 3) {
    const ClassNumberData c = class_number_neg(n);
    j["sigma"] = c.sigma;
    j["h"] = c.h;
    j["w"] = c.w;
    if (!r.json) out << "sigma = " << c.sigma << "\nh(-" << n << ") = " << c.h << "\n";
  } else if (n % 4 == 1) {
    const PellUnit u = fundamental_unit(n);
    j["u"] = u.u.get_str();
    j["v"] = u.v.get_str();
    if (!r.json) out << "unit = (u + v*sqrt(" << n << "))/2, u = " << u.u.get_str() << ", v = " << u.v.get_str() << "\n";
  } else {
    throw Error(Errc::BadResidueClass, "classnum needs n = 1 or 3 (mod 4), got " + std::to_string(n));
  }
  if (r.json) emit(out, j);
  return 0;
}

Rational parse_m(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw CLI::ValidationError("m", "expected a positive integer or p/q, got '" + text + "'");
  }
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic, Gauss and Aurifeuillian polynomials and factorizations", "aurif"};
  app.require_subcommand(1);

  CommandRequest req;
  std::int64_t n = 0;
  std::string m_text, rational_text, eval_text;
  long precision = 0;
  std::vector<std::int64_t> range;

  auto* phi = app.add_subcommand("phi", "Print the cyclotomic polynomial Phi_n");
  phi->add_option("n", n, "Index n >= 1")->required();
  phi->add_flag("--json", req.json, "JSON output");

  auto* gauss = app.add_subcommand("gauss", "Print A_n, B_n and check 4 Phi_n = A_n^2 - s n B_n^2");
  gauss->add_option("n", n, "Odd square-free n > 1")->required();
  gauss->add_flag("--json", req.json, "JSON output");

  auto* lucas = app.add_subcommand("lucas", "Print C_n, D_n and check F_n = C_n^2 - n x D_n^2");
  lucas->add_option("n", n, "Square-free n > 1")->required();
  lucas->add_option("--eval", eval_text, "Evaluate F-/+ at x = m^2 n, m = p or p/q");
  lucas->add_flag("--json", req.json, "JSON output");

  auto* factor = app.add_subcommand("factor", "Factor (m^2 n)^n -/+ 1 through its Aurifeuillian split");
  factor->add_option("n", n, "Square-free n > 1")->required();
  auto* m_opt = factor->add_option("m", m_text, "Positive integer m");
  auto* rat_opt = factor->add_option("--rational", rational_text, "Rational m = p/q");
  auto* prec_opt = factor->add_option("--precision", precision, "Working precision for hat_F in bits");
  factor->add_option("--trial-limit", req.trial_limit, "Trial division bound")->check(CLI::Range(2ULL, 1ULL << 32));
  factor->add_flag("--json", req.json, "JSON output");
  m_opt->excludes(rat_opt);
  rat_opt->excludes(prec_opt);

  auto* verify = app.add_subcommand("verify", "Run the identity (and oracle) checks");
  auto* n_opt = verify->add_option("n", n, "Single n");
  auto* range_opt = verify->add_option("--range", range, "Inclusive range a b")->expected(2);
  verify->add_flag("--oracle", req.oracle, "Also compare against the series oracle");
  verify->add_flag("--json", req.json, "JSON output");
  n_opt->excludes(range_opt);

  auto* classnum = app.add_subcommand("classnum", "sigma and h(-n) for n = 3 (mod 4); Pell unit for n = 1 (mod 4)");
  classnum->add_option("n", n, "Square-free n")->required();
  classnum->add_flag("--json", req.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    CLI::App* sub = app.get_subcommands().front();
    req.subcommand = sub->get_name();
    if (req.subcommand == "verify") {
      if (range.empty() && n_opt->count() == 0) throw CLI::ValidationError("verify", "give n or --range a b");
      if (!range.empty()) {
        if (range[0] > range[1]) throw CLI::ValidationError("--range", "a must not exceed b");
        req.range = std::pair{range[0], range[1]};
      } else {
        req.n = n;
      }
    } else {
      req.n = n;
    }
    if (req.subcommand == "lucas" && !eval_text.empty()) req.m = parse_m(eval_text);
    if (req.subcommand == "factor") {
      if (m_opt->count() == 0 && rat_opt->count() == 0) throw CLI::ValidationError("factor", "give m or --rational p/q");
      req.m = parse_m(m_opt->count() > 0 ? m_text : rational_text);
      if (m_opt->count() > 0 && req.m->get_den() != 1) {
        throw CLI::ValidationError("m", "use --rational for non-integer m");
      }
      if (prec_opt->count() > 0) {
        if (precision <= 0) throw CLI::ValidationError("--precision", "must be positive");
        req.precision_bits = precision;
      }
    }
    if (req.m && sgn(*req.m) <= 0) throw CLI::ValidationError("m", "must be positive");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return ParseOutcome{std::nullopt, code == 0 ? 0 : kUsage};
  }
  return ParseOutcome{req, 0};
}

int run(const CommandRequest& r, std::ostream& out, std::ostream& err) {
  try {
    if (r.subcommand == "phi") return cmd_phi(r, out);
    if (r.subcommand == "gauss") return cmd_gauss(r, out);
    if (r.subcommand == "lucas") return cmd_lucas(r, out);
    if (r.subcommand == "factor") return cmd_factor(r, out);
    if (r.subcommand == "verify") return cmd_verify(r, out, err);
    if (r.subcommand == "classnum") return cmd_classnum(r, out);
    err << "error: " << errc_name(Errc::Usage) << ": unknown subcommand '" << r.subcommand << "'\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Usage ? kUsage : 1;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args, out, err);
  if (!parsed.request) return parsed.exit_code;
  return run(*parsed.request, out, err);
}

}  // namespace aurif::cli
