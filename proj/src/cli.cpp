#include "lzeta/cli.hpp"

#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lzeta/coefficients.hpp"
#include "lzeta/error.hpp"
#include "lzeta/identity.hpp"
#include "lzeta/oracle.hpp"
#include "lzeta/zeta_engine.hpp"

namespace lzeta::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Flags {
  std::string format = "text";
  bool timing = false;
  long digits = 50;

  // compute / coeffs / bench
  long s = 0;
  long k = 0;
  long power = 0;
  long p = 0;
  std::string method;
  std::string constant;
  bool rewrite = false;
  long max_terms = 15;

  // verify
  std::string identity;
  long verify_k = 1;
  long verify_p = 2;
  std::string t = "0.5,0";
  std::string a = "2";
  std::string q = "0.1";
  long exponent = -3;
  long order = 50;
  int variant = 1;
};

bool json(const Flags& f) { return f.format == "json"; }

Complex parse_point(const std::string& text, mpfr_prec_t prec) {
  const auto comma = text.find(',');
  const std::string re = text.substr(0, comma);
  const std::string im = comma == std::string::npos ? "0" : text.substr(comma + 1);
  return {Real::parse(re, prec), Real::parse(im, prec)};
}

std::string residual_report(const Flags& f, const Residual& r, bool pass) {
  const long threshold = f.digits - 5;
  std::string terms;
  for (std::size_t i = 0; i < r.terms_used.size(); ++i) {
    if (i > 0) terms += ",";
    terms += std::to_string(r.terms_used[i]);
  }
  if (json(f)) {
    ojson j;
    j["identity"] = f.identity;
    j["rel_residual"] = r.rel_residual.to_scientific();
    j["abs_residual"] = r.abs_residual.to_scientific();
    j["scale"] = r.scale.to_scientific();
    j["terms_used"] = r.terms_used;
    j["working_digits"] = r.precision_used;
    j["threshold"] = "1e-" + std::to_string(threshold);
    j["pass"] = pass;
    return j.dump();
  }
  std::ostringstream os;
  os << "identity: " << f.identity << "\n"
     << "rel_residual: " << r.rel_residual.to_scientific() << "\n"
     << "abs_residual: " << r.abs_residual.to_scientific() << "\n"
     << "scale: " << r.scale.to_scientific() << "\n"
     << "terms_used: " << terms << "\n"
     << "working_digits: " << r.precision_used << "\n"
     << "threshold: 1e-" << threshold << "\n"
     << "result: " << (pass ? "pass" : "fail");
  return os.str();
}

int verify(const Flags& f, std::string& out) {
  if (f.identity == "multisection") {
    const Rational diff = check_multisection(f.verify_p, f.exponent, f.order);
    const bool pass = diff == 0;
    if (json(f)) {
      ojson j;
      j["identity"] = f.identity;
      j["p"] = f.verify_p;
      j["s"] = f.exponent;
      j["order"] = f.order;
      j["max_difference"] = diff.get_str();
      j["pass"] = pass;
      out = j.dump();
    } else {
      out = "identity: multisection\np: " + std::to_string(f.verify_p) + "\ns: " + std::to_string(f.exponent) +
            "\norder: " + std::to_string(f.order) + "\nmax_difference: " + diff.get_str() +
            "\nresult: " + (pass ? "pass" : "fail");
    }
    return pass ? kOk : kVerifyFailed;
  }

  const PrecisionContext ctx = make_context(f.digits);
  Residual r = [&] {
    if (f.identity == "lemma-p4") return check_lemma_p4(Real::parse(f.q, ctx.bits()), f.exponent, ctx);
    if (f.identity == "lemma-sech") return check_lemma_sech(Real::parse(f.q, ctx.bits()), f.exponent, ctx);
    const Complex t = parse_point(f.t, ctx.bits());
    if (f.identity == "t1c1") return check_t1_case1(t, ctx);
    if (f.identity == "t1c2") return check_t1_case2(f.verify_k, t, ctx);
    if (f.identity == "t1c3") return check_t1_case3(f.verify_k, t, ctx);
    return check_zeta_free(f.variant, f.verify_k, parse_rational(f.a), t, ctx);
  }();
  const bool pass = r.passes(f.digits - 5);
  out = residual_report(f, r, pass);
  return pass ? kOk : kVerifyFailed;
}

const std::set<std::string> kPlusMethods = {"p2", "p3", "p5", "corollary3", "root3_p", "root7_p", "root15_p"};

CoefficientTable requested_table(const Flags& f) {
  if (f.constant == "zeta") {
    if (f.s != 0) return coeffs_zeta(f.s, f.method.empty() ? "auto" : f.method);
    if (f.k < 1) throw InvalidArgument("coeffs --constant zeta needs --s or --k >= 1");
    if (f.method.empty()) throw InvalidArgument("coeffs --constant zeta --k needs --method");
    const long s = kPlusMethods.contains(f.method) ? 4 * f.k + 1 : 4 * f.k - 1;
    return coeffs_zeta(s, f.method);
  }
  if (f.constant == "pi") {
    if (f.power < 1) throw InvalidArgument("--constant pi needs --power");
    const std::string m = f.method.empty() || f.method == "auto" ? pi_methods(f.power).front() : f.method;
    return coeffs_pi(m, f.power);
  }
  if (f.p == 0) throw InvalidArgument("--constant log needs --p");
  return coeffs_log(f.p);
}

std::string first_order_report(const Flags& f) {
  const PrecisionContext ctx = make_context(f.digits);
  const Real value = zeta3_first_order(ctx);
  const Real diff = value - oracle_zeta(3, ctx);
  if (json(f)) {
    ojson j;
    j["constant"] = "zeta(3)";
    j["method"] = "first_order";
    j["value"] = value.to_decimal(f.digits);
    j["oracle_difference"] = diff.to_scientific();
    return j.dump();
  }
  return "constant: zeta(3)\nmethod: first_order\nvalue: " + value.to_decimal(f.digits) +
         "\noracle_difference: " + diff.to_scientific();
}

void add_digits(CLI::App* cmd, Flags& f) {
  cmd->add_option("--digits", f.digits, "Target decimal digits")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"High-precision odd zeta values, odd powers of pi and small-prime logarithms from Lambert series",
               "lzeta"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timing", f.timing, "Include wall time in compute output");

  auto* compute = app.add_subcommand("compute", "Compute a constant");
  compute->require_subcommand(1);
  auto* zeta = compute->add_subcommand("zeta", "zeta(s) for odd s >= 3");
  zeta->add_option("--s", f.s, "Odd argument >= 3")->required();
  zeta->add_option("--method", f.method, "Method id or auto (default)");
  add_digits(zeta, f);
  auto* pi = compute->add_subcommand("pi", "pi^n for odd n");
  pi->add_option("--power", f.power, "Odd power")->required();
  pi->add_option("--method", f.method, "Method id or auto (default)");
  add_digits(pi, f);
  auto* log = compute->add_subcommand("log", "log p for p in {2, 3, 5}");
  log->add_option("--p", f.p, "Prime")->required();
  add_digits(log, f);
  auto* first = compute->add_subcommand("zeta3-first-order", "One-term approximation of zeta(3)");
  add_digits(first, f);

  auto* coeffs = app.add_subcommand("coeffs", "Print an exact coefficient table as JSON");
  coeffs->add_option("--constant", f.constant, "zeta, pi or log")
      ->required()
      ->check(CLI::IsMember({"zeta", "pi", "log"}));
  coeffs->add_option("--k", f.k, "Index k of zeta(4k-1) or zeta(4k+1), parity taken from the method");
  coeffs->add_option("--s", f.s, "zeta argument, alternative to --k");
  coeffs->add_option("--power", f.power, "Power of pi");
  coeffs->add_option("--p", f.p, "Prime for log");
  coeffs->add_option("--method", f.method, "Method id");
  coeffs->add_flag("--rewrite-positive-q", f.rewrite, "Replace negative nomes by positive ones");

  auto* ver = app.add_subcommand("verify", "Check an identity numerically (exact for multisection)");
  ver->add_option("--identity", f.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"t1c1", "t1c2", "t1c3", "multisection", "lemma-p4", "lemma-sech", "zeta-free"}));
  ver->add_option("--k", f.verify_k, "Index k")->capture_default_str();
  ver->add_option("--t", f.t,
                  "Point t as \"re,im\" with re > 0; logs and powers of t use the principal branch")
      ->capture_default_str();
  ver->add_option("--p", f.verify_p, "Prime for multisection")->capture_default_str();
  ver->add_option("--s", f.exponent, "Series exponent for multisection and the lemmas")->capture_default_str();
  ver->add_option("--q", f.q, "Real nome 0 < q < 1 for the lemmas")->capture_default_str();
  ver->add_option("--a", f.a, "Positive rational a for zeta-free")->capture_default_str();
  ver->add_option("--case", f.variant, "zeta-free variant: 1 for s = -(4k+1), 2 for s = -(4k-1)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  ver->add_option("--order", f.order, "Power-series order for multisection")->capture_default_str();
  add_digits(ver, f);

  auto* bench = app.add_subcommand("bench", "Digits gained per series term");
  bench->add_option("--constant", f.constant, "zeta (default), pi or log")
      ->check(CLI::IsMember({"zeta", "pi", "log"}));
  bench->add_option("--s", f.s, "zeta argument");
  bench->add_option("--k", f.k, "Index k (with --method)");
  bench->add_option("--power", f.power, "Power of pi");
  bench->add_option("--p", f.p, "Prime for log");
  bench->add_option("--method", f.method, "Method id");
  bench->add_option("--max-terms", f.max_terms, "Largest truncation")->capture_default_str();

  std::vector<const char*> argv{"lzeta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::string text;
  int code = kOk;
  try {
    if (compute->parsed()) {
      if (first->parsed()) {
        text = first_order_report(f);
      } else {
        const PrecisionContext ctx = make_context(f.digits);
        const std::string method = f.method.empty() ? "auto" : f.method;
        const ConstantResult r = zeta->parsed() ? zeta_odd(f.s, method, ctx)
                                 : pi->parsed()
                                     ? pi_power(f.power, method == "auto" ? pi_methods(f.power).front() : method, ctx)
                                     : log_prime(f.p, ctx);
        text = format_result(r, json(f), f.timing);
      }
    } else if (coeffs->parsed()) {
      CoefficientTable t = requested_table(f);
      if (f.rewrite) t = negative_q_rewrite(t);
      text = to_json(t);
    } else if (ver->parsed()) {
      code = verify(f, text);
    } else if (bench->parsed()) {
      if (f.max_terms < 1) throw InvalidArgument("--max-terms must be >= 1");
      if (f.constant.empty()) f.constant = "zeta";
      text = format_profile(convergence_profile(requested_table(f), f.max_terms), json(f));
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: bad value: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: value out of range: " << e.what() << "\n";
    return kUsage;
  }
  out << text << "\n";
  return code;
}

}  // namespace lzeta::cli
