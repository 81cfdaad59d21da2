#include "lzeta/zeta_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lzeta/coefficients.hpp"
#include "lzeta/error.hpp"
#include "lzeta/exact_eval.hpp"
#include "lzeta/lambert.hpp"
#include "lzeta/oracle.hpp"

namespace lzeta {

namespace {

struct BasisValue {
  Real value;
  Real tail;
  long terms;
};

Real coefficient_value(const Coefficient& c, mpfr_prec_t prec) {
  if (const auto* r = std::get_if<Rational>(&c)) return to_real(*r, prec);
  return to_real(std::get<QuadraticSurd>(c), prec);
}

// Series values are real for every table; a leftover imaginary part means a
// wrong nome, not rounding.
Real real_part(const Complex& z, const PrecisionContext& ctx) {
  if (abs(z.im) > pow10(-(ctx.working_digits() - 5), ctx.bits())) {
    throw std::logic_error("basis series has a non-negligible imaginary part");
  }
  return z.re;
}

// fixed_terms > 0 cuts the series there instead of meeting `budget`.
BasisValue eval_basis(const BasisTerm& b, const Real& budget, long fixed_terms, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  switch (b.kind) {
    case BasisTerm::Kind::kPiPower:
      return {pow(const_pi(prec), b.power), Real(prec), 0};
    case BasisTerm::Kind::kLambert: {
      const LambertPoint pt(b.q, b.s, prec);
      if (fixed_terms > 0) {
        return {real_part(lambert_partial_sum(pt, fixed_terms, ctx), ctx),
                tail_bound(abs(pt.q), static_cast<double>(b.s), fixed_terms), fixed_terms};
      }
      SeriesResult r = lambert_eval(pt, budget, ctx);
      return {real_part(r.value, ctx), std::move(r.tail_bound), r.terms_used};
    }
    case BasisTerm::Kind::kSech: {
      const Real q = b.q.magnitude(prec);
      if (fixed_terms > 0) {
        return {sech_partial_sum(q, b.s, fixed_terms - 1, ctx), sech_tail_bound(q, fixed_terms - 1), fixed_terms};
      }
      SeriesResult r = sech_series(q, b.s, budget, ctx);
      return {real_part(r.value, ctx), std::move(r.tail_bound), r.terms_used};
    }
    case BasisTerm::Kind::kLambertDerivative: {
      const LambertPoint pt(b.q, b.s, prec);
      const Real scale = 2L * const_pi(prec) * abs(pt.q);
      Complex factor = pt.q * (2L * const_pi(prec));
      if (fixed_terms > 0) {
        const Complex v = factor * lambert_derivative_partial_sum(pt, fixed_terms, ctx);
        return {real_part(v, ctx), scale * derivative_tail_bound(abs(pt.q), static_cast<double>(b.s), fixed_terms),
                fixed_terms};
      }
      SeriesResult r = lambert_derivative_eval(pt, budget / max(scale, Real(1, prec)), ctx);
      return {real_part(factor * r.value, ctx), scale * r.tail_bound, r.terms_used};
    }
  }
  throw std::logic_error("unknown basis kind");
}

struct Sum {
  Real value;
  Real bound;
  std::vector<std::pair<std::string, long>> terms;
};

// Series at `cut_rate` are truncated after cut_terms terms; everything else
// meets its share of 10^-exponent.
Sum sum_table(const CoefficientTable& table, long exponent, double cut_rate, long cut_terms,
              const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  if (table.entries.empty()) throw InvalidArgument("empty coefficient table");
  const long count = static_cast<long>(table.entries.size());
  const Real total_budget = pow10(-exponent, prec);
  Sum out{Real(prec), Real(prec), {}};
  Real magnitude(prec);
  for (const auto& e : table.entries) {
    const Real c = coefficient_value(e.coeff, prec);
    const Real budget = total_budget / max(abs(c), Real(1, prec)) / count;
    const bool cut = e.basis.kind != BasisTerm::Kind::kPiPower && e.basis.q.rate() == cut_rate;
    BasisValue v = eval_basis(e.basis, budget, cut ? cut_terms : 0, ctx);
    const Real product = c * v.value;
    out.value += product;
    out.bound += abs(c) * v.tail;
    magnitude += abs(product);
    if (e.basis.kind != BasisTerm::Kind::kPiPower) out.terms.emplace_back(to_string(e.basis), v.terms);
  }
  // rounding in every product and sum, a few ulps each at working precision
  out.bound += (magnitude + Real(1, prec)) * pow10(-(ctx.working_digits() - 2), prec);
  return out;
}

ConstantResult finish(const CoefficientTable& table, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Sum s = sum_table(table, ctx.target_digits() + ctx.guard_digits() / 2, -1, 0, ctx);
  if (!(s.bound < pow10(-ctx.target_digits(), ctx.bits()))) {
    throw ConvergenceError(table.constant_id + " via " + table.method_id + ": error bound " +
                           s.bound.to_scientific() + " misses the target");
  }
  ConstantResult r{table.constant_id, table.method_id, s.value, s.value.to_decimal(ctx.target_digits()),
                   std::move(s.bound), std::move(s.terms), 0};
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double digits_of(const Real& err, long cap) {
  if (err.is_zero()) return static_cast<double>(cap);
  const mpfr_prec_t prec = err.precision();
  const double d = (-(log(err) / log(Real(10, prec)))).to_double();
  return std::min(d, static_cast<double>(cap));
}

}  // namespace

ConstantResult assemble(const CoefficientTable& table, const PrecisionContext& ctx) { return finish(table, ctx); }

ConstantResult zeta_odd(long s, std::string_view method, const PrecisionContext& ctx) {
  return assemble(coeffs_zeta(s, method), ctx);
}

ConstantResult pi_power(long n, std::string_view method, const PrecisionContext& ctx) {
  return assemble(coeffs_pi(method, n), ctx);
}

ConstantResult log_prime(long p, const PrecisionContext& ctx) { return assemble(coeffs_log(p), ctx); }

Real zeta3_first_order(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const Real pi = const_pi(prec);
  const Real r15 = sqrt(Real(15, prec));
  const Real lead = pow(pi, 3) * r15 / 100L;
  const Real bracket = Real(Rational(9, 4), prec) + Real(4, prec) / r15 * sinh(r15 * pi / 2L);
  return lead + exp(-(r15 * pi)) * bracket;
}

Real oracle_constant(std::string_view id, const PrecisionContext& ctx) {
  const std::string text(id);
  auto inner = [&](std::string_view head) -> long {
    if (!text.starts_with(head) || text.back() != ')') throw InvalidArgument("unknown constant " + text);
    return std::stol(text.substr(head.size(), text.size() - head.size() - 1));
  };
  if (text == "pi") return oracle_pi(ctx);
  if (text.starts_with("pi^")) return pow(oracle_pi(ctx), std::stol(text.substr(3)));
  if (text.starts_with("zeta(")) return oracle_zeta(inner("zeta("), ctx);
  if (text.starts_with("log(")) return oracle_log(inner("log("), ctx);
  throw InvalidArgument("unknown constant " + text);
}

ConvergenceProfile convergence_profile(const CoefficientTable& table, long max_terms) {
  if (max_terms < 1) throw InvalidArgument("max_terms must be >= 1");
  double rate = -1;
  for (const auto& e : table.entries) {
    if (e.basis.kind == BasisTerm::Kind::kPiPower) continue;
    if (rate < 0 || e.basis.q.rate() < rate) rate = e.basis.q.rate();
  }
  if (rate < 0) throw InvalidArgument("table has no series");
  const double per_term = M_PI * rate / std::log(10.0);
  const auto digits = static_cast<long>(std::ceil(per_term * static_cast<double>(max_terms + 1))) + 30;
  const PrecisionContext ctx = make_context(digits);
  const Real oracle = oracle_constant(table.constant_id, ctx);
  const long cap = ctx.working_digits() - 5;

  ConvergenceProfile out{table.constant_id, table.method_id, rate, {}, 0, cap};
  for (long n = 1; n <= max_terms; ++n) {
    const Sum s = sum_table(table, ctx.working_digits(), rate, n, ctx);
    out.points.push_back({n, digits_of(abs(s.value - oracle), cap)});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long used = 0;
  for (const auto& p : out.points) {
    if (p.terms < 3 || p.correct_digits >= static_cast<double>(cap) - 2) continue;
    const auto x = static_cast<double>(p.terms);
    sx += x;
    sy += p.correct_digits;
    sxx += x * x;
    sxy += x * p.correct_digits;
    ++used;
  }
  if (used >= 2) out.slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  return out;
}

std::string format_result(const ConstantResult& r, bool json, bool timing) {
  if (json) {
    nlohmann::ordered_json j;
    j["constant"] = r.constant_id;
    j["method"] = r.method_id;
    j["value"] = r.decimal_value;
    j["error_bound"] = r.error_bound.to_scientific();
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [basis, n] : r.terms_used) terms[basis] = n;
    j["terms_used"] = terms;
    if (timing) j["wall_time"] = r.wall_time;
    return j.dump();
  }
  std::ostringstream os;
  os << "constant: " << r.constant_id << "\n"
     << "method: " << r.method_id << "\n"
     << "value: " << r.decimal_value << "\n"
     << "error_bound: " << r.error_bound.to_scientific() << "\n"
     << "terms_used:\n";
  for (const auto& [basis, n] : r.terms_used) os << "  " << basis << ": " << n << "\n";
  if (timing) os << "wall_time: " << r.wall_time << " s\n";
  std::string text = os.str();
  text.pop_back();
  return text;
}

std::string format_profile(const ConvergenceProfile& p, bool json) {
  auto fixed = [](double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << x;
    return os.str();
  };
  if (json) {
    nlohmann::ordered_json j;
    j["constant"] = p.constant_id;
    j["method"] = p.method_id;
    j["rate"] = fixed(p.rate);
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& pt : p.points) pts.push_back({{"terms", pt.terms}, {"correct_digits", fixed(pt.correct_digits)}});
    j["points"] = pts;
    j["slope"] = fixed(p.slope);
    j["expected_slope"] = fixed(M_PI * p.rate / std::log(10.0));
    return j.dump();
  }
  std::ostringstream os;
  os << "constant: " << p.constant_id << "\nmethod: " << p.method_id << "\nrate: " << fixed(p.rate) << "\n"
     << "terms  correct_digits\n";
  for (const auto& pt : p.points) os << pt.terms << "  " << fixed(pt.correct_digits) << "\n";
  os << "slope: " << fixed(p.slope) << " digits/term (expected " << fixed(M_PI * p.rate / std::log(10.0)) << ")";
  return os.str();
}

}  // namespace lzeta
