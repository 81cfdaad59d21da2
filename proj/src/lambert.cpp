#include "lzeta/lambert.hpp"

#include <cstdlib>
#include <functional>
#include <string>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

void require_inside_disc(const Real& q_abs) {
  if (q_abs.sign() < 0 || !(q_abs < 1)) throw DomainError("Lambert series needs |q| < 1");
}

Complex at_precision(const Complex& z, mpfr_prec_t prec) {
  Complex out{Real(prec), Real(prec)};
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  return out;
}

// Smallest N >= first with bound(N) < target, or ConvergenceError past the cap.
long smallest_terms(const std::function<Real(long)>& bound, const Real& target, long first) {
  if (!(target > 0)) throw InvalidArgument("target error must be positive");
  const long cap = max_series_terms();
  if (bound(first) < target) return first;
  long lo = first;  // bound(lo) >= target
  long hi = first + 1;
  while (!(bound(hi) < target)) {
    if (hi >= cap) {
      throw ConvergenceError("series needs more than " + std::to_string(cap) + " terms for the requested accuracy");
    }
    lo = hi;
    hi = std::min(cap, hi * 2);
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (bound(mid) < target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double LambertPoint::real_exponent() const {
  if (const long* k = std::get_if<long>(&s)) return static_cast<double>(*k);
  return std::get<Complex>(s).re.to_double();
}

Complex lambert_partial_sum(const LambertPoint& pt, long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw InvalidArgument("partial sum needs at least one term");
  const mpfr_prec_t prec = ctx.bits();
  require_inside_disc(abs(pt.q));
  const long* int_s = std::get_if<long>(&pt.s);

  if (int_s != nullptr && pt.q.is_real()) {
    Real q(prec);
    mpfr_set(q.get(), pt.q.re.get(), MPFR_RNDN);
    Real qn = q;
    Real sum(prec);
    for (long n = 1; n <= terms && !qn.is_zero(); ++n) {
      Real term = qn / (Real(1, prec) - qn);
      if (*int_s != 0) term *= pow(Real(n, prec), *int_s);
      sum += term;
      qn *= q;
    }
    return Complex(std::move(sum));
  }

  const Complex q = at_precision(pt.q, prec);
  const Complex one(Real(1, prec));
  Complex qn = q;
  Complex sum(prec);
  for (long n = 1; n <= terms; ++n) {
    Complex term = qn / (one - qn);
    if (int_s != nullptr) {
      if (*int_s != 0) term *= pow(Real(n, prec), *int_s);
    } else {
      term *= exp(std::get<Complex>(pt.s) * log(Real(n, prec)));
    }
    sum += term;
    qn *= q;
  }
  return sum;
}

Real tail_bound(const Real& q_abs, double re_s, long terms) {
  if (re_s > 0) throw InvalidArgument("no certified tail bound for Re(s) > 0; pass an explicit term count");
  require_inside_disc(q_abs);
  if (terms < 0) throw InvalidArgument("term count must be non-negative");
  const Real gap = Real(1, q_abs.precision()) - q_abs;
  return pow(q_abs, terms + 1) / (gap * gap);
}

SeriesResult lambert_eval(const LambertPoint& pt, const Real& target_abs_error, const PrecisionContext& ctx) {
  const double re_s = pt.real_exponent();
  if (re_s > 0) throw InvalidArgument("lambert_eval supports Re(s) <= 0 only");
  const Real q_abs = abs(pt.q);
  require_inside_disc(q_abs);
  if (q_abs.is_zero()) return {Complex(ctx.bits()), 1, Real(ctx.bits())};
  const long n = smallest_terms([&](long k) { return tail_bound(q_abs, re_s, k); }, target_abs_error, 1);
  return {lambert_partial_sum(pt, n, ctx), n, tail_bound(q_abs, re_s, n)};
}

Complex lambert_derivative_partial_sum(const LambertPoint& pt, long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw InvalidArgument("partial sum needs at least one term");
  const mpfr_prec_t prec = ctx.bits();
  require_inside_disc(abs(pt.q));
  const Complex q = at_precision(pt.q, prec);
  const Complex one(Real(1, prec));
  Complex q_prev = one;  // q^(n-1)
  Complex sum(prec);
  for (long n = 1; n <= terms; ++n) {
    const Complex qn = q_prev * q;
    const Complex gap = one - qn;
    Complex term = q_prev / (gap * gap);
    if (const long* k = std::get_if<long>(&pt.s)) {
      if (*k != -1) term *= pow(Real(n, prec), *k + 1);
    } else {
      Complex power = std::get<Complex>(pt.s) + one;
      term *= exp(power * log(Real(n, prec)));
    }
    sum += term;
    q_prev = qn;
  }
  return sum;
}

Real derivative_tail_bound(const Real& q_abs, double re_s, long terms) {
  if (re_s > 0) throw InvalidArgument("no certified tail bound for Re(s) > 0; pass an explicit term count");
  require_inside_disc(q_abs);
  const Real gap = Real(1, q_abs.precision()) - q_abs;
  Real head = pow(q_abs, terms) * (terms + 1);
  if (re_s <= -1) return head / (gap * gap * gap);
  // n^(s+1) <= n here, which costs one more factor of (1 - q).
  return head / (gap * gap * gap * gap);
}

SeriesResult lambert_derivative_eval(const LambertPoint& pt, const Real& target_abs_error,
                                     const PrecisionContext& ctx) {
  const double re_s = pt.real_exponent();
  if (re_s > 0) throw InvalidArgument("lambert_derivative_eval supports Re(s) <= 0 only");
  const Real q_abs = abs(pt.q);
  require_inside_disc(q_abs);
  const long n =
      smallest_terms([&](long k) { return derivative_tail_bound(q_abs, re_s, k); }, target_abs_error, 1);
  return {lambert_derivative_partial_sum(pt, n, ctx), n, derivative_tail_bound(q_abs, re_s, n)};
}

Real sech_partial_sum(const Real& q, long s, long last_index, const PrecisionContext& ctx) {
  if (!(q > 0) || !(q < 1)) throw DomainError("sech series needs 0 < q < 1");
  if (s > 0) throw InvalidArgument("sech series supports s <= 0 only");
  const mpfr_prec_t prec = ctx.bits();
  Real qq(prec);
  mpfr_set(qq.get(), q.get(), MPFR_RNDN);
  Real half_power = sqrt(qq);  // q^(n+1/2)
  Real sum(prec);
  for (long n = 0; n <= last_index; ++n) {
    // sech((n+1/2) log q) = 2 q^(n+1/2) / (1 + q^(2n+1))
    Real term = half_power * 2L / (Real(1, prec) + half_power * half_power);
    if (s != 0) term *= pow(Real(2 * n + 1, prec), s);
    if (n % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
    half_power *= qq;
  }
  return sum;
}

Real sech_tail_bound(const Real& q, long last_index) {
  if (!(q > 0) || !(q < 1)) throw DomainError("sech series needs 0 < q < 1");
  const Real one(1, q.precision());
  return pow(q, last_index + 1) * sqrt(q) * 2L / (one - q * q);
}

SeriesResult sech_series(const Real& q, long s, const Real& target_abs_error, const PrecisionContext& ctx) {
  if (!(q > 0) || !(q < 1)) throw DomainError("sech series needs 0 < q < 1");
  if (s > 0) throw InvalidArgument("sech series supports s <= 0 only");
  const long last = smallest_terms([&](long n) { return sech_tail_bound(q, n); }, target_abs_error, 0);
  return {Complex(sech_partial_sum(q, s, last, ctx)), last + 1, sech_tail_bound(q, last)};
}

Rational divisor_sigma(long s, long n) {
  if (n < 1) throw InvalidArgument("divisor sum needs n >= 1");
  Rational sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += pow(Rational(d), s);
    if (d * d != n) sum += pow(Rational(n / d), s);
  }
  return sum;
}

std::vector<Rational> lambert_q_expansion(long s, long order) {
  if (order < 1) throw InvalidArgument("expansion order must be >= 1");
  std::vector<Rational> out;
  out.reserve(order);
  for (long n = 1; n <= order; ++n) out.push_back(divisor_sigma(s, n));
  return out;
}

long max_series_terms() {
  static const long cap = [] {
    if (const char* env = std::getenv("ZETA_ODD_MAX_TERMS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1000000L;
  }();
  return cap;
}

}  // namespace lzeta
