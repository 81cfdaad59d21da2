#include "lzeta/identity.hpp"

#include <algorithm>
#include <string>

#include "lzeta/bernoulli.hpp"
#include "lzeta/error.hpp"
#include "lzeta/lambert.hpp"
#include "lzeta/oracle.hpp"

namespace lzeta {

namespace {

// Evaluates Lambert series to a shared tolerance and records term counts.
class SeriesLog {
 public:
  explicit SeriesLog(const PrecisionContext& ctx)
      : ctx_(ctx), target_(pow10(-(ctx.target_digits() + 5), ctx.bits())) {}

  Complex lambert(const Complex& q, long s) {
    SeriesResult r = lambert_eval(LambertPoint(q, s), target_, ctx_);
    terms_.push_back(r.terms_used);
    return std::move(r.value);
  }

  // L_{e^{-2 pi x}}(s)
  Complex at_exponent(const Complex& x, long s) {
    return lambert(exp(x * (const_pi(ctx_.bits()) * -2L)), s);
  }

  Real sech(const Real& q, long s) {
    SeriesResult r = sech_series(q, s, target_, ctx_);
    terms_.push_back(r.terms_used);
    return std::move(r.value.re);
  }

  std::vector<long> take_terms() { return std::move(terms_); }

 private:
  const PrecisionContext& ctx_;
  Real target_;
  std::vector<long> terms_;
};

Residual make_residual(const Complex& lhs, const Complex& rhs, std::vector<long> terms,
                       const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  Real diff = abs(lhs - rhs);
  Real scale = max(max(abs(lhs), abs(rhs)), Real(1, prec));
  Real rel = diff / scale;
  return Residual{std::move(diff), std::move(scale), std::move(rel), std::move(terms), ctx.working_digits()};
}

void require_right_half_plane(const Complex& t) {
  if (!(t.re > 0)) throw DomainError("the transformation needs Re(t) > 0");
}

void require_positive_k(long k) {
  if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
}

// t^n on the principal branch
Complex t_power(const Complex& log_t, long n) { return exp(log_t * Real(n, log_t.precision())); }

Complex scaled(const Complex& z, const Rational& c) { return z * Real(c, z.precision()); }

// B_2j B_{w-2j} / ((2j)! (w-2j)!)
Rational bernoulli_pair(long j, long weight) {
  return bernoulli(2 * j) * bernoulli(weight - 2 * j) / (factorial(2 * j) * factorial(weight - 2 * j));
}

// (1/t^m) L_{e^{-2 pi t}}(s) + sign * t^m L_{e^{-2 pi/t}}(s)
Complex paired_sides(SeriesLog& series, const Complex& t, long m, long s, int sign) {
  const Complex log_t = log(t);
  Complex left = series.at_exponent(t, s) * t_power(log_t, -m);
  Complex right = series.at_exponent(inverse(t), s) * t_power(log_t, m);
  return sign > 0 ? left + right : left - right;
}

Complex case_lhs(SeriesLog& series, int which, long k, const Complex& t) {
  switch (which) {
    case 1:
      return paired_sides(series, t, 0, -1, -1);
    case 2:
      return paired_sides(series, t, 2 * k - 1, -(4 * k - 1), +1);
    case 3:
      return paired_sides(series, t, 2 * k, -(4 * k + 1), -1);
    default:
      throw InvalidArgument("transformation case must be 1, 2 or 3");
  }
}

}  // namespace

bool Residual::passes(long digits) const { return rel_residual < pow10(-digits, rel_residual.precision()); }

Complex transformation_lhs(int which, long k, const Complex& t, const PrecisionContext& ctx) {
  require_right_half_plane(t);
  if (which != 1) require_positive_k(k);
  SeriesLog series(ctx);
  return case_lhs(series, which, k, t);
}

Residual check_t1_case1(const Complex& t, const PrecisionContext& ctx) {
  require_right_half_plane(t);
  SeriesLog series(ctx);
  const Complex lhs = case_lhs(series, 1, 0, t);
  const Complex log_t = log(t);
  const Real pi = const_pi(ctx.bits());
  const Complex rhs = scaled(log_t, Rational(1, 2)) - sinh(log_t) * (pi / 6L);
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

Residual check_t1_case2(long k, const Complex& t, const PrecisionContext& ctx) {
  require_positive_k(k);
  require_right_half_plane(t);
  SeriesLog series(ctx);
  const Complex lhs = case_lhs(series, 2, k, t);
  const Complex log_t = log(t);
  const mpfr_prec_t prec = ctx.bits();
  Complex sum(prec);
  for (long j = 0; j <= k; ++j) {
    Rational c = bernoulli_pair(j, 4 * k);
    if (j % 2 == 0) c = -c;
    if (j == k) c /= 2;
    sum += scaled(cosh(log_t * Real(2 * k - 2 * j, prec)), c);
  }
  const Real two_pi_power = pow(const_pi(prec) * 2L, 4 * k - 1);
  const Complex rhs = sum * two_pi_power - cosh(log_t * Real(2 * k - 1, prec)) * oracle_zeta(4 * k - 1, ctx);
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

Residual check_t1_case3(long k, const Complex& t, const PrecisionContext& ctx) {
  require_positive_k(k);
  require_right_half_plane(t);
  SeriesLog series(ctx);
  const Complex lhs = case_lhs(series, 3, k, t);
  const Complex log_t = log(t);
  const mpfr_prec_t prec = ctx.bits();
  Complex sum(prec);
  for (long j = 0; j <= k; ++j) {
    Rational c = bernoulli_pair(j, 4 * k + 2);
    if (j % 2 == 0) c = -c;
    sum += scaled(sinh(log_t * Real(2 * k + 1 - 2 * j, prec)), c);
  }
  const Real two_pi_power = pow(const_pi(prec) * 2L, 4 * k + 1);
  const Complex rhs = sum * two_pi_power + sinh(log_t * Real(2 * k, prec)) * oracle_zeta(4 * k + 1, ctx);
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

Rational check_multisection(long p, long s, long order) {
  if (p < 2) throw InvalidArgument("multisection needs a prime p");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidArgument("multisection needs a prime p, got " + std::to_string(p));
  }
  if (order < p) throw InvalidArgument("expansion order must be at least p");

  // With z = q^(1/p), L_{z w^n}(s) = sum_e c_e w^(ne) z^e where c_e comes from
  // expanding every n^s z^n / (1 - z^n) geometrically.
  const long top = p * order;
  std::vector<Rational> c(top + 1);
  for (long n = 1; n <= top; ++n) {
    const Rational weight = pow(Rational(n), s);
    for (long e = n; e <= top; e += n) c[e] += weight;
  }

  const Rational ps = pow(Rational(p), s);
  const Rational ps1 = ps * p;
  Rational worst = 0;
  auto note = [&worst](const Rational& diff) {
    const Rational size = abs(diff);
    if (size > worst) worst = size;
  };

  for (long e = 1; e <= top; ++e) {
    // sum_{n<p} w^(ne) in Q[w], reduced with 1 + w + ... + w^(p-1) = 0
    std::vector<long> ring(p, 0);
    for (long n = 0; n < p; ++n) ring[(n * e) % p] += 1;
    const long shift = ring[p - 1];
    for (long& r : ring) r -= shift;

    Rational rhs = 0;
    if (e % p == 0) {
      const long l = e / p;
      rhs = (ps1 + p) * divisor_sigma(s, l);
      if (l % p == 0) rhs -= ps1 * divisor_sigma(s, l / p);
    }
    note(c[e] * ring[0] - rhs);
    for (long r = 1; r < p - 1; ++r) note(c[e] * ring[r]);
  }

  for (long l = 1; l <= order; ++l) {
    Rational expected = (ps + 1) * divisor_sigma(s, l);
    if (l % p == 0) expected -= ps * divisor_sigma(s, l / p);
    note(divisor_sigma(s, l * p) - expected);
  }
  return worst;
}

Residual check_lemma_p4(const Real& q, long s, const PrecisionContext& ctx) {
  if (!(q > 0) || !(q < 1)) throw DomainError("lemma needs 0 < q < 1");
  if (s > 0) throw InvalidArgument("lemma check supports s <= 0");
  const mpfr_prec_t prec = ctx.bits();
  SeriesLog series(ctx);
  const Real root = sqrt(q);
  const Complex lhs = series.lambert(Complex(Real(prec), root), s) + series.lambert(Complex(Real(prec), -root), s);
  const Rational two_s1 = pow2(s + 1);
  const Rational two_2s2 = pow2(2 * s + 2);
  const Complex rhs = scaled(series.lambert(Complex(q), s), -(two_s1 + 2)) +
                      scaled(series.lambert(Complex(q * q), s), two_2s2 + 3 * two_s1 + 4) -
                      scaled(series.lambert(Complex(q * q * q * q), s), two_2s2 + pow2(s + 2));
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

Residual check_lemma_sech(const Real& q, long s, const PrecisionContext& ctx) {
  if (!(q > 0) || !(q < 1)) throw DomainError("lemma needs 0 < q < 1");
  if (s > 0) throw InvalidArgument("lemma check supports s <= 0");
  const mpfr_prec_t prec = ctx.bits();
  SeriesLog series(ctx);
  const Real root = sqrt(q);
  const Complex diff = series.lambert(Complex(Real(prec), root), s) - series.lambert(Complex(Real(prec), -root), s);
  const Complex lhs(-diff.im, diff.re);  // i * diff
  const Complex rhs(series.sech(q, s));
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

Residual check_zeta_free(int which, long k, const Rational& a, const Complex& t, const PrecisionContext& ctx) {
  if (which != 1 && which != 2) throw InvalidArgument("zeta-free case must be 1 (4k+1) or 2 (4k-1)");
  if (which == 1 && k < 0) throw InvalidArgument("case 1 needs k >= 0");
  if (which == 2) require_positive_k(k);
  if (a <= 0) throw DomainError("zeta-free identity needs a > 0");
  require_right_half_plane(t);

  const mpfr_prec_t prec = ctx.bits();
  const long m = which == 1 ? 2 * k : 2 * k - 1;
  const long s = which == 1 ? -(4 * k + 1) : -(4 * k - 1);
  const Rational up = pow(a, m);
  const Rational down = pow(a, -m);
  const Rational weights[3] = {up, -(up + down), down};
  const Real a_real(a, prec);
  const Complex forward[3] = {t * (Real(1, prec) / a_real), t, t * a_real};
  const Complex inv_t = inverse(t);
  const Complex backward[3] = {inv_t * (Real(1, prec) / a_real), inv_t, inv_t * a_real};

  SeriesLog series(ctx);
  Complex first(prec);
  Complex second(prec);
  for (int i = 0; i < 3; ++i) {
    first += scaled(series.at_exponent(forward[i], s), weights[i]);
    second += scaled(series.at_exponent(backward[i], s), weights[i]);
  }
  const Complex log_t = log(t);
  first = first * t_power(log_t, -m);
  second = second * t_power(log_t, m);
  const Complex lhs = which == 1 ? first - second : first + second;

  Complex sum(prec);
  const long weight = which == 1 ? 4 * k + 2 : 4 * k;
  for (long j = 0; j <= k; ++j) {
    Rational c = bernoulli_pair(j, weight);
    if (j % 2 == 1) c = -c;
    if (which == 1) {
      // printed with (-1)^(j+1); the identity holds with (-1)^j
      c *= pow(a, 2 * k) + pow(a, -2 * k) - pow(a, 2 * k + 1 - 2 * j) - pow(a, -2 * k - 1 + 2 * j);
      sum += scaled(sinh(log_t * Real(2 * k + 1 - 2 * j, prec)), c);
    } else {
      Rational cjk = pow(a, 2 * k - 1) + pow(a, -2 * k + 1) - pow(a, 2 * k - 2 * j) - pow(a, -2 * k + 2 * j);
      if (j == k) cjk /= 2;
      c *= cjk;
      sum += scaled(cosh(log_t * Real(2 * k - 2 * j, prec)), c);
    }
  }
  const Complex rhs = sum * pow(const_pi(prec) * 2L, weight - 1);
  return make_residual(lhs, rhs, series.take_terms(), ctx);
}

}  // namespace lzeta
