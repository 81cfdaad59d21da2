#pragma once

#include <variant>
#include <vector>

#include "lzeta/bigfloat.hpp"
#include "lzeta/precision.hpp"
#include "lzeta/qsymbol.hpp"
#include "lzeta/rational.hpp"

namespace lzeta {

/// Truncated series value with a conservative bound on everything dropped.
struct SeriesResult {
  Complex value;
  long terms_used;
  Real tail_bound;
};

/// Argument of L_q(s) = sum_{n>=1} n^s q^n / (1 - q^n). Integer s is the
/// common case; complex s goes through exp(s log n).
struct LambertPoint {
  Complex q;
  std::variant<long, Complex> s;

  LambertPoint(Complex nome, long exponent) : q(std::move(nome)), s(exponent) {}
  LambertPoint(Complex nome, Complex exponent) : q(std::move(nome)), s(std::move(exponent)) {}
  LambertPoint(const QSymbol& nome, long exponent, mpfr_prec_t prec)
      : q(nome.value(prec)), s(exponent) {}

  /// Re(s) as a double, enough to pick a bound formula.
  double real_exponent() const;
};

Complex lambert_partial_sum(const LambertPoint& pt, long terms, const PrecisionContext& ctx);

/// q_abs^(N+1) / (1 - q_abs)^2. Valid for Re(s) <= 0; N = 0 is allowed.
Real tail_bound(const Real& q_abs, double re_s, long terms);

SeriesResult lambert_eval(const LambertPoint& pt, const Real& target_abs_error,
                          const PrecisionContext& ctx);

/// dL/dq = sum n^(s+1) q^(n-1) / (1 - q^n)^2.
Complex lambert_derivative_partial_sum(const LambertPoint& pt, long terms, const PrecisionContext& ctx);
Real derivative_tail_bound(const Real& q_abs, double re_s, long terms);
SeriesResult lambert_derivative_eval(const LambertPoint& pt, const Real& target_abs_error,
                                     const PrecisionContext& ctx);

/// S_q(s) = sum_{n>=0} (-1)^(n+1) (2n+1)^s sech((n+1/2) log q), summed over
/// n = 0..last_index (so last_index + 1 terms).
Real sech_partial_sum(const Real& q, long s, long last_index, const PrecisionContext& ctx);
/// 2 q^(N+3/2) / (1 - q^2) bounds the terms after index N.
Real sech_tail_bound(const Real& q, long last_index);
SeriesResult sech_series(const Real& q, long s, const Real& target_abs_error,
                         const PrecisionContext& ctx);

/// sigma_s(n) = sum_{d | n} d^s, exact.
Rational divisor_sigma(long s, long n);
/// [sigma_s(1), ..., sigma_s(order)]: the q-expansion of L_q(s).
std::vector<Rational> lambert_q_expansion(long s, long order);

/// Largest N any evaluation may use: 10^6 unless ZETA_ODD_MAX_TERMS is set.
long max_series_terms();

}  // namespace lzeta
