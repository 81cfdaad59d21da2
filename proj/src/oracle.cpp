#include "lzeta/oracle.hpp"

#include <algorithm>

#include "lzeta/bernoulli.hpp"
#include "lzeta/error.hpp"
#include "lzeta/rational.hpp"

namespace lzeta {

namespace {

// Extra bits so the oracle stays a few digits ahead of the caller.
constexpr mpfr_prec_t kSpareBits = 64;

// sum_k sign^k / ((2k+1) x^(2k+1)); sign = -1 gives atan(1/x), +1 gives atanh(1/x).
Real inverse_series(long x, int sign, mpfr_prec_t prec) {
  const Real eps = pow(Real(2, prec), -prec);
  Real power = Real(1, prec) / x;  // x^-(2k+1)
  Real sum(prec);
  const long x2 = x * x;
  for (long k = 0;; ++k) {
    Real term = power / (2 * k + 1);
    if (sign < 0 && k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (term < eps) break;
    power /= x2;
  }
  return sum;
}

}  // namespace

Real oracle_pi(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits() + kSpareBits;
  Real pi = inverse_series(5, -1, prec) * 16L - inverse_series(239, -1, prec) * 4L;
  Real out(ctx.bits());
  mpfr_set(out.get(), pi.get(), MPFR_RNDN);
  return out;
}

Real oracle_log(long p, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits() + kSpareBits;
  // log 2 = 2 atanh(1/3), 3/2 = (1+1/5)/(1-1/5), 5/4 = (1+1/9)/(1-1/9)
  const Real log2 = inverse_series(3, 1, prec) * 2L;
  Real value(prec);
  switch (p) {
    case 2:
      value = log2;
      break;
    case 3:
      value = log2 + inverse_series(5, 1, prec) * 2L;
      break;
    case 5:
      value = log2 * 2L + inverse_series(9, 1, prec) * 2L;
      break;
    default:
      throw InvalidArgument("log oracle covers p in {2, 3, 5}");
  }
  Real out(ctx.bits());
  mpfr_set(out.get(), value.get(), MPFR_RNDN);
  return out;
}

Real oracle_zeta(long s, const PrecisionContext& ctx) {
  if (s < 2) throw InvalidArgument("zeta oracle needs s >= 2");
  const mpfr_prec_t prec = ctx.bits() + kSpareBits;
  const Real eps = pow(Real(2, prec), -(ctx.bits() + 8));
  long cutoff = std::max(20L, ctx.working_digits() / 2 + 10);
  for (;;) {
    // zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
    //         + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1) + R
    // and for real s > 1, |R| is below the first omitted correction.
    Real sum(prec);
    for (long n = 1; n < cutoff; ++n) sum += pow(Real(n, prec), -s);
    const Real big_n(cutoff, prec);
    sum += pow(big_n, 1 - s) / (s - 1);
    sum += pow(big_n, -s) / 2L;

    Real n_power = pow(big_n, -s - 1);  // N^(-s-2j+1) at j = 1
    const Real inv_n2 = Real(1, prec) / (big_n * big_n);
    Rational rising = s;  // s(s+1)...(s+2j-2)
    bool converged = false;
    for (long j = 1; j <= 4 * cutoff; ++j) {
      const Rational coeff = bernoulli(2 * j) / factorial(2 * j) * rising;
      const Real term = Real(coeff, prec) * n_power;
      if (abs(term) < eps) {
        converged = true;
        break;
      }
      sum += term;
      rising *= Rational((s + 2 * j - 1) * (s + 2 * j));
      n_power *= inv_n2;
    }
    if (converged) {
      Real out(ctx.bits());
      mpfr_set(out.get(), sum.get(), MPFR_RNDN);
      return out;
    }
    cutoff *= 2;
  }
}

}  // namespace lzeta
