#include "lzeta/exact_eval.hpp"

namespace lzeta {

Real to_real(const Rational& x, mpfr_prec_t prec) { return Real(x, prec); }

Real to_real(const QuadraticSurd& x, mpfr_prec_t prec) {
  // Evaluate with a few spare bits so the final rounding dominates.
  const mpfr_prec_t wide = prec + 32;
  Real v(x.a(), wide);
  if (x.b() != 0) v += Real(x.b(), wide) * sqrt(Real(x.radicand(), wide));
  if (x.half_two_exponent() != 0) v *= sqrt(Real(2, wide));
  Real out(prec);
  mpfr_set(out.get(), v.get(), MPFR_RNDN);
  return out;
}

Complex to_complex(const GaussianRational& x, mpfr_prec_t prec) {
  return Complex(Real(x.re, prec), Real(x.im, prec));
}

Real eval_exact(const Rational& x, const PrecisionContext& ctx) { return to_real(x, ctx.bits()); }
Real eval_exact(const QuadraticSurd& x, const PrecisionContext& ctx) { return to_real(x, ctx.bits()); }
Complex eval_exact(const GaussianRational& x, const PrecisionContext& ctx) {
  return to_complex(x, ctx.bits());
}

}  // namespace lzeta
