#pragma once

#include "lzeta/bigfloat.hpp"
#include "lzeta/gaussian.hpp"
#include "lzeta/precision.hpp"
#include "lzeta/rational.hpp"
#include "lzeta/surd.hpp"

namespace lzeta {

/// Round an exact value to the working precision of `ctx`.
Real eval_exact(const Rational& x, const PrecisionContext& ctx);
Real eval_exact(const QuadraticSurd& x, const PrecisionContext& ctx);
Complex eval_exact(const GaussianRational& x, const PrecisionContext& ctx);

Real to_real(const Rational& x, mpfr_prec_t prec);
Real to_real(const QuadraticSurd& x, mpfr_prec_t prec);
Complex to_complex(const GaussianRational& x, mpfr_prec_t prec);

}  // namespace lzeta
