#pragma once

#include <vector>

#include "lzeta/bigfloat.hpp"
#include "lzeta/precision.hpp"
#include "lzeta/rational.hpp"

namespace lzeta {

/// How well the two sides of an identity agree at one argument.
struct Residual {
  Real abs_residual;
  Real scale;  // max(|LHS|, |RHS|, 1)
  Real rel_residual;
  std::vector<long> terms_used;  // one entry per series evaluated
  long precision_used;           // working decimal digits

  bool passes(long digits) const;  // rel_residual < 10^-digits
};

// Modular transformation of L_{e^{-2 pi t}}(s) under t -> 1/t, for Re(t) > 0.
// Series are summed until their tail bound is below 10^-(target + 5).

/// s = -1: L_{e^{-2 pi t}} - L_{e^{-2 pi / t}} = (1/2) log t - (pi/6) sinh(log t).
Residual check_t1_case1(const Complex& t, const PrecisionContext& ctx);
/// s = -(4k-1): the symmetric form carrying -zeta(4k-1) cosh((2k-1) log t).
Residual check_t1_case2(long k, const Complex& t, const PrecisionContext& ctx);
/// s = -(4k+1): the antisymmetric form carrying +zeta(4k+1) sinh(2k log t).
Residual check_t1_case3(long k, const Complex& t, const PrecisionContext& ctx);

/// Left-hand side alone of the transformation for the given case (1, 2 or 3);
/// used by the t -> 1/t symmetry properties.
Complex transformation_lhs(int which, long k, const Complex& t, const PrecisionContext& ctx);

/// Prime multisection sum_{n<p} L_{q^(1/p) w^n}(s) = (p^(s+1) + p) L_q(s) - p^(s+1) L_{q^p}(s),
/// compared coefficient by coefficient as exact power series in q^(1/p) through
/// q^order. Root-of-unity sums are reduced exactly in Q[w]/(1 + w + ... + w^(p-1)).
/// Also checks sigma_s(lp) = (p^s + 1) sigma_s(l) - p^s sigma_s(l/p) on the way.
/// Returns the largest |LHS - RHS| coefficient difference (exactly 0 when they agree).
Rational check_multisection(long p, long s, long order);

/// L_{i sqrt q}(s) + L_{-i sqrt q}(s) against the combination of L_q, L_{q^2}, L_{q^4}.
Residual check_lemma_p4(const Real& q, long s, const PrecisionContext& ctx);

/// i [L_{i sqrt q}(s) - L_{-i sqrt q}(s)] against the sech series S_q(s).
Residual check_lemma_sech(const Real& q, long s, const PrecisionContext& ctx);

/// The zeta-free combination of six Lambert series at t/a, t, at and their
/// inverses. which = 1 covers s = -(4k+1) with k >= 0, which = 2 covers
/// s = -(4k-1) with k >= 1. Only rational a > 0 is supported.
Residual check_zeta_free(int which, long k, const Rational& a, const Complex& t, const PrecisionContext& ctx);

}  // namespace lzeta
