#include <random>

#include "doctest.h"

#include "lzeta/error.hpp"
#include "lzeta/lambert.hpp"
#include "lzeta/oracle.hpp"

using namespace lzeta;

namespace {

Real dec(const char* text, mpfr_prec_t prec) { return Real::parse(text, prec); }

bool close(const Real& a, const Real& b, long digits) {
  return abs(a - b) < pow10(-digits, a.precision());
}

}  // namespace

TEST_CASE("oracles agree with closed forms and published digits") {
  const auto ctx = make_context(60);
  const mpfr_prec_t prec = ctx.bits();
  const Real pi = oracle_pi(ctx);
  CHECK(close(pi, const_pi(prec), 75));
  CHECK(close(oracle_zeta(2, ctx), pi * pi / 6L, 75));
  CHECK(close(oracle_zeta(4, ctx), pow(pi, 4) / 90L, 75));
  CHECK(close(oracle_zeta(3, ctx), dec("1.2020569031595942853997381615114499907649862923404988817922", prec), 57));
  CHECK(close(oracle_log(2, ctx), log(Real(2, prec)), 75));
  CHECK(close(oracle_log(3, ctx), log(Real(3, prec)), 75));
  CHECK(close(oracle_log(5, ctx), log(Real(5, prec)), 75));
  CHECK_THROWS_AS(oracle_zeta(1, ctx), InvalidArgument);
  CHECK_THROWS_AS(oracle_log(7, ctx), InvalidArgument);
}

TEST_CASE("partial sums by hand") {
  const auto ctx = make_context(30);
  const mpfr_prec_t prec = ctx.bits();
  const Complex half(Real(Rational(1, 2), prec));
  CHECK(close(lambert_partial_sum({half, -1L}, 1, ctx).re, Real(1, prec), 35));
  // 1 + 1/6 + 1/21
  CHECK(close(lambert_partial_sum({half, -1L}, 3, ctx).re, Real(Rational(17, 14), prec), 35));
  const Complex minus_half(Real(Rational(-1, 2), prec));
  CHECK(close(lambert_partial_sum({minus_half, -3L}, 2, ctx).re, Real(Rational(-7, 24), prec), 35));
  CHECK_THROWS_AS(lambert_partial_sum({Complex(Real(1, prec)), -1L}, 3, ctx), DomainError);
}

TEST_CASE("tail bounds") {
  const auto ctx = make_context(30);
  const mpfr_prec_t prec = ctx.bits();
  const Real q = exp(-const_pi(prec) * 2L);
  const Real b = tail_bound(q, -3, 1);
  CHECK(b.to_double() == doctest::Approx(3.5198e-6).epsilon(1e-3));
  CHECK(tail_bound(Real(Rational(1, 2), prec), -1, 0) == 2);
  CHECK(tail_bound(Real(prec), -1, 4).is_zero());
  CHECK_THROWS_AS(tail_bound(q, 0.5, 3), InvalidArgument);
}

TEST_CASE("lambert_eval at e^{-2 pi}") {
  const auto ctx = make_context(40);
  const mpfr_prec_t prec = ctx.bits();
  const LambertPoint pt(QSymbol::positive(2), -3, prec);
  // N = 10 is the smallest N with e^{-2 pi (N+1)} / (1 - e^{-2 pi})^2 < 1e-30
  const SeriesResult r = lambert_eval(pt, pow10(-30, prec), ctx);
  CHECK(r.terms_used == 10);
  CHECK(r.tail_bound < pow10(-30, prec));
  CHECK(!(tail_bound(abs(pt.q), -3, 9) < pow10(-30, prec)));
  // (7 pi^3/180 - zeta(3)) / 2 from the oracles
  const Real expected = (pow(oracle_pi(ctx), 3) * 7L / 180L - oracle_zeta(3, ctx)) / 2L;
  CHECK(close(r.value.re, expected, 29));
  CHECK(r.value.im.is_zero());

  const SeriesResult zero = lambert_eval({Complex(prec), -3L}, pow10(-30, prec), ctx);
  CHECK(zero.value.re.is_zero());
  CHECK(zero.terms_used == 1);
}

TEST_CASE("term cap raises a convergence error") {
  const auto ctx = make_context(30);
  const mpfr_prec_t prec = ctx.bits();
  const Complex near_one(Real(Rational(999999, 1000000), prec));
  CHECK_THROWS_AS(lambert_eval({near_one, -1L}, pow10(-30, prec), ctx), ConvergenceError);
}

TEST_CASE("derivative series") {
  const auto ctx = make_context(60);
  const mpfr_prec_t prec = ctx.bits();
  const Complex half(Real(Rational(1, 2), prec));
  // 1/(1/2)^2 + (1/2)(1/2)/(3/4)^2
  CHECK(close(lambert_derivative_partial_sum({half, -1L}, 2, ctx).re, Real(Rational(44, 9), prec), 60));
  const SeriesResult at_zero = lambert_derivative_eval({Complex(prec), -1L}, pow10(-30, prec), ctx);
  CHECK(close(at_zero.value.re, Real(1, prec), 60));

  // central difference with h = 1e-15 is good to about h^2 * L'''
  const Real q = exp(-const_pi(prec) * 2L);
  const Real h = pow10(-15, prec);
  const Real target = pow10(-70, prec);
  const Real up = lambert_eval({Complex(q + h), -5L}, target, ctx).value.re;
  const Real down = lambert_eval({Complex(q - h), -5L}, target, ctx).value.re;
  const Real fd = (up - down) / (h * 2L);
  const SeriesResult d = lambert_derivative_eval({Complex(q), -5L}, target, ctx);
  CHECK(close(fd, d.value.re, 25));
}

TEST_CASE("sech series") {
  const auto ctx = make_context(50);
  const mpfr_prec_t prec = ctx.bits();
  const Real q = QSymbol::positive(1, 15).magnitude(prec);
  const Real first = sech_partial_sum(q, -1, 0, ctx);
  CHECK(first.to_double() == doctest::Approx(-4.5596e-3).epsilon(1e-4));
  CHECK(first.sign() < 0);

  // S_q(s) = i [L_{i sqrt q}(s) - L_{-i sqrt q}(s)]
  const auto ctx_wide = make_context(50);
  for (const long s : {-5L, -1L, 0L}) {
    for (const Real& qq : {exp(-const_pi(prec)), Real(Rational(1, 2), prec)}) {
      const Real target = pow10(-60, prec);
      const SeriesResult sech = sech_series(qq, s, target, ctx_wide);
      const Real root = sqrt(qq);
      const Complex plus(Real(prec), root);
      const Complex minus(Real(prec), -root);
      const Complex diff = lambert_eval({plus, s}, target, ctx_wide).value -
                           lambert_eval({minus, s}, target, ctx_wide).value;
      // i * (x + iy) = -y + ix
      CHECK(close(-diff.im, sech.value.re, 55));
      CHECK(abs(diff.re) < pow10(-55, prec));
    }
  }
  CHECK_THROWS_AS(sech_series(Real(1, prec), -1, pow10(-10, prec), ctx), DomainError);
}

TEST_CASE("divisor sums") {
  CHECK(divisor_sigma(-1, 6) == 2);
  CHECK(divisor_sigma(-3, 4) == Rational(73, 64));
  CHECK(divisor_sigma(5, 1) == 1);
  CHECK(divisor_sigma(0, 12) == 6);
  CHECK_THROWS_AS(divisor_sigma(1, 0), InvalidArgument);
  const auto e = lambert_q_expansion(-1, 3);
  REQUIRE(e.size() == 3);
  CHECK(e[1] == Rational(3, 2));
  CHECK(e[2] == Rational(4, 3));
  const auto d = lambert_q_expansion(0, 4);
  CHECK(d[3] == 3);
}

TEST_CASE("q-expansion agrees with exact geometric expansion") {
  // q^n / (1 - q^n) = sum_{m>=1} q^{nm}; collect through q^order exactly
  const long order = 40;
  for (long s = -9; s <= 0; ++s) {
    std::vector<Rational> coeffs(order + 1);
    for (long n = 1; n <= order; ++n) {
      for (long m = n; m <= order; m += n) coeffs[m] += pow(Rational(n), s);
    }
    const auto expansion = lambert_q_expansion(s, order);
    for (long n = 1; n <= order; ++n) CHECK(expansion[n - 1] == coeffs[n]);
  }
}

TEST_CASE("partial sums: tail bound soundness and conjugation") {
  const auto ctx = make_context(40);
  const mpfr_prec_t prec = ctx.bits();
  std::mt19937_64 rng(20251015);
  std::uniform_real_distribution<double> radius(0.05, 0.9);
  std::uniform_real_distribution<double> angle(-3.1, 3.1);
  std::uniform_int_distribution<long> exponent(-9, 0);
  std::uniform_int_distribution<long> count(1, 30);
  for (int trial = 0; trial < 40; ++trial) {
    const double r = radius(rng);
    const double a = angle(rng);
    Real re(prec), im(prec);
    mpfr_set_d(re.get(), r * std::cos(a), MPFR_RNDN);
    mpfr_set_d(im.get(), r * std::sin(a), MPFR_RNDN);
    const Complex q(re, im);
    const long s = exponent(rng);
    const long n = count(rng);
    const Complex a1 = lambert_partial_sum({q, s}, n, ctx);
    const Complex a2 = lambert_partial_sum({q, s}, 2 * n, ctx);
    CHECK(abs(a2 - a1) <= tail_bound(abs(q), static_cast<double>(s), n));
    const Complex c = lambert_partial_sum({conj(q), s}, n, ctx);
    CHECK(abs(c - conj(a1)) < pow10(-45, prec));
  }
}
