#include "doctest.h"

#include "lzeta/bernoulli.hpp"
#include "lzeta/bigfloat.hpp"
#include "lzeta/error.hpp"
#include "lzeta/exact_eval.hpp"
#include "lzeta/gaussian.hpp"
#include "lzeta/precision.hpp"
#include "lzeta/qsymbol.hpp"
#include "lzeta/rational.hpp"
#include "lzeta/surd.hpp"

using namespace lzeta;

TEST_CASE("precision guard policy") {
  CHECK(make_context(50).guard_digits() == 20);
  CHECK(make_context(1000).guard_digits() == 100);
  CHECK(make_context(201).guard_digits() == 21);
  CHECK(make_context(1000).working_digits() == 1100);
  CHECK_THROWS_AS(PrecisionContext::with_guard(10, 5), InvalidArgument);
  CHECK_THROWS_AS(make_context(0), InvalidArgument);
}

TEST_CASE("rationals stay canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("1/x"), InvalidArgument);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(13) == 0);
  CHECK(bernoulli(30) == Rational(Integer("8615841276005"), 14322));
}

TEST_CASE("gaussian rational powers") {
  const GaussianRational z(1, 2);
  CHECK(gaussian_pow(z, 4) == GaussianRational(-7, -24));
  CHECK(gaussian_pow(z, 0) == GaussianRational(1, 0));
  CHECK(gaussian_pow(GaussianRational(1, 1), -2) == GaussianRational(0, Rational(-1, 2)));
  CHECK(gaussian_pow(GaussianRational(1, 1), 8) == GaussianRational(16, 0));
  CHECK_THROWS_AS(gaussian_pow(GaussianRational(0, 0), -1), DivisionByZero);
  CHECK(to_string(GaussianRational(-7, -24)) == "-7-24*i");
  CHECK(to_string(GaussianRational(Rational(1, 2), 0)) == "1/2");
  const GaussianRational w(Rational(3, 5), Rational(-1, 7));
  CHECK(w * inverse(w) == GaussianRational(1, 0));
}

TEST_CASE("quadratic surds") {
  const QuadraticSurd x(1, 2, 7);
  const QuadraticSurd y(Rational(1, 3), -1, 7);
  CHECK((x * inverse(x)) == QuadraticSurd::one(7));
  CHECK((x + y) == QuadraticSurd(Rational(4, 3), 1, 7));
  // sqrt(2)^3 = 2*sqrt(2)
  CHECK((QuadraticSurd::sqrt2_power(1, 7) * QuadraticSurd::sqrt2_power(2, 7)) ==
        QuadraticSurd(2, 0, 7, 1));
  CHECK_THROWS_AS(QuadraticSurd(1, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(x + QuadraticSurd(1, 1, 15), DomainError);
  CHECK((QuadraticSurd::zero(15) + x) == x);
  CHECK(to_string(QuadraticSurd(0, Rational(29, 1980), 7)) == "(29/1980)*sqrt(7)");
  CHECK(to_string(QuadraticSurd(Rational(9, 4), 0, 7)) == "9/4");
  for (const auto& s : {"9/4", "(29/1980)*sqrt(7)", "1/2+(3/4)*sqrt(15)", "-2+(-1/3)*sqrt(3)",
                        "((1/4)*sqrt(7))*sqrt(2)"}) {
    CHECK(to_string(parse_surd(s, 7)) == std::string(s));
  }
}

TEST_CASE("exact trigonometry of cot(theta) = sqrt(m)") {
  CHECK(surd_trig(15, 2, TrigKind::kCos) == QuadraticSurd::rational(Rational(7, 8), 15));
  CHECK(surd_trig(7, 2, TrigKind::kCos) == QuadraticSurd::rational(Rational(3, 4), 7));
  CHECK(surd_trig(3, 2, TrigKind::kCos) == QuadraticSurd::rational(Rational(1, 2), 3));
  CHECK(surd_trig(3, 3, TrigKind::kSin) == QuadraticSurd::one(3));
  CHECK(surd_trig(15, -1, TrigKind::kSin) == -surd_trig(15, 1, TrigKind::kSin));
  // cross-check against floating trig at 60 digits
  const mpfr_prec_t prec = digits_to_bits(60);
  for (int m : {3, 7, 15}) {
    const Real theta = atan2(Real(1, prec), sqrt(Real(m, prec)));
    for (long j = -9; j <= 9; ++j) {
      const Real c = to_real(surd_trig(m, j, TrigKind::kCos), prec) - cos(theta * j);
      const Real s = to_real(surd_trig(m, j, TrigKind::kSin), prec) - sin(theta * j);
      CHECK(abs(c) < pow10(-55, prec));
      CHECK(abs(s) < pow10(-55, prec));
    }
  }
}

TEST_CASE("big-float rendering truncates") {
  const mpfr_prec_t prec = digits_to_bits(40);
  CHECK(sqrt(Real(15, prec)).to_decimal(20) == "3.8729833462074168851");
  CHECK(Real(Rational(2, 3), prec).to_decimal(5) == "0.66666");
  CHECK(Real(Rational(-2, 3), prec).to_decimal(5) == "-0.66666");
  CHECK(const_pi(prec).to_decimal(10) == "3.141592653");
  CHECK(Real(Rational(321, 100), prec).to_scientific(3) == "3.21e0");
}

TEST_CASE("complex helpers") {
  const mpfr_prec_t prec = digits_to_bits(40);
  const Complex z(Real(1, prec), Real(2, prec));
  const Complex p = pow(z, 4);
  CHECK(abs(p.re - Real(-7, prec)) < pow10(-35, prec));
  CHECK(abs(p.im - Real(-24, prec)) < pow10(-35, prec));
  const Complex back = exp(log(z));
  CHECK(abs(back.re - z.re) < pow10(-35, prec));
  CHECK(abs(back.im - z.im) < pow10(-35, prec));
}

TEST_CASE("symbolic nomes") {
  for (const auto& s : {"exp(-2*pi)", "-exp(-3*pi)", "exp(-2*sqrt(15)*pi)", "-exp(-sqrt(7)*pi)",
                        "i*exp(-1/2*pi)", "-i*exp(-pi)", "exp(2*pi*i*1/3)*exp(-2/3*pi)"}) {
    CHECK(to_string(parse_qsymbol(s)) == s);
  }
  CHECK(QSymbol::negative(1).power(2) == QSymbol::positive(2));
  CHECK(QSymbol::with_phase(1, Rational(1, 4)).power(4) == QSymbol::positive(4));
  const mpfr_prec_t prec = digits_to_bits(30);
  const Complex v = QSymbol::with_phase(1, Rational(1, 4)).value(prec);
  CHECK(v.re.is_zero());
  CHECK(abs(v.im - exp(-const_pi(prec))) < pow10(-40, prec));
  CHECK_THROWS_AS(parse_qsymbol("exp(2*pi)"), InvalidArgument);
}
