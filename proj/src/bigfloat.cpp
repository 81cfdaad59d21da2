#include "lzeta/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Raise the precision of `x` (keeping its value) if `prec` is larger.
void widen(Real& x, mpfr_prec_t prec) {
  if (x.precision() < prec) mpfr_prec_round(x.get(), prec, kRnd);
}

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, kRnd);
}

Real::Real(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, mpfr_prec_t prec) {
  Real out(prec);
  std::string buf(text);
  if (mpfr_set_str(out.value_, buf.c_str(), 10, kRnd) != 0) {
    throw InvalidArgument("not a decimal number: '" + buf + "'");
  }
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

long Real::log10_floor() const {
  if (is_zero()) return -1000000000L;
  Real a = abs(*this);
  mpfr_log10(a.get(), a.get(), MPFR_RNDD);
  return static_cast<long>(std::floor(mpfr_get_d(a.get(), MPFR_RNDD)));
}

std::string Real::to_decimal(long digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::string raw = take_mpfr_string(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDZ));
  std::string sign;
  if (!raw.empty() && raw.front() == '-') {
    sign = "-";
    raw.erase(0, 1);
  }
  std::string out;
  if (exp10 > 0) {
    const auto e = static_cast<size_t>(exp10);
    if (e >= raw.size()) {
      out = raw + std::string(e - raw.size(), '0');
    } else {
      out = raw.substr(0, e) + "." + raw.substr(e);
    }
  } else {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + raw;
  }
  return sign + out;
}

std::string Real::to_scientific(int digits) const {
  if (is_zero()) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t exp10 = 0;
  std::string raw = take_mpfr_string(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN));
  std::string sign;
  if (raw.front() == '-') {
    sign = "-";
    raw.erase(0, 1);
  }
  std::string mant = raw.substr(0, 1);
  if (raw.size() > 1) mant += "." + raw.substr(1);
  return sign + mant + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.get(), rhs.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.get(), rhs.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& lhs, const Real& rhs) { return mpfr_equal_p(lhs.get(), rhs.get()) != 0; }

std::partial_ordering operator<=>(const Real& lhs, long rhs) {
  if (mpfr_nan_p(lhs.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(lhs.get(), rhs);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& lhs, long rhs) { return mpfr_cmp_si(lhs.get(), rhs) == 0; }

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), kRnd);
  return out;
}

#define LZETA_UNARY(name, fn)            \
  Real name(const Real& x) {             \
    Real out(x.precision());             \
    fn(out.get(), x.get(), kRnd);        \
    return out;                          \
  }

LZETA_UNARY(sqrt, mpfr_sqrt)
LZETA_UNARY(exp, mpfr_exp)
LZETA_UNARY(log, mpfr_log)
LZETA_UNARY(sinh, mpfr_sinh)
LZETA_UNARY(cosh, mpfr_cosh)
LZETA_UNARY(cos, mpfr_cos)
LZETA_UNARY(sin, mpfr_sin)

#undef LZETA_UNARY

Real atan2(const Real& y, const Real& x) {
  Real out(joint(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), kRnd);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, kRnd);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(joint(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), kRnd);
  return out;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real const_pi(mpfr_prec_t prec) {
  Real out(prec);
  mpfr_const_pi(out.get(), kRnd);
  return out;
}

Real pow10(long exponent, mpfr_prec_t prec) {
  Real ten(10, prec);
  return pow(ten, exponent);
}

// ---- Complex -------------------------------------------------------------

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  if (rhs.im.is_zero()) {
    re *= rhs.re;
    im *= rhs.re;
    return *this;
  }
  if (im.is_zero()) {
    Real r = re;
    re = r * rhs.re;
    im = r * rhs.im;
    return *this;
  }
  Real new_re = re * rhs.re - im * rhs.im;
  Real new_im = re * rhs.im + im * rhs.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.re.is_zero() && rhs.im.is_zero()) throw DivisionByZero("complex division by zero");
  if (rhs.im.is_zero()) {
    re /= rhs.re;
    im /= rhs.re;
    return *this;
  }
  return *this *= inverse(rhs);
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex Complex::operator-() const { return Complex(-re, -im); }

Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }
Complex operator*(const Real& lhs, Complex rhs) { return rhs *= lhs; }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real abs(const Complex& z) {
  Real out(z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), kRnd);
  return out;
}

Complex exp(const Complex& z) {
  Real mag = exp(z.re);
  if (z.im.is_zero()) return Complex(std::move(mag));
  return Complex(mag * cos(z.im), mag * sin(z.im));
}

Complex log(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  return Complex(log(abs(z)), atan2(z.im, z.re));
}

Complex pow(const Complex& base, long exponent) {
  if (exponent < 0) return pow(inverse(base), -exponent);
  Complex result(Real(1, base.precision()));
  Complex b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

Complex sinh(const Complex& z) {
  if (z.im.is_zero()) return Complex(sinh(z.re));
  return Complex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}

Complex cosh(const Complex& z) {
  if (z.im.is_zero()) return Complex(cosh(z.re));
  return Complex(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

Complex inverse(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DivisionByZero("inverse of complex zero");
  if (z.im.is_zero()) {
    Real one(1, z.precision());
    return Complex(one / z.re);
  }
  Real norm = z.re * z.re + z.im * z.im;
  return Complex(z.re / norm, -z.im / norm);
}

}  // namespace lzeta
