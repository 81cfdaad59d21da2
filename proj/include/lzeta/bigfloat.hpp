#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace lzeta {

/// Owning MPFR scalar. Binary operations round to the larger of the two
/// operand precisions (round-to-nearest throughout).
class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  Real(const mpq_class& value, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real parse(std::string_view text, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// floor(log10|x|) estimate; very negative for zero.
  long log10_floor() const;

  /// `digits` significant digits, truncated toward zero, fixed notation.
  std::string to_decimal(long digits) const;
  /// Short scientific rendering such as "3.21e-103".
  std::string to_scientific(int digits = 3) const;

 private:
  mpfr_t value_;
};

Real operator+(Real lhs, const Real& rhs);
Real operator-(Real lhs, const Real& rhs);
Real operator*(Real lhs, const Real& rhs);
Real operator/(Real lhs, const Real& rhs);
Real operator*(Real lhs, long rhs);
Real operator*(long lhs, Real rhs);
Real operator/(Real lhs, long rhs);

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);
bool operator==(const Real& lhs, const Real& rhs);
std::partial_ordering operator<=>(const Real& lhs, long rhs);
bool operator==(const Real& lhs, long rhs);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, long exponent);
Real pow(const Real& base, const Real& exponent);
Real max(const Real& a, const Real& b);
Real const_pi(mpfr_prec_t prec);
/// 10^exponent at the given precision.
Real pow10(long exponent, mpfr_prec_t prec);

/// Complex number over two MPFR reals (principal branches throughout).
struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  explicit Complex(Real real) : re(std::move(real)), im(re.precision()) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex operator-() const;
};

Complex operator+(Complex lhs, const Complex& rhs);
Complex operator-(Complex lhs, const Complex& rhs);
Complex operator*(Complex lhs, const Complex& rhs);
Complex operator/(Complex lhs, const Complex& rhs);
Complex operator*(Complex lhs, const Real& rhs);
Complex operator*(const Real& lhs, Complex rhs);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm, arg in (-pi, pi].
Complex log(const Complex& z);
Complex pow(const Complex& base, long exponent);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex inverse(const Complex& z);

}  // namespace lzeta
