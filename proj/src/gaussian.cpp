#include "lzeta/gaussian.hpp"

#include "lzeta/error.hpp"

namespace lzeta {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational r = re * rhs.re - im * rhs.im;
  Rational i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  return *this *= inverse(rhs);
}

GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

Rational norm(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

GaussianRational inverse(const GaussianRational& z) {
  if (z.is_zero()) throw DivisionByZero("inverse of Gaussian zero");
  const Rational n = norm(z);
  return {z.re / n, -z.im / n};
}

GaussianRational gaussian_pow(const GaussianRational& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw DivisionByZero("Gaussian zero to a negative power");
    return gaussian_pow(inverse(z), -n);
  }
  GaussianRational result(1, 0);
  GaussianRational base = z;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag = to_string(abs(z.im)) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

}  // namespace lzeta
