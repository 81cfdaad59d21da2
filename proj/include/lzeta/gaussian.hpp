#pragma once

#include <string>

#include "lzeta/rational.hpp"

namespace lzeta {

/// x + iy with rational parts. A field, so every nonzero element (in
/// particular 1+i) has an exact inverse.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real, long imag) : re(real), im(imag) {}

  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs);
GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs);
GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs);
GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs);

GaussianRational conj(const GaussianRational& z);
/// |z|^2
Rational norm(const GaussianRational& z);
GaussianRational inverse(const GaussianRational& z);

/// Exact z^n by square-and-multiply; n < 0 goes through the exact inverse.
/// Throws DivisionByZero for z = 0, n < 0.
GaussianRational gaussian_pow(const GaussianRational& z, long n);

/// "re+im*i" with exact rational parts, e.g. "-7-24*i", "1/2".
std::string to_string(const GaussianRational& z);

}  // namespace lzeta
