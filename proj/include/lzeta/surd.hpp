#pragma once

#include <string>
#include <string_view>

#include "lzeta/rational.hpp"

namespace lzeta {

/// Exact (a + b*sqrt(m)) * 2^(e/2) with m in {3, 7, 15}.
///
/// Normalized so that e is 0 or 1: whole powers of two are folded into a and b.
/// Sums require equal m and equal e; exact zero adds to anything. The 2^(e/2)
/// factor is what lets cos(j*theta) for cot(theta) = sqrt(7) stay exact.
class QuadraticSurd {
 public:
  QuadraticSurd(Rational a, Rational b, int radicand, long half_two_exponent = 0);

  static QuadraticSurd rational(Rational a, int radicand) { return {std::move(a), 0, radicand}; }
  static QuadraticSurd zero(int radicand) { return {0, 0, radicand}; }
  static QuadraticSurd one(int radicand) { return {1, 0, radicand}; }
  /// 2^(e/2) in the ring for `radicand`.
  static QuadraticSurd sqrt2_power(long e, int radicand) { return {1, 0, radicand, e}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int radicand() const { return m_; }
  long half_two_exponent() const { return e_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// True when the value is the plain rational a().
  bool is_rational() const { return b_ == 0 && e_ == 0; }

  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const Rational& rhs);
  QuadraticSurd& operator/=(const Rational& rhs);
  QuadraticSurd operator-() const;

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  void normalize();

  Rational a_;
  Rational b_;
  int m_;
  long e_;
};

QuadraticSurd operator+(QuadraticSurd lhs, const QuadraticSurd& rhs);
QuadraticSurd operator-(QuadraticSurd lhs, const QuadraticSurd& rhs);
QuadraticSurd operator*(QuadraticSurd lhs, const QuadraticSurd& rhs);
QuadraticSurd operator/(QuadraticSurd lhs, const QuadraticSurd& rhs);
QuadraticSurd operator*(QuadraticSurd lhs, const Rational& rhs);
QuadraticSurd operator*(const Rational& lhs, QuadraticSurd rhs);
QuadraticSurd operator/(QuadraticSurd lhs, const Rational& rhs);

QuadraticSurd inverse(const QuadraticSurd& x);

/// Exact value strings: "9/4", "(29/1980)*sqrt(7)", "1/2+(3/4)*sqrt(15)",
/// "((1/4)*sqrt(7))*sqrt(2)". `parse_surd` reads the same grammar.
std::string to_string(const QuadraticSurd& x);
QuadraticSurd parse_surd(std::string_view text, int default_radicand);

enum class TrigKind { kSin, kCos };

/// Exact cos(j*theta) or sin(j*theta) where cot(theta) = sqrt(m), built by the
/// angle-addition recurrence. Negative j allowed.
QuadraticSurd surd_trig(int m, long multiple, TrigKind kind);

bool is_supported_radicand(int m);

}  // namespace lzeta
