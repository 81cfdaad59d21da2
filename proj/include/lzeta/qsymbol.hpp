#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "lzeta/bigfloat.hpp"
#include "lzeta/rational.hpp"

namespace lzeta {

/// A nome given symbolically: q = e^{2*pi*i*phase} * e^{-decay*sqrt(radicand)*pi}.
///
/// Keeping q symbolic means e^{-sqrt(15)*pi} is built at working precision
/// rather than parsed from decimal text. `phase` is in turns, reduced to [0, 1):
/// 0 is a positive nome, 1/2 a negative one, 1/4 and 3/4 are +-i.
struct QSymbol {
  Rational decay;
  int radicand = 1;
  Rational phase;

  static QSymbol positive(Rational decay, int radicand = 1);
  static QSymbol negative(Rational decay, int radicand = 1);
  static QSymbol with_phase(Rational decay, Rational phase, int radicand = 1);

  bool is_real() const { return phase == 0 || phase == Rational(1, 2); }
  bool is_negative() const { return phase == Rational(1, 2); }

  /// q^p (decay and phase both scale by p).
  QSymbol power(long p) const;

  /// decay * sqrt(radicand) as a double; orders nomes by how fast they converge.
  double rate() const;

  Real magnitude(mpfr_prec_t prec) const;
  /// Exact +-1 / +-i phases give a q with an exactly zero imaginary or real part.
  Complex value(mpfr_prec_t prec) const;

  friend std::strong_ordering operator<=>(const QSymbol& a, const QSymbol& b);
  friend bool operator==(const QSymbol& a, const QSymbol& b) = default;
};

/// "exp(-2*pi)", "-exp(-3*pi)", "exp(-2*sqrt(15)*pi)", "i*exp(-1/2*pi)".
std::string to_string(const QSymbol& q);
QSymbol parse_qsymbol(std::string_view text);

}  // namespace lzeta
