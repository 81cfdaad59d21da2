#pragma once

#include <compare>
#include <map>
#include <vector>

#include "lzeta/gaussian.hpp"
#include "lzeta/qsymbol.hpp"

namespace lzeta {

/// Unknown in a linear relation with Q(i) coefficients.
struct Symbol {
  enum class Kind { kPi, kZeta, kLog, kAngle, kLambert };

  Kind kind = Kind::kPi;
  long n = 0;  // pi power, zeta argument or log prime
  QSymbol q{1, 1, 0};
  long s = 0;
  // primitive direction (re, im), im > 0, of an argument that is not a multiple of pi/4
  long dir_re = 0;
  long dir_im = 0;

  static Symbol pi(long power);
  static Symbol zeta(long arg);
  static Symbol log(long prime);
  static Symbol angle(long re, long im);
  static Symbol lambert(QSymbol q, long s);

  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
  friend bool operator==(const Symbol& a, const Symbol& b);
};

/// sum of coefficient * symbol = 0
using Relation = std::map<Symbol, GaussianRational>;

/// The modular transformation at Gaussian t with Re t > 0, as a relation
/// between L at e^{-2 pi t}, L at e^{-2 pi / t}, a power of pi and zeta
/// (cases 2, 3) or log primes and pi (case 1, where k is ignored).
Relation transformation_relation(int which, long k, const GaussianRational& t);

/// sum_{n<p} L(q^(1/p) w^n) - (p^(s+1) + p) L(q) + p^(s+1) L(q^p) = 0 for
/// q = e^{2 pi i phase} e^{-decay pi}.
Relation multisection_relation(long p, long s, const Rational& decay, const Rational& phase = 0);

/// Reduces the relations and returns c with target = sum c_i keep_i.
/// Throws std::logic_error when the relations do not determine the target.
std::vector<GaussianRational> solve_for(const std::vector<Relation>& relations, const Symbol& target,
                                        const std::vector<Symbol>& keep);

}  // namespace lzeta
