#pragma once

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lzeta/qsymbol.hpp"
#include "lzeta/rational.hpp"
#include "lzeta/surd.hpp"

namespace lzeta {

/// Exact coefficient: a plain rational, or an element of Q(sqrt m) when the
/// formula carries surds. Arithmetic promotes to the surd ring and demotes
/// back whenever the surd part cancels.
using Coefficient = std::variant<Rational, QuadraticSurd>;

Coefficient normalize(Coefficient c);
Coefficient operator+(const Coefficient& x, const Coefficient& y);
Coefficient operator-(const Coefficient& x, const Coefficient& y);
Coefficient operator*(const Coefficient& x, const Coefficient& y);
Coefficient operator/(const Coefficient& x, const Coefficient& y);
Coefficient operator-(const Coefficient& x);
bool is_zero(const Coefficient& c);
/// "-296/355", "(29/1980)*sqrt(7)"
std::string to_string(const Coefficient& c);
/// Inverse of to_string; bare rationals come back as Rational.
Coefficient parse_coefficient(std::string_view text);

/// One series (or power of pi) that a coefficient multiplies.
struct BasisTerm {
  enum class Kind { kPiPower, kLambert, kSech, kLambertDerivative };

  Kind kind = Kind::kPiPower;
  long power = 0;  // exponent of pi for kPiPower
  QSymbol q{1, 1, 0};
  long s = 0;

  static BasisTerm pi_power(long n);
  static BasisTerm lambert(QSymbol q, long s);
  static BasisTerm sech(QSymbol q, long s);
  /// 2*pi*q*dL/dq at q, the combination the derivative formula uses.
  static BasisTerm lambert_derivative(QSymbol q, long s);

  friend std::strong_ordering operator<=>(const BasisTerm& a, const BasisTerm& b);
  friend bool operator==(const BasisTerm& a, const BasisTerm& b);
};

/// "pi^5", "L[-exp(-3*pi)](-5)", "S[exp(-sqrt(15)*pi)](-3)", "2*pi*q*L'[exp(-2*pi)](-5)"
std::string to_string(const BasisTerm& b);
const char* kind_name(BasisTerm::Kind kind);

struct TableEntry {
  BasisTerm basis;
  Coefficient coeff;
};

/// A formula instance: constant = sum of coeff * basis over the entries.
struct CoefficientTable {
  std::string constant_id;  // "zeta(5)", "pi^3", "log(2)"
  std::string method_id;
  std::vector<TableEntry> entries;
  /// Named intermediates of the closed form (a_k, b_jk, ...) as exact strings.
  std::vector<std::pair<std::string, std::string>> raw;

  const Coefficient* find(const BasisTerm& basis) const;
};

/// {"constant", "method", "entries": [{"basis": {...}, "coeff": "..."}]},
/// keys in that order, compact form unless `indent` >= 0.
std::string to_json(const CoefficientTable& table, int indent = -1);
CoefficientTable table_from_json(std::string_view text);

/// Adds coeff * basis, merging with an existing entry for the same basis and
/// dropping the entry if the sum cancels.
void accumulate(std::vector<TableEntry>& entries, const BasisTerm& basis, const Coefficient& coeff);

/// Replaces each L_{-q0}(s) by -L_{q0}(s) + (2^(s+1)+2) L_{q0^2}(s) - 2^(s+1) L_{q0^4}(s)
/// (prime-2 multisection at q0^2). Tables without negative nomes come back unchanged.
CoefficientTable negative_q_rewrite(const CoefficientTable& table);

}  // namespace lzeta
