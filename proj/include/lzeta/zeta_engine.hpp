#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lzeta/bigfloat.hpp"
#include "lzeta/precision.hpp"
#include "lzeta/table.hpp"

namespace lzeta {

/// A constant assembled from a coefficient table.
struct ConstantResult {
  std::string constant_id;
  std::string method_id;
  Real value;                  // at working precision
  std::string decimal_value;   // target digits, truncated
  Real error_bound;            // truncation tails plus rounding
  std::vector<std::pair<std::string, long>> terms_used;  // per series, in table order
  double wall_time = 0;        // seconds
};

/// Sums coeff * basis over the table. Each series gets the absolute budget
/// 10^-(target + guard/2) / max(|coeff|, 1) / #entries.
/// Throws ConvergenceError if the bound ends up >= 10^-target.
ConstantResult assemble(const CoefficientTable& table, const PrecisionContext& ctx);

ConstantResult zeta_odd(long s, std::string_view method, const PrecisionContext& ctx);
ConstantResult pi_power(long n, std::string_view method, const PrecisionContext& ctx);
ConstantResult log_prime(long p, const PrecisionContext& ctx);

/// pi^3 sqrt(15)/100 + e^{-sqrt(15) pi} [9/4 + (4/sqrt(15)) sinh(sqrt(15) pi/2)]:
/// zeta(3) with every series cut after its first term.
Real zeta3_first_order(const PrecisionContext& ctx);

/// Reference value for "zeta(n)", "pi", "pi^n" or "log(p)" from the oracles.
Real oracle_constant(std::string_view constant_id, const PrecisionContext& ctx);

struct ConvergencePoint {
  long terms;
  double correct_digits;
};

struct ConvergenceProfile {
  std::string constant_id;
  std::string method_id;
  double rate;  // decay exponent r of the dominant nome e^{-r pi}
  std::vector<ConvergencePoint> points;
  double slope;  // least squares over N >= 3, saturated points dropped
  long oracle_digits;
};

/// Cuts every series at the dominant (slowest) nome after N = 1..max_terms
/// terms, evaluates the rest in full and compares against the oracle.
/// Working precision is chosen so the oracle does not saturate first.
ConvergenceProfile convergence_profile(const CoefficientTable& table, long max_terms);

/// "key: value" lines, or compact JSON with keys in a fixed order.
std::string format_result(const ConstantResult& r, bool json, bool timing);
std::string format_profile(const ConvergenceProfile& p, bool json);

}  // namespace lzeta
