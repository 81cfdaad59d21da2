#include "lzeta/precision.hpp"

#include <cmath>
#include <string>

#include "lzeta/error.hpp"

namespace lzeta {

mpfr_prec_t digits_to_bits(long digits) {
  // log2(10) = 3.3219...
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 8;
}

mpfr_prec_t PrecisionContext::bits() const { return digits_to_bits(working_digits()); }

PrecisionContext PrecisionContext::with_guard(long target_digits, long guard_digits) {
  if (target_digits < 1) {
    throw InvalidArgument("target digits must be positive, got " + std::to_string(target_digits));
  }
  if (guard_digits < 20) {
    throw InvalidArgument("guard digits must be at least 20, got " + std::to_string(guard_digits));
  }
  return PrecisionContext(target_digits, guard_digits);
}

PrecisionContext make_context(long target_digits) {
  if (target_digits < 1) {
    throw InvalidArgument("target digits must be positive, got " + std::to_string(target_digits));
  }
  long guard = (target_digits + 9) / 10;
  if (guard < 20) guard = 20;
  return PrecisionContext::with_guard(target_digits, guard);
}

}  // namespace lzeta
