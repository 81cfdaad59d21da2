#pragma once

#include <mpfr.h>

namespace lzeta {

/// Decimal precision policy shared by every big-float computation.
///
/// The working precision (target + guard) is fixed for the lifetime of a
/// computation; results are cut to `target_digits` only when printed.
class PrecisionContext {
 public:
  long target_digits() const { return target_; }
  long guard_digits() const { return guard_; }
  long working_digits() const { return target_ + guard_; }

  /// Binary precision backing `working_digits()`.
  mpfr_prec_t bits() const;

  /// Context with the given target and an explicit guard (>= 20).
  static PrecisionContext with_guard(long target_digits, long guard_digits);

 private:
  PrecisionContext(long target, long guard) : target_(target), guard_(guard) {}
  long target_;
  long guard_;
};

/// Guard policy max(20, ceil(target / 10)).
PrecisionContext make_context(long target_digits);

/// Bits needed to hold `digits` decimal digits, plus a few spare.
mpfr_prec_t digits_to_bits(long digits);

}  // namespace lzeta
