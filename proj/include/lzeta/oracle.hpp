#pragma once

#include "lzeta/bigfloat.hpp"
#include "lzeta/precision.hpp"

namespace lzeta {

// Reference values computed without any Lambert-series machinery, so they can
// check the Lambert formulas without circularity. Each is accurate to the full
// working precision of `ctx`.

/// zeta(s), s >= 2, by direct summation plus Euler-Maclaurin tail correction.
Real oracle_zeta(long s, const PrecisionContext& ctx);

/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
Real oracle_pi(const PrecisionContext& ctx);

/// log p for p in {2, 3, 5} from atanh(1/x) series.
Real oracle_log(long p, const PrecisionContext& ctx);

}  // namespace lzeta
