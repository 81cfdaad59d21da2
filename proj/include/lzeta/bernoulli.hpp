#pragma once

#include "lzeta/rational.hpp"

namespace lzeta {

/// Exact Bernoulli number B_n with B_1 = -1/2, from the recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0. Memoized behind a mutex, so concurrent
/// callers see the same values a fresh computation would give.
Rational bernoulli(unsigned long n);

}  // namespace lzeta
