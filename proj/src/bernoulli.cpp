#include "lzeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace lzeta {

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

Rational bernoulli(unsigned long n) {
  if (n >= 3 && n % 2 == 1) return Rational(0);
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  while (c.values.size() <= n) {
    const unsigned long m = c.values.size();
    if (m >= 3 && m % 2 == 1) {
      c.values.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (unsigned long j = 0; j < m; ++j) {
      if (c.values[j] != 0) sum += binom * c.values[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    c.values.push_back(-sum / (m + 1));
  }
  return c.values[n];
}

}  // namespace lzeta
