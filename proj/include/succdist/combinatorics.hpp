// Exact binomial and multinomial coefficients.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <mutex>
#include <span>
#include <vector>

#include "succdist/wpoly.hpp"

namespace succdist {

namespace detail {

/// Pascal rows grown on demand and kept for the life of the process.
class PascalCache {
 public:
  static PascalCache& instance() {
    static PascalCache cache;
    return cache;
  }

  BigInt get(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<BigInt> row(m + 1);
      row[0] = row[m] = 1;
      for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  PascalCache() { rows_.push_back({1}); }
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace detail

/// C(n, k); zero when k > n.
inline BigInt binomial(unsigned n, unsigned k) { return detail::PascalCache::instance().get(n, k); }

/// (sum parts)! / prod(parts!).
inline BigInt multinomial(std::span<const unsigned> parts) {
  BigInt r = 1;
  unsigned running = 0;
  for (unsigned p : parts) {
    running += p;
    r *= binomial(running, p);
  }
  return r;
}

inline BigInt multinomial(std::initializer_list<unsigned> parts) {
  return multinomial(std::span<const unsigned>(parts.begin(), parts.size()));
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace succdist
