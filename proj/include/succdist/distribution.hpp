#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "succdist/specification.hpp"
#include "succdist/wpoly.hpp"

namespace succdist {

/// counts[r] = number of arrangements with exactly r successions.
struct SuccessionDistribution {
  Specification spec;
  std::vector<BigInt> counts;
  BigInt total;

  static SuccessionDistribution from_polynomial(const Specification& spec, const WPoly& p) {
    return SuccessionDistribution{spec, p.coeffs(), evaluate(p, BigInt(1))};
  }

  WPoly polynomial() const { return WPoly(counts); }

  BigInt count(std::size_t r) const { return r < counts.size() ? counts[r] : BigInt(0); }

  Rational probability(std::size_t r) const {
    if (total == 0) throw std::domain_error("empty distribution");
    return Rational(count(r), total);
  }

  friend bool operator==(const SuccessionDistribution&, const SuccessionDistribution&) = default;
};

}  // namespace succdist
