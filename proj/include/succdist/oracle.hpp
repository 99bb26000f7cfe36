// Brute-force ground truth: walk every distinct arrangement of the multiset
// and count successions straight from the definition.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "succdist/distribution.hpp"
#include "succdist/specification.hpp"

namespace succdist {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of adjacent pairs (a_i, a_{i+1}) with a_{i+1} - a_i = 1.
inline unsigned count_successions(std::span<const unsigned> seq) {
  if (seq.empty()) throw std::invalid_argument("count_successions: empty sequence");
  unsigned r = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i + 1] == seq[i] + 1) ++r;
  return r;
}

/// Visits every distinct arrangement once, in lexicographic order, via
/// std::next_permutation on the sorted multiset. `total` is the number of
/// arrangements actually visited, not a formula.
inline SuccessionDistribution enumerate_distribution(const Specification& spec,
                                                     std::uint64_t budget = kDefaultEnumerationBudget) {
  if (spec.arrangements() > budget)
    throw BudgetExceeded("enumeration of spec [" + spec.to_string() + "] exceeds budget of " +
                         std::to_string(budget) + " arrangements");
  std::vector<unsigned> seq;
  seq.reserve(spec.total());
  for (std::size_t i = 0; i < spec.k(); ++i) seq.insert(seq.end(), spec[i], static_cast<unsigned>(i + 1));

  std::vector<std::uint64_t> tally(spec.total(), 0);
  std::uint64_t visited = 0;
  do {
    ++tally[count_successions(seq)];
    ++visited;
  } while (std::next_permutation(seq.begin(), seq.end()));

  std::vector<BigInt> counts(tally.begin(), tally.end());
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return SuccessionDistribution{spec, std::move(counts), BigInt(visited)};
}

}  // namespace succdist
