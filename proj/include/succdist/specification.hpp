// Multiplicity vector [n_1..n_k] identifying a multiset over {1..k}.
#pragma once

#include <charconv>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "succdist/combinatorics.hpp"
#include "succdist/series.hpp"

namespace succdist {

class Specification {
 public:
  Specification() = default;

  /// Throws std::invalid_argument unless k >= 1 and the total is >= 1.
  explicit Specification(std::vector<unsigned> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("specification must have k >= 1");
    if (total() == 0) throw std::invalid_argument("specification must contain at least one element");
  }

  /// Parses "n1,n2,...,nk".
  static Specification parse(std::string_view text) {
    std::vector<unsigned> counts;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      unsigned value = 0;
      auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || end != field.data() + field.size())
        throw std::invalid_argument("bad multiplicity '" + std::string(field) + "' in spec '" + std::string(text) + "'");
      counts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Specification(std::move(counts));
  }

  std::size_t k() const noexcept { return counts_.size(); }
  unsigned operator[](std::size_t i) const { return counts_.at(i); }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }

  /// n = n_1 + ... + n_k.
  unsigned total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0U); }

  /// Number of distinct arrangements, n!/(n_1!...n_k!).
  BigInt arrangements() const { return multinomial(std::span<const unsigned>(counts_)); }

  /// Caps that make [x^n] exact.
  DegreeCaps caps() const { return DegreeCaps(counts_); }

  Specification reversed() const { return Specification(std::vector<unsigned>(counts_.rbegin(), counts_.rend())); }

  /// Same spec with n_i replaced by n_i + delta (0-based i).
  Specification bumped(std::size_t i, unsigned delta) const {
    auto c = counts_;
    c.at(i) += delta;
    return Specification(std::move(c));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts_[i]);
    }
    return s;
  }

  friend bool operator==(const Specification&, const Specification&) = default;

 private:
  std::vector<unsigned> counts_;
};

}  // namespace succdist
