// Succession distributions: tables from the generating function, the
// finite-difference recurrence in one multiplicity, closed forms for k = 2
// and k = 3, and the no-succession counts of ordinary permutations.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "succdist/combinatorics.hpp"
#include "succdist/distribution.hpp"
#include "succdist/genfun.hpp"
#include "succdist/specification.hpp"
#include "succdist/wpoly.hpp"

namespace succdist {

inline SuccessionDistribution distribution(const Specification& spec) {
  return SuccessionDistribution::from_polynomial(spec, succession_polynomial(spec));
}

/// Order d = n + 1 - n_i of the recurrence in direction i (0-based).
/// Equals 1 + (sum of the other multiplicities), so it does not move along
/// the family.
inline unsigned recurrence_order(const Specification& base, std::size_t i) {
  if (i >= base.k()) throw std::out_of_range("recurrence direction out of range");
  return base.total() + 1 - base[i];
}

namespace detail {

inline void check_family_base(const Specification& base, std::size_t i) {
  if (i >= base.k()) throw std::out_of_range("recurrence direction out of range");
  if (base[i] < 1) throw std::invalid_argument("recurrence requires n_i >= 1 at the base of the family");
}

/// sum_{j=0..d} (-1)^j C(d,j) x_{start+j} for any additive type.
template <class T, class Zero>
T alternating_difference(std::span<const T> family, std::size_t start, unsigned d, Zero zero) {
  T acc = zero;
  for (unsigned j = 0; j <= d; ++j) {
    T term = family[start + j] * binomial(d, j);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace detail

/// family[j] must be P_k(w, base with n_i + j). True iff every window of
/// d + 1 consecutive members sums to zero under the alternating binomial
/// weights. Throws std::invalid_argument if the family has fewer than d + 1
/// members.
inline bool verify_p_recurrence(const Specification& base, std::size_t i, std::span<const WPoly> family) {
  detail::check_family_base(base, i);
  const unsigned d = recurrence_order(base, i);
  if (family.size() < d + 1)
    throw std::invalid_argument("family too short: need " + std::to_string(d + 1) + " members for order " + std::to_string(d));
  for (std::size_t start = 0; start + d < family.size(); ++start)
    if (!detail::alternating_difference<WPoly>(family, start, d, WPoly{}).is_zero()) return false;
  return true;
}

/// The same recurrence checked one succession count r at a time on the
/// distribution tables.
inline bool verify_s_recurrence(const Specification& base, std::size_t i,
                                std::span<const SuccessionDistribution> family) {
  detail::check_family_base(base, i);
  const unsigned d = recurrence_order(base, i);
  if (family.size() < d + 1)
    throw std::invalid_argument("family too short: need " + std::to_string(d + 1) + " members for order " + std::to_string(d));
  std::size_t max_len = 0;
  for (const auto& dist : family) max_len = std::max(max_len, dist.counts.size());
  for (std::size_t r = 0; r < max_len; ++r) {
    std::vector<BigInt> column;
    for (const auto& dist : family) column.push_back(dist.count(r));
    for (std::size_t start = 0; start + d < column.size(); ++start)
      if (detail::alternating_difference<BigInt>(column, start, d, BigInt(0)) != 0) return false;
  }
  return true;
}

/// Given known[j] = P_k(w, base with n_i + j) for at least d consecutive j,
/// returns the next member solved from the recurrence using the last d.
inline WPoly extend_by_recurrence(const Specification& base, std::size_t i, std::span<const WPoly> known) {
  detail::check_family_base(base, i);
  const unsigned d = recurrence_order(base, i);
  if (known.size() < d)
    throw std::invalid_argument("underdetermined family: need " + std::to_string(d) + " known members");
  const std::size_t off = known.size() - d;
  WPoly next;
  for (unsigned j = 0; j < d; ++j) {
    WPoly term = known[off + j] * binomial(d, j);
    // P_d = sum_{j<d} (-1)^{d-j+1} C(d,j) P_j
    if ((d - j + 1) % 2 == 0)
      next += term;
    else
      next -= term;
  }
  return next;
}

/// k = 2: sum_r C(n1,r) C(n2,r) w^r.
inline WPoly closed_form_k2(unsigned n1, unsigned n2) {
  if (n1 + n2 == 0) throw std::invalid_argument("closed_form_k2: empty multiset");
  std::vector<BigInt> c;
  for (unsigned r = 0; r <= std::min(n1, n2); ++r) c.push_back(binomial(n1, r) * binomial(n2, r));
  return WPoly(std::move(c));
}

/// k = 3: sum over (i, j, l) with n1-i-l, n2-i-j-l, n3-j-l >= 0 of
/// multinom(n-i-j-2l; i, j, l, n1-i-l, n2-i-j-l, n3-j-l) (w-1)^{i+j+2l}.
inline WPoly closed_form_k3(unsigned n1, unsigned n2, unsigned n3) {
  if (n1 + n2 + n3 == 0) throw std::invalid_argument("closed_form_k3: empty multiset");
  // collect by the power of (w-1) first, then expand once per power
  std::vector<BigInt> by_power;
  for (unsigned i = 0; i <= n1; ++i) {
    for (unsigned j = 0; j <= n2; ++j) {
      for (unsigned l = 0; l <= n3; ++l) {
        if (i + l > n1 || i + j + l > n2 || j + l > n3) continue;
        const unsigned parts[] = {i, j, l, n1 - i - l, n2 - i - j - l, n3 - j - l};
        const unsigned p = i + j + 2 * l;
        if (by_power.size() <= p) by_power.resize(p + 1);
        by_power[p] += multinomial(parts);
      }
    }
  }
  WPoly out;
  for (unsigned p = 0; p < by_power.size(); ++p)
    if (by_power[p] != 0) out += WPoly::w_minus_one_pow(p) * by_power[p];
  return out;
}

/// Term k (1-based, k = 1..k_max) is the number of permutations of 1..k
/// without a succession, i.e. the constant term of P_k(w, [1,...,1]).
inline std::vector<BigInt> no_succession_counts(unsigned k_max) {
  if (k_max < 1) throw std::invalid_argument("no_succession_counts: k_max must be >= 1");
  std::vector<BigInt> out;
  for (unsigned k = 1; k <= k_max; ++k)
    out.push_back(succession_polynomial(Specification(std::vector<unsigned>(k, 1))).coeff(0));
  return out;
}

}  // namespace succdist
