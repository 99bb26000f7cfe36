// Exact moments of the succession count R for unrestricted multisets.
//
// Three independent routes:
//  * closed forms in the multiplicities (mean, E[R(R-1)], variance);
//  * derivatives of P_k(w, n) at w = 1;
//  * coefficient extraction from the w-derivatives of G_k at w = 1, written
//    in terms of the consecutive-product sums S_j.
// Everything is exact rational arithmetic.
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "succdist/combinatorics.hpp"
#include "succdist/series.hpp"
#include "succdist/specification.hpp"
#include "succdist/wpoly.hpp"

namespace succdist {

struct MomentReport {
  Rational mean;
  Rational variance;
  Rational second_factorial;
  /// factorial_moments[m] = E[R(R-1)...(R-m+1)]; index 0 holds 1.
  std::vector<Rational> factorial_moments;
  BigInt total;
};

namespace detail {

/// T_1 = sum n_i n_{i+1} and sum n_i n_{i+1} (n_i + n_{i+1}).
struct AdjacentSums {
  BigInt t1;
  BigInt weighted;
};

inline AdjacentSums adjacent_sums(const Specification& spec) {
  AdjacentSums s;
  for (std::size_t i = 0; i + 1 < spec.k(); ++i) {
    BigInt prod = BigInt(spec[i]) * spec[i + 1];
    s.t1 += prod;
    s.weighted += prod * (spec[i] + spec[i + 1]);
  }
  return s;
}

}  // namespace detail

/// (n_1 n_2 + ... + n_{k-1} n_k) / n.
inline Rational mean_closed(const Specification& spec) {
  return Rational(detail::adjacent_sums(spec).t1, BigInt(spec.total()));
}

/// [T_1^2 - sum n_i n_{i+1}(n_i + n_{i+1} - 1)] / (n(n-1)); 0 when n = 1.
inline Rational second_factorial_closed(const Specification& spec) {
  const unsigned n = spec.total();
  if (n < 2) return 0;
  const auto s = detail::adjacent_sums(spec);
  BigInt num = s.t1 * s.t1 - (s.weighted - s.t1);
  return Rational(num, BigInt(n) * (n - 1));
}

/// T_1^2/(n^2(n-1)) + T_1/(n-1) - sum n_i n_{i+1}(n_i + n_{i+1})/(n(n-1));
/// 0 when n = 1.
inline Rational variance_closed(const Specification& spec) {
  const unsigned n = spec.total();
  if (n < 2) return 0;
  const auto s = detail::adjacent_sums(spec);
  const BigInt bn = n;
  return Rational(s.t1 * s.t1, bn * bn * (n - 1)) + Rational(s.t1, BigInt(n - 1)) -
         Rational(s.weighted, bn * (n - 1));
}

/// Factorial moments from P(w): E[R^(m)] = P^(m)(1) / P(1).
inline MomentReport moments_from_polynomial(const WPoly& p, unsigned m_max) {
  if (p.is_zero()) throw std::invalid_argument("moments_from_polynomial: zero polynomial");
  MomentReport rep;
  rep.total = evaluate(p, BigInt(1));
  const unsigned upto = std::max(m_max, 2U);
  std::vector<Rational> fm;
  for (unsigned m = 0; m <= upto; ++m) fm.emplace_back(evaluate(derivative(p, m), BigInt(1)), rep.total);
  rep.mean = fm[1];
  rep.second_factorial = fm[2];
  rep.variance = fm[2] - fm[1] * fm[1] + fm[1];
  fm.resize(m_max + 1);
  rep.factorial_moments = std::move(fm);
  return rep;
}

/// S_j = sum_i x_i x_{i+1} ... x_{i+j}; zero for j >= k.
inline TruncSeries consecutive_product_sum(const DegreeCaps& caps, unsigned j) {
  TruncSeries s(caps);
  const std::size_t k = caps.num_vars();
  for (std::size_t i = 0; i + j < k; ++i) {
    Exponent e(k, 0);
    for (std::size_t t = i; t <= i + j; ++t) e[t] = 1;
    s += TruncSeries::monomial(caps, e);
  }
  return s;
}

namespace detail {

/// Calls visit(mult) for every (m_1..m_m) with m_1 + 2 m_2 + ... + m m_m = m;
/// mult is 1-based (mult[0] unused).
inline void for_each_partition(unsigned m, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> mult(m + 1, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned remaining) {
    if (part == 0) {
      if (remaining == 0) visit(mult);
      return;
    }
    for (unsigned c = 0; c * part <= remaining; ++c) {
      mult[part] = c;
      rec(part - 1, remaining - c * part);
    }
    mult[part] = 0;
  };
  rec(m, m);
}

inline Rational extract_moment(const TruncSeries& s, const Specification& spec) {
  const WPoly c = s.coeff(spec.counts());
  if (!c.is_constant()) throw std::logic_error("moment extraction: w survived substitution");
  return Rational(c.coeff(0), spec.arrangements());
}

}  // namespace detail

/// E[R^(m)] = [x^n] d^m G_k/dw^m |_{w=1} / multinomial(n), with
///   d^m G_k/dw^m |_{w=1} = m! sum multinom(s; m_1..m_m) prod_j S_j^{m_j} / (1 - S_0)^{s+1},
/// s = m_1 + ... + m_m, over all (m_1..m_m) with sum_j j m_j = m.
inline Rational factorial_moment_dm(const Specification& spec, unsigned m) {
  const unsigned n = spec.total();
  if (m < 1 || m + 1 > n)
    throw std::out_of_range("factorial_moment_dm: order " + std::to_string(m) + " outside 1..n-1");
  const DegreeCaps caps = spec.caps();
  std::vector<TruncSeries> S;
  for (unsigned j = 0; j <= m; ++j) S.push_back(consecutive_product_sum(caps, j));

  const TruncSeries inv = series_inverse(TruncSeries::one(caps) - S[0]);
  std::vector<TruncSeries> inv_pow{TruncSeries::one(caps)};
  for (unsigned p = 1; p <= m + 1; ++p) inv_pow.push_back(inv_pow.back() * inv);

  TruncSeries sum(caps);
  detail::for_each_partition(m, [&](const std::vector<unsigned>& mult) {
    unsigned s = 0;
    TruncSeries term = TruncSeries::one(caps);
    std::vector<unsigned> parts;
    for (unsigned j = 1; j <= m; ++j) {
      s += mult[j];
      parts.push_back(mult[j]);
      if (mult[j]) term *= pow(S[j], mult[j]);
    }
    term *= inv_pow[s + 1];
    sum += term * WPoly::constant(multinomial(parts));
  });
  sum *= WPoly::constant(factorial(m));
  return detail::extract_moment(sum, spec);
}

/// Mean from S_1 / (1 - S_0)^2.
inline Rational mean_d1(const Specification& spec) {
  const DegreeCaps caps = spec.caps();
  const TruncSeries inv = series_inverse(TruncSeries::one(caps) - consecutive_product_sum(caps, 0));
  return detail::extract_moment(consecutive_product_sum(caps, 1) * inv * inv, spec);
}

/// E[R(R-1)] from 2 S_1^2/(1 - S_0)^3 + 2 S_2/(1 - S_0)^2.
inline Rational second_factorial_d2(const Specification& spec) {
  const DegreeCaps caps = spec.caps();
  const TruncSeries inv = series_inverse(TruncSeries::one(caps) - consecutive_product_sum(caps, 0));
  const TruncSeries inv2 = inv * inv;
  const TruncSeries s1 = consecutive_product_sum(caps, 1);
  const TruncSeries s2 = consecutive_product_sum(caps, 2);
  const WPoly two = WPoly::constant(2);
  return detail::extract_moment(s1 * s1 * inv2 * inv * two + s2 * inv2 * two, spec);
}

}  // namespace succdist
