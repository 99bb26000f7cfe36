// Whole-system generating functions G_k (and the auxiliary H_k) built from
// per-integer run generating functions g_i(x_i).
//
// g_i is the generating function of one maximal run of the integer i: the
// coefficient of x_i^j weights a run of j copies. g_i = x_i/(1 - x_i) puts no
// restriction on run lengths and yields plain multiset permutations. The
// marker w counts boundaries where a run of i is followed by a run of i+1,
// i.e. increasing successions.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "succdist/series.hpp"
#include "succdist/specification.hpp"
#include "succdist/wpoly.hpp"

namespace succdist {

struct GenFunInput {
  DegreeCaps caps;
  std::vector<TruncSeries> g;

  std::size_t k() const noexcept { return g.size(); }

  /// Throws std::invalid_argument when the input is malformed.
  void validate() const {
    if (g.empty()) throw std::invalid_argument("GenFunInput: need k >= 1");
    if (caps.num_vars() != g.size()) throw std::invalid_argument("GenFunInput: caps/k mismatch");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].caps() != caps) throw std::invalid_argument("GenFunInput: g_" + std::to_string(i + 1) + " has different caps");
      if (!g[i].constant_term().is_zero())
        throw std::invalid_argument("GenFunInput: g_" + std::to_string(i + 1) + " has a nonzero constant term");
      if (!g[i].depends_only_on(i))
        throw std::invalid_argument("GenFunInput: g_" + std::to_string(i + 1) + " involves another variable");
    }
  }
};

struct GHPair {
  TruncSeries G;
  TruncSeries H;
};

/// g_i = x_i + x_i^2 + ... truncated at cap_i, for every i.
inline GenFunInput unrestricted_input(const DegreeCaps& caps) {
  GenFunInput in{caps, {}};
  for (std::size_t i = 0; i < caps.num_vars(); ++i) {
    TruncSeries gi(caps);
    Exponent e(caps.num_vars(), 0);
    for (unsigned j = 1; j <= caps.cap(i); ++j) {
      e[i] = j;
      gi += TruncSeries::monomial(caps, e);
    }
    in.g.push_back(std::move(gi));
  }
  return in;
}

/// f_i = g_i / (1 + g_i).
inline std::vector<TruncSeries> run_to_block(const GenFunInput& in) {
  std::vector<TruncSeries> f;
  f.reserve(in.k());
  const TruncSeries one = TruncSeries::one(in.caps);
  for (const auto& gi : in.g) f.push_back(gi * series_inverse(one + gi));
  return f;
}

/// 1 - sum_{i=1..k} sum_{l=0..i-1} (w-1)^l f_{i-l} ... f_i.
/// Shared denominator of G_k and H_k, and the bracket of det(M_k).
inline TruncSeries succession_denominator(const std::vector<TruncSeries>& f) {
  if (f.empty()) throw std::invalid_argument("succession_denominator: empty f");
  const DegreeCaps& caps = f.front().caps();
  TruncSeries d = TruncSeries::one(caps);
  for (std::size_t i = 0; i < f.size(); ++i) {
    TruncSeries chain = TruncSeries::one(caps);
    for (std::size_t l = 0; l <= i; ++l) {
      chain *= f[i - l];
      if (chain.is_zero()) break;
      d -= chain * WPoly::w_minus_one_pow(l);
    }
  }
  return d;
}

/// Iterates G_k = G_{k-1} + g_k(1+G_{k-1})(1+H_{k-1}) / (1 - g_k H_{k-1}),
///          H_k = G_{k-1} + g_k(w+G_{k-1})(1+H_{k-1}) / (1 - g_k H_{k-1}),
/// from G_1 = g_1, H_1 = w g_1.
inline GHPair build_gh_recursive(const GenFunInput& in) {
  in.validate();
  const DegreeCaps& caps = in.caps;
  const TruncSeries one = TruncSeries::one(caps);
  const TruncSeries w = TruncSeries::constant(caps, WPoly::w());

  GHPair gh{in.g[0], in.g[0] * WPoly::w()};
  for (std::size_t k = 1; k < in.k(); ++k) {
    const TruncSeries& gk = in.g[k];
    TruncSeries common = gk * (one + gh.H) * series_inverse(one - gk * gh.H);
    TruncSeries g_next = gh.G + common * (one + gh.G);
    TruncSeries h_next = gh.G + common * (w + gh.G);
    gh = GHPair{std::move(g_next), std::move(h_next)};
  }
  return gh;
}

/// Closed form in terms of f_i = g_i/(1+g_i):
///   G_k = 1/D - 1,  H_k = (sum_{l=0..k} (w-1)^l f_{k-l+1} ... f_k)/D - 1.
inline GHPair build_gh_explicit(const GenFunInput& in) {
  in.validate();
  const DegreeCaps& caps = in.caps;
  const TruncSeries one = TruncSeries::one(caps);
  const auto f = run_to_block(in);
  const TruncSeries inv = series_inverse(succession_denominator(f));

  TruncSeries h_num = one;
  TruncSeries chain = one;
  for (std::size_t l = 1; l <= f.size(); ++l) {
    chain *= f[f.size() - l];
    if (chain.is_zero()) break;
    h_num += chain * WPoly::w_minus_one_pow(l);
  }
  return GHPair{inv - one, h_num * inv - one};
}

/// P_k(w, n) = [x^n] G_k for unrestricted runs. Uses f_i = x_i directly, so
/// only the single inversion of the denominator is needed.
inline WPoly succession_polynomial(const Specification& spec) {
  const DegreeCaps caps = spec.caps();
  std::vector<TruncSeries> f;
  for (std::size_t i = 0; i < spec.k(); ++i) f.push_back(TruncSeries::variable(caps, i));
  return series_inverse(succession_denominator(f)).coeff(spec.counts());
}

/// [x^n] G_k for caller-supplied g_i.
inline WPoly succession_polynomial_restricted(const GenFunInput& in, const Exponent& n) {
  if (!in.caps.contains(n)) throw std::out_of_range("succession_polynomial_restricted: n exceeds caps");
  return build_gh_explicit(in).G.coeff(n);
}

}  // namespace succdist
