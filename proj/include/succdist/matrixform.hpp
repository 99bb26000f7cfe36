// Transfer-matrix route: G_k = e M_k^{-1} y and H_k = e M_k^{-1} z solved by
// elimination over the truncated series ring, plus det(M_k) both by
// fraction-free elimination and by its closed product form.
//
// M_k has 1 on the diagonal, -g_i w directly right of the diagonal in row i,
// and -g_i everywhere else in row i. Since every g_i has zero constant term,
// M_k is the identity modulo (x_1..x_k), so every leading principal minor has
// constant term 1 and elimination never needs a pivot search.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "succdist/genfun.hpp"
#include "succdist/series.hpp"
#include "succdist/wpoly.hpp"

namespace succdist {

class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t dim, const DegreeCaps& caps)
      : dim_(dim), entries_(dim * dim, TruncSeries::zero(caps)) {}

  std::size_t dim() const noexcept { return dim_; }
  TruncSeries& at(std::size_t i, std::size_t j) { return entries_.at(i * dim_ + j); }
  const TruncSeries& at(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

 private:
  std::size_t dim_;
  std::vector<TruncSeries> entries_;
};

inline SeriesMatrix build_m(std::span<const TruncSeries> g) {
  if (g.empty()) throw std::invalid_argument("build_m: need k >= 1");
  const DegreeCaps& caps = g.front().caps();
  const std::size_t k = g.size();
  SeriesMatrix m(k, caps);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i)
        m.at(i, j) = TruncSeries::one(caps);
      else if (j == i + 1)
        m.at(i, j) = -(g[i] * WPoly::w());
      else
        m.at(i, j) = -g[i];
    }
  }
  return m;
}

/// y = [g_1..g_k]^T.
inline std::vector<TruncSeries> y_vector(std::span<const TruncSeries> g) { return {g.begin(), g.end()}; }

/// z = [g_1..g_{k-1}, w g_k]^T.
inline std::vector<TruncSeries> z_vector(std::span<const TruncSeries> g) {
  std::vector<TruncSeries> z(g.begin(), g.end());
  z.back() *= WPoly::w();
  return z;
}

/// Solves M v = y and M u = z by Gaussian elimination and back substitution,
/// returning (sum v, sum u).
inline GHPair gh_via_solve(const GenFunInput& in) {
  in.validate();
  const std::size_t k = in.k();
  SeriesMatrix a = build_m(in.g);
  std::vector<TruncSeries> y = y_vector(in.g);
  std::vector<TruncSeries> z = z_vector(in.g);

  std::vector<TruncSeries> pivot_inv;
  for (std::size_t c = 0; c < k; ++c) {
    pivot_inv.push_back(series_inverse(a.at(c, c)));
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a.at(r, c).is_zero()) continue;
      const TruncSeries factor = a.at(r, c) * pivot_inv[c];
      for (std::size_t j = c + 1; j < k; ++j) a.at(r, j) -= factor * a.at(c, j);
      y[r] -= factor * y[c];
      z[r] -= factor * z[c];
      a.at(r, c) = TruncSeries::zero(in.caps);
    }
  }

  std::vector<TruncSeries> v(k, TruncSeries::zero(in.caps)), u(k, TruncSeries::zero(in.caps));
  for (std::size_t c = k; c-- > 0;) {
    TruncSeries rv = y[c], ru = z[c];
    for (std::size_t j = c + 1; j < k; ++j) {
      rv -= a.at(c, j) * v[j];
      ru -= a.at(c, j) * u[j];
    }
    v[c] = rv * pivot_inv[c];
    u[c] = ru * pivot_inv[c];
  }

  GHPair gh{TruncSeries::zero(in.caps), TruncSeries::zero(in.caps)};
  for (std::size_t i = 0; i < k; ++i) {
    gh.G += v[i];
    gh.H += u[i];
  }
  return gh;
}

/// det(M_k) by Bareiss elimination; each step divides exactly by the
/// previous pivot (a unit in the truncated ring).
inline TruncSeries det_m(const GenFunInput& in) {
  in.validate();
  SeriesMatrix a = build_m(in.g);
  const std::size_t k = in.k();
  TruncSeries prev_inv = TruncSeries::one(in.caps);
  for (std::size_t c = 0; c + 1 < k; ++c) {
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j)
        a.at(i, j) = (a.at(c, c) * a.at(i, j) - a.at(i, c) * a.at(c, j)) * prev_inv;
    }
    prev_inv = series_inverse(a.at(c, c));
  }
  return a.at(k - 1, k - 1);
}

/// prod (1 + g_i) * [1 - sum_i sum_l (w-1)^l f_{i-l} ... f_i].
inline TruncSeries det_m_closed(const GenFunInput& in) {
  in.validate();
  TruncSeries prod = TruncSeries::one(in.caps);
  for (const auto& gi : in.g) prod *= TruncSeries::one(in.caps) + gi;
  return prod * succession_denominator(run_to_block(in));
}

}  // namespace succdist
