// Truncated multivariate power series in x_1..x_k with WPoly coefficients.
//
// Truncation is per variable: a term x^e is kept only if e_i <= cap_i for
// every i. The set of such series is the quotient of Z[w][[x]] by the ideal
// (x_1^{cap_1+1}, ..., x_k^{cap_k+1}), so every ring identity of the full
// series carries over exactly.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "succdist/wpoly.hpp"

namespace succdist {

using Exponent = std::vector<unsigned>;

/// Maximum tracked exponent per variable, with the mixed-radix encoding of
/// exponent vectors into a linear index (x_1 is the fastest-varying digit).
class DegreeCaps {
 public:
  static constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 26;

  DegreeCaps() = default;

  explicit DegreeCaps(std::vector<unsigned> caps) : caps_(std::move(caps)) {
    strides_.resize(caps_.size());
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      strides_[i] = stride;
      stride *= std::uint64_t{caps_[i]} + 1;
      if (stride > kMaxTerms) throw std::length_error("DegreeCaps: truncated ring too large");
    }
    size_ = stride;
  }

  std::size_t num_vars() const noexcept { return caps_.size(); }
  unsigned cap(std::size_t i) const { return caps_.at(i); }
  const std::vector<unsigned>& caps() const noexcept { return caps_; }

  /// Number of exponent vectors inside the caps.
  std::uint64_t size() const noexcept { return size_; }

  bool contains(const Exponent& e) const {
    if (e.size() != caps_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > caps_[i]) return false;
    return true;
  }

  std::uint64_t encode(const Exponent& e) const {
    if (!contains(e)) throw std::out_of_range("DegreeCaps: exponent exceeds caps");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += e[i] * strides_[i];
    return idx;
  }

  Exponent decode(std::uint64_t idx) const {
    Exponent e(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      e[i] = static_cast<unsigned>(idx % (std::uint64_t{caps_[i]} + 1));
      idx /= std::uint64_t{caps_[i]} + 1;
    }
    return e;
  }

  unsigned total_degree_cap() const noexcept {
    unsigned s = 0;
    for (unsigned c : caps_) s += c;
    return s;
  }

  friend bool operator==(const DegreeCaps& a, const DegreeCaps& b) { return a.caps_ == b.caps_; }
  friend bool operator!=(const DegreeCaps& a, const DegreeCaps& b) { return !(a == b); }

 private:
  std::vector<unsigned> caps_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

class TruncSeries {
 public:
  using TermMap = std::map<std::uint64_t, WPoly>;

  TruncSeries() = default;
  explicit TruncSeries(DegreeCaps caps) : caps_(std::move(caps)) {}

  static TruncSeries zero(const DegreeCaps& caps) { return TruncSeries(caps); }

  static TruncSeries constant(const DegreeCaps& caps, WPoly c) {
    TruncSeries s(caps);
    if (!c.is_zero()) s.terms_.emplace(0, std::move(c));
    return s;
  }

  static TruncSeries one(const DegreeCaps& caps) { return constant(caps, WPoly::constant(1)); }

  /// c * x^e; zero if e lies outside the caps.
  static TruncSeries monomial(const DegreeCaps& caps, const Exponent& e, WPoly c = WPoly::constant(1)) {
    if (e.size() != caps.num_vars()) throw std::invalid_argument("monomial: wrong number of variables");
    TruncSeries s(caps);
    if (caps.contains(e) && !c.is_zero()) s.terms_.emplace(caps.encode(e), std::move(c));
    return s;
  }

  /// x_i (0-based variable index).
  static TruncSeries variable(const DegreeCaps& caps, std::size_t i) {
    Exponent e(caps.num_vars(), 0);
    e.at(i) = 1;
    return monomial(caps, e);
  }

  const DegreeCaps& caps() const noexcept { return caps_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  /// [x^e] of the series.
  WPoly coeff(const Exponent& e) const {
    if (!caps_.contains(e)) throw std::out_of_range("coeff: exponent exceeds caps");
    auto it = terms_.find(caps_.encode(e));
    return it == terms_.end() ? WPoly{} : it->second;
  }

  WPoly constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? WPoly{} : it->second;
  }

  /// Replace w by the integer v in every coefficient.
  TruncSeries substitute_w(const BigInt& v) const {
    TruncSeries out(caps_);
    for (const auto& [idx, p] : terms_) {
      BigInt val = evaluate(p, v);
      if (val != 0) out.terms_.emplace(idx, WPoly::constant(std::move(val)));
    }
    return out;
  }

  /// Re-truncate to smaller caps (same number of variables).
  TruncSeries truncate(const DegreeCaps& smaller) const {
    if (smaller.num_vars() != caps_.num_vars()) throw std::invalid_argument("truncate: variable count mismatch");
    TruncSeries out(smaller);
    for (const auto& [idx, p] : terms_) {
      Exponent e = caps_.decode(idx);
      if (smaller.contains(e)) out.terms_.emplace(smaller.encode(e), p);
    }
    return out;
  }

  /// True iff every stored exponent touches only variable i (0-based).
  bool depends_only_on(std::size_t i) const {
    for (const auto& [idx, p] : terms_) {
      Exponent e = caps_.decode(idx);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i && e[j] != 0) return false;
    }
    return true;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_caps(o, "series_add");
    for (const auto& [idx, p] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(idx, p);
      if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) { return *this += -o; }

  TruncSeries& operator*=(const WPoly& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, p] : terms_) p *= c;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& [idx, p] : a.terms_) p = -p;
    return a;
  }
  friend TruncSeries operator*(TruncSeries a, const WPoly& c) { return a *= c; }
  friend TruncSeries operator*(const WPoly& c, TruncSeries a) { return a *= c; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_caps(b, "series_mul");
    const DegreeCaps& caps = a.caps_;
    TruncSeries out(caps);
    if (a.is_zero() || b.is_zero()) return out;

    const std::size_t nv = caps.num_vars();
    auto flatten = [&](const TruncSeries& s, std::vector<unsigned>& exps,
                       std::vector<std::pair<std::uint64_t, const WPoly*>>& items) {
      for (const auto& [idx, p] : s.terms_) {
        Exponent e = caps.decode(idx);
        exps.insert(exps.end(), e.begin(), e.end());
        items.emplace_back(idx, &p);
      }
    };
    std::vector<unsigned> ea, eb;
    std::vector<std::pair<std::uint64_t, const WPoly*>> ta, tb;
    flatten(a, ea, ta);
    flatten(b, eb, tb);

    // Mixed-radix indices add without carry exactly when no component
    // exceeds its cap, so the product index is the sum of the indices.
    // Dense scratch for moderate rings, sparse otherwise.
    constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 20;
    const bool dense = caps.size() <= kDenseLimit;
    std::vector<std::vector<BigInt>> dense_acc(dense ? caps.size() : 0);
    std::map<std::uint64_t, std::vector<BigInt>> sparse_acc;
    auto slot = [&](std::uint64_t idx) -> std::vector<BigInt>& {
      return dense ? dense_acc[idx] : sparse_acc[idx];
    };
    for (std::size_t i = 0; i < ta.size(); ++i) {
      const unsigned* ei = ea.data() + i * nv;
      for (std::size_t j = 0; j < tb.size(); ++j) {
        const unsigned* ej = eb.data() + j * nv;
        bool fits = true;
        for (std::size_t v = 0; v < nv; ++v) {
          if (ei[v] + ej[v] > caps.caps()[v]) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        WPoly::multiply_accumulate(slot(ta[i].first + tb[j].first), *ta[i].second, *tb[j].second);
      }
    }
    auto emit = [&](std::uint64_t idx, std::vector<BigInt>& raw) {
      if (raw.empty()) return;
      WPoly p(std::move(raw));
      if (!p.is_zero()) out.terms_.emplace_hint(out.terms_.end(), idx, std::move(p));
    };
    if (dense) {
      for (std::uint64_t idx = 0; idx < dense_acc.size(); ++idx) emit(idx, dense_acc[idx]);
    } else {
      for (auto& [idx, raw] : sparse_acc) emit(idx, raw);
    }
    return out;
  }

  TruncSeries& operator*=(const TruncSeries& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.caps_ == b.caps_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  /// Build directly from (index, coefficient) pairs; zero coefficients are
  /// dropped. Indices must be valid for caps.
  static TruncSeries from_dense(const DegreeCaps& caps, std::vector<WPoly> dense) {
    TruncSeries out(caps);
    for (std::uint64_t idx = 0; idx < dense.size(); ++idx)
      if (!dense[idx].is_zero()) out.terms_.emplace_hint(out.terms_.end(), idx, std::move(dense[idx]));
    return out;
  }

 private:
  void check_caps(const TruncSeries& o, const char* op) const {
    if (caps_ != o.caps_) throw std::invalid_argument(std::string(op) + ": cap mismatch");
  }

  DegreeCaps caps_;
  TermMap terms_;
};

namespace detail {

/// Returns +1 or -1 if c is that integer unit, 0 otherwise.
inline int unit_sign(const WPoly& c) {
  if (c.degree() != 0) return 0;
  if (c.coeff(0) == 1) return 1;
  if (c.coeff(0) == -1) return -1;
  return 0;
}

}  // namespace detail

/// Multiplicative inverse in the truncated ring. The constant term must be
/// the unit 1 or -1 of Z[w].
///
/// Solves a*b = 1 coefficient by coefficient in increasing mixed-radix order:
/// b_e = -u * sum_{t != 0, t <= e} a_t b_{e-t}, with u = 1/a_0. Every
/// e - t precedes e in that order, so one pass suffices; the cost is
/// (ring size) x (terms of a).
inline TruncSeries series_inverse(const TruncSeries& a) {
  const int u = detail::unit_sign(a.constant_term());
  if (u == 0) throw std::domain_error("series_inverse: constant term is not a unit");
  const DegreeCaps& caps = a.caps();
  const std::size_t nv = caps.num_vars();

  std::vector<std::pair<Exponent, const WPoly*>> tail;
  std::vector<std::uint64_t> tail_idx;
  for (const auto& [idx, p] : a.terms()) {
    if (idx == 0) continue;
    tail.emplace_back(caps.decode(idx), &p);
    tail_idx.push_back(idx);
  }

  std::vector<WPoly> b(caps.size());
  b[0] = WPoly::constant(u);
  Exponent e(nv, 0);
  for (std::uint64_t idx = 1; idx < caps.size(); ++idx) {
    // advance e to decode(idx)
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] < caps.cap(v)) {
        ++e[v];
        break;
      }
      e[v] = 0;
    }
    std::vector<BigInt> acc;
    for (std::size_t t = 0; t < tail.size(); ++t) {
      const Exponent& te = tail[t].first;
      bool below = true;
      for (std::size_t v = 0; v < nv; ++v) {
        if (te[v] > e[v]) {
          below = false;
          break;
        }
      }
      if (!below) continue;
      WPoly::multiply_accumulate(acc, *tail[t].second, b[idx - tail_idx[t]]);
    }
    WPoly s(std::move(acc));
    if (u == 1) s = -s;
    b[idx] = std::move(s);
  }
  return TruncSeries::from_dense(caps, std::move(b));
}

/// Newton iteration b <- b(2 - ab). The error 1 - ab lives in total degree
/// >= 2^t after t steps, so the loop stops once 2^t exceeds the total cap.
inline TruncSeries series_inverse_newton(const TruncSeries& a) {
  const int u = detail::unit_sign(a.constant_term());
  if (u == 0) throw std::domain_error("series_inverse_newton: constant term is not a unit");
  const DegreeCaps& caps = a.caps();
  const TruncSeries two = TruncSeries::constant(caps, WPoly::constant(2));
  TruncSeries b = TruncSeries::constant(caps, WPoly::constant(u));
  const unsigned total = caps.total_degree_cap();
  for (unsigned reach = 1; reach <= total; reach *= 2) b = b * (two - a * b);
  return b;
}

/// a^p by repeated squaring.
inline TruncSeries pow(TruncSeries a, unsigned p) {
  TruncSeries r = TruncSeries::one(a.caps());
  while (p > 0) {
    if (p & 1U) r *= a;
    p >>= 1U;
    if (p > 0) a *= a;
  }
  return r;
}

}  // namespace succdist
