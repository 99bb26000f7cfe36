// Exact arithmetic kernel: polynomials in the succession marker w with
// arbitrary-precision integer coefficients, plus exact rationals.
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace succdist {

using BigInt = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in w. coeffs()[r] is the coefficient of w^r; the
/// representation never carries a trailing zero, so the zero polynomial is
/// the empty vector.
class WPoly {
 public:
  WPoly() = default;

  explicit WPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  WPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

  static WPoly constant(BigInt c) { return WPoly(std::vector<BigInt>{std::move(c)}); }

  static WPoly monomial(BigInt c, std::size_t power) {
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return WPoly(std::move(v));
  }

  /// The marker w itself.
  static WPoly w() { return monomial(1, 1); }

  /// (w - 1)^l, used throughout the succession generating functions.
  static WPoly w_minus_one_pow(std::size_t l) {
    WPoly base{-1, 1};
    WPoly r = constant(1);
    for (std::size_t i = 0; i < l; ++i) r *= base;
    return r;
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt coeff(std::size_t r) const { return r < coeffs_.size() ? coeffs_[r] : BigInt(0); }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  WPoly& operator+=(const WPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  WPoly& operator-=(const WPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  WPoly& operator*=(const WPoly& o) {
    *this = *this * o;
    return *this;
  }

  WPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator-(WPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend WPoly operator*(WPoly a, const BigInt& s) { return a *= s; }
  friend WPoly operator*(const BigInt& s, WPoly a) { return a *= s; }

  friend WPoly operator*(const WPoly& a, const WPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    multiply_accumulate(out, a, b);
    return WPoly(std::move(out));
  }

  friend bool operator==(const WPoly& a, const WPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const WPoly& a, const WPoly& b) { return !(a == b); }

  /// acc += a*b on a raw coefficient buffer (acc is grown as needed and left
  /// unnormalized). Used by the series kernel to avoid temporaries.
  static void multiply_accumulate(std::vector<BigInt>& acc, const WPoly& a, const WPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (acc.size() < need) acc.resize(need);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const BigInt& ai = a.coeffs_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += ai * b.coeffs_[j];
    }
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// m-th formal derivative with respect to w.
inline WPoly derivative(const WPoly& p, unsigned m) {
  const auto& c = p.coeffs();
  if (c.size() <= m) return {};
  std::vector<BigInt> out(c.size() - m);
  for (std::size_t r = m; r < c.size(); ++r) {
    BigInt falling = 1;
    for (unsigned t = 0; t < m; ++t) falling *= static_cast<unsigned long>(r - t);
    out[r - m] = c[r] * falling;
  }
  return WPoly(std::move(out));
}

/// Horner evaluation at an exact rational point.
inline Rational evaluate(const WPoly& p, const Rational& v) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + Rational(*it);
  return acc;
}

inline BigInt evaluate(const WPoly& p, const BigInt& v) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

/// Human-readable form, e.g. "7 + 12w + 9w^2 + 2w^3".
inline std::string to_string(const WPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c[r] == 0) continue;
    BigInt mag = abs(c[r]);
    if (first) {
      if (c[r] < 0) os << "-";
    } else {
      os << (c[r] < 0 ? " - " : " + ");
    }
    first = false;
    if (r == 0 || mag != 1) os << mag;
    if (r >= 1) os << "w";
    if (r >= 2) os << "^" << r;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const WPoly& p) { return os << to_string(p); }

}  // namespace succdist
