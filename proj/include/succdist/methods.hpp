// Independent routes to P_k(w, n), selectable by name.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "succdist/dist.hpp"
#include "succdist/genfun.hpp"
#include "succdist/matrixform.hpp"
#include "succdist/oracle.hpp"
#include "succdist/specification.hpp"

namespace succdist {

enum class Method { recursive, explicit_formula, matrix, closed_form, oracle };

inline constexpr std::array kAllMethods{Method::recursive, Method::explicit_formula, Method::matrix,
                                        Method::closed_form, Method::oracle};

/// Largest k accepted by the matrix route (O(k^3) ring operations).
inline constexpr std::size_t kMatrixMaxK = 8;

/// The method cannot handle this specification (e.g. closed form for k > 3).
class MethodUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::explicit_formula: return "explicit";
    case Method::matrix: return "matrix";
    case Method::closed_form: return "closed-form";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline Method parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

inline bool method_supports(Method m, const Specification& spec) {
  switch (m) {
    case Method::matrix: return spec.k() <= kMatrixMaxK;
    case Method::closed_form: return spec.k() <= 3;
    default: return true;
  }
}

inline WPoly polynomial_by(const Specification& spec, Method m,
                           std::uint64_t budget = kDefaultEnumerationBudget) {
  if (!method_supports(m, spec))
    throw MethodUnavailable("method '" + std::string(method_name(m)) + "' does not support k = " +
                            std::to_string(spec.k()));
  switch (m) {
    case Method::recursive:
      return build_gh_recursive(unrestricted_input(spec.caps())).G.coeff(spec.counts());
    case Method::explicit_formula:
      return succession_polynomial(spec);
    case Method::matrix:
      return gh_via_solve(unrestricted_input(spec.caps())).G.coeff(spec.counts());
    case Method::closed_form:
      if (spec.k() == 1) return WPoly::constant(1);
      if (spec.k() == 2) return closed_form_k2(spec[0], spec[1]);
      return closed_form_k3(spec[0], spec[1], spec[2]);
    case Method::oracle:
      return enumerate_distribution(spec, budget).polynomial();
  }
  throw std::logic_error("unreachable");
}

}  // namespace succdist
