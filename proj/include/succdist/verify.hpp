// Bounded verification sweeps cross-checking the independent routes.
// Each suite returns pass/total counts and a description of every failure.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "succdist/dist.hpp"
#include "succdist/genfun.hpp"
#include "succdist/matrixform.hpp"
#include "succdist/methods.hpp"
#include "succdist/moments.hpp"
#include "succdist/oracle.hpp"

namespace succdist {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return passed == total; }

  void record(bool pass, const std::string& what) {
    ++total;
    if (pass)
      ++passed;
    else
      failures.push_back(what);
  }
};

/// Permutations of 1..k with no succession, k = 1..10.
inline const std::vector<BigInt>& known_no_succession_counts() {
  static const std::vector<BigInt> seq{1, 1, 3, 11, 53, 309, 2119, 16687, 148329, 1468457};
  return seq;
}

/// Every spec with 1 <= k <= k_max and 1 <= sum <= n_max. With allow_zero,
/// multiplicities may be 0; otherwise all are >= 1.
inline std::vector<Specification> all_specs(unsigned k_max, unsigned n_max, bool allow_zero) {
  std::vector<Specification> out;
  std::vector<unsigned> cur;
  const unsigned lo = allow_zero ? 0 : 1;
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    if (!cur.empty()) {
      unsigned sum = 0;
      for (unsigned c : cur) sum += c;
      if (sum >= 1) out.emplace_back(cur);
    }
    if (cur.size() == k_max) return;
    for (unsigned c = lo; c <= remaining; ++c) {
      cur.push_back(c);
      rec(remaining - c);
      cur.pop_back();
    }
  };
  rec(n_max);
  return out;
}

/// Random spec with k in [1, k_max], every n_i >= 1 and total <= n_max.
inline Specification random_spec(std::mt19937_64& rng, unsigned k_max, unsigned n_max) {
  std::uniform_int_distribution<unsigned> kd(1, std::min(k_max, n_max));
  const unsigned k = kd(rng);
  std::uniform_int_distribution<unsigned> td(k, n_max);
  const unsigned total = td(rng);
  std::vector<unsigned> counts(k, 1);
  std::uniform_int_distribution<unsigned> pick(0, k - 1);
  for (unsigned extra = total - k; extra > 0; --extra) ++counts[pick(rng)];
  return Specification(std::move(counts));
}

/// g_i = sum_{j=1..cap_i} c_ij x_i^j with c_ij uniform in [-3, 3].
inline GenFunInput random_input(std::mt19937_64& rng, const DegreeCaps& caps) {
  std::uniform_int_distribution<int> cd(-3, 3);
  GenFunInput in{caps, {}};
  for (std::size_t i = 0; i < caps.num_vars(); ++i) {
    TruncSeries gi(caps);
    Exponent e(caps.num_vars(), 0);
    for (unsigned j = 1; j <= caps.cap(i); ++j) {
      e[i] = j;
      gi += TruncSeries::monomial(caps, e, WPoly::constant(cd(rng)));
    }
    in.g.push_back(std::move(gi));
  }
  return in;
}

inline SuiteResult suite_a000255(unsigned k_max, std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto& known = known_no_succession_counts();
  if (k_max < 1 || k_max > known.size())
    throw std::invalid_argument("a000255 suite: kmax must be in 1.." + std::to_string(known.size()));
  SuiteResult res{"a000255"};
  const auto computed = no_succession_counts(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    res.record(computed[k - 1] == known[k - 1],
               "k=" + std::to_string(k) + ": got " + computed[k - 1].str() + ", expected " + known[k - 1].str());
    Specification ones(std::vector<unsigned>(k, 1));
    if (ones.arrangements() <= budget && k <= 8)
      res.record(enumerate_distribution(ones, budget).count(0) == known[k - 1],
                 "k=" + std::to_string(k) + ": oracle disagrees");
  }
  return res;
}

inline SuiteResult suite_oracle(unsigned n_max, unsigned k_max, std::uint64_t budget = kDefaultEnumerationBudget) {
  SuiteResult res{"oracle"};
  for (const auto& spec : all_specs(k_max, n_max, true)) {
    const auto brute = enumerate_distribution(spec, budget);
    const auto gf = distribution(spec);
    res.record(gf == brute && brute.total == spec.arrangements(), "spec [" + spec.to_string() + "]");
  }
  return res;
}

/// Family base, base+e_i, ... (steps members) checked against the
/// recurrence in P and in every s(r), plus extension of the first d members.
inline SuiteResult suite_recurrence(const Specification& base, std::size_t i, unsigned steps) {
  SuiteResult res{"recurrence"};
  const unsigned d = recurrence_order(base, i);
  if (steps < d + 1)
    throw std::invalid_argument("recurrence suite: need at least " + std::to_string(d + 1) + " steps for order " +
                                std::to_string(d));
  std::vector<WPoly> family;
  std::vector<SuccessionDistribution> tables;
  for (unsigned j = 0; j < steps; ++j) {
    family.push_back(succession_polynomial(base.bumped(i, j)));
    tables.push_back(SuccessionDistribution::from_polynomial(base.bumped(i, j), family.back()));
  }
  const std::string tag = "[" + base.to_string() + "] dir " + std::to_string(i + 1);
  res.record(verify_p_recurrence(base, i, family), tag + ": P recurrence");
  res.record(verify_s_recurrence(base, i, tables), tag + ": s recurrence");
  res.record(extend_by_recurrence(base, i, std::span<const WPoly>(family).first(d)) == family[d],
             tag + ": extension");
  return res;
}

inline SuiteResult suite_recurrence_random(unsigned families, std::uint64_t seed, unsigned k_max = 4,
                                           unsigned n_max = 12) {
  SuiteResult res{"recurrence-random"};
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < families; ++t) {
    const Specification base = random_spec(rng, k_max, n_max);
    std::uniform_int_distribution<std::size_t> dir(0, base.k() - 1);
    const std::size_t i = dir(rng);
    const auto r = suite_recurrence(base, i, recurrence_order(base, i) + 1);
    res.record(r.ok(), "[" + base.to_string() + "] dir " + std::to_string(i + 1));
  }
  return res;
}

inline SuiteResult suite_determinant(unsigned k_max, unsigned trials_per_k, std::uint64_t seed) {
  SuiteResult res{"determinant"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> cap(0, 2);
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned t = 0; t < trials_per_k; ++t) {
      std::vector<unsigned> caps(k);
      for (auto& c : caps) c = cap(rng);
      const GenFunInput in = random_input(rng, DegreeCaps(caps));
      res.record(det_m(in) == det_m_closed(in), "k=" + std::to_string(k) + " trial " + std::to_string(t));
    }
  }
  return res;
}

inline SuiteResult suite_closed_form(unsigned k2_max = 6, unsigned k3_max = 4) {
  SuiteResult res{"closed-form"};
  for (unsigned a = 0; a <= k2_max; ++a)
    for (unsigned b = 0; b <= k2_max; ++b) {
      if (a + b == 0) continue;
      const Specification s({a, b});
      res.record(closed_form_k2(a, b) == succession_polynomial(s), "k2 [" + s.to_string() + "]");
    }
  for (unsigned a = 0; a <= k3_max; ++a)
    for (unsigned b = 0; b <= k3_max; ++b)
      for (unsigned c = 0; c <= k3_max; ++c) {
        if (a + b + c == 0) continue;
        const Specification s({a, b, c});
        res.record(closed_form_k3(a, b, c) == succession_polynomial(s), "k3 [" + s.to_string() + "]");
      }
  return res;
}

/// Closed-form mean/variance against the polynomial route, exhaustive over
/// compositions of n <= n_max plus `random_count` random specs.
inline SuiteResult suite_moments(unsigned n_max, unsigned random_count, std::uint64_t seed,
                                 unsigned random_n_max = 20, unsigned random_k_max = 6) {
  SuiteResult res{"moments"};
  auto check = [&](const Specification& s) {
    const auto rep = moments_from_polynomial(succession_polynomial(s), 2);
    res.record(rep.mean == mean_closed(s) && rep.variance == variance_closed(s) &&
                   rep.second_factorial == second_factorial_closed(s),
               "[" + s.to_string() + "]");
  };
  for (const auto& s : all_specs(n_max, n_max, false)) check(s);
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < random_count; ++t) check(random_spec(rng, random_k_max, random_n_max));
  return res;
}

/// Factorial moments from the S_j expansion against polynomial derivatives.
inline SuiteResult suite_dm(unsigned n_max, unsigned m_max = 4) {
  SuiteResult res{"factorial-dm"};
  for (const auto& s : all_specs(n_max, n_max, false)) {
    const unsigned n = s.total();
    if (n < 2) continue;
    const unsigned top = std::min(m_max, n - 1);
    const auto rep = moments_from_polynomial(succession_polynomial(s), top);
    for (unsigned m = 1; m <= top; ++m)
      res.record(factorial_moment_dm(s, m) == rep.factorial_moments[m],
                 "[" + s.to_string() + "] m=" + std::to_string(m));
  }
  return res;
}

}  // namespace succdist
