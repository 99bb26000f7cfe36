#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "succdist/genfun.hpp"
#include "succdist/matrixform.hpp"
#include "succdist/verify.hpp"
#include "support/brute_force.hpp"

using namespace succdist;

namespace {

const WPoly kP122{7, 12, 9, 2};

TEST(BuildGH, SingleIntegerBaseCase) {
  const DegreeCaps caps({4});
  const GenFunInput in = unrestricted_input(caps);
  for (const GHPair& gh : {build_gh_recursive(in), build_gh_explicit(in), gh_via_solve(in)}) {
    EXPECT_EQ(gh.G, in.g[0]);
    EXPECT_EQ(gh.H, in.g[0] * WPoly::w());
  }
  for (unsigned j = 1; j <= 4; ++j) EXPECT_EQ(in.g[0].coeff({j}), WPoly::constant(1));
}

TEST(BuildGH, TwoLettersOneEach) {
  const GenFunInput in = unrestricted_input(DegreeCaps({1, 1}));
  EXPECT_EQ(build_gh_recursive(in).G.coeff({1, 1}), WPoly({1, 1}));
  EXPECT_EQ(build_gh_explicit(in).G.coeff({1, 1}), WPoly({1, 1}));
}

TEST(BuildGH, Spec122) {
  const GenFunInput in = unrestricted_input(DegreeCaps({1, 2, 2}));
  EXPECT_EQ(build_gh_recursive(in).G.coeff({1, 2, 2}), kP122);
  EXPECT_EQ(build_gh_explicit(in).G.coeff({1, 2, 2}), kP122);
}

TEST(BuildGH, NoConstantTerm) {
  const GenFunInput in = unrestricted_input(DegreeCaps({2, 2, 2}));
  EXPECT_TRUE(build_gh_explicit(in).G.coeff({0, 0, 0}).is_zero());
  EXPECT_TRUE(build_gh_recursive(in).G.coeff({0, 0, 0}).is_zero());
}

TEST(BuildGH, ThreeLetterDenominatorMatchesDisplayedForm) {
  const DegreeCaps caps({2, 2, 2});
  std::vector<TruncSeries> f;
  for (std::size_t i = 0; i < 3; ++i) f.push_back(TruncSeries::variable(caps, i));
  auto m = [&](std::vector<unsigned> e, WPoly c) { return TruncSeries::monomial(caps, e, c); };
  const WPoly w = WPoly::w();
  const TruncSeries displayed = TruncSeries::one(caps) - m({1, 0, 0}, {1}) - m({0, 1, 0}, {1}) -
                                m({0, 0, 1}, {1}) + m({1, 1, 0}, {1}) + m({0, 1, 1}, {1}) - m({1, 1, 1}, {1}) -
                                m({1, 1, 0}, w) - m({0, 1, 1}, w) + m({1, 1, 1}, WPoly({0, 2})) -
                                m({1, 1, 1}, WPoly({0, 0, 1}));
  EXPECT_EQ(succession_denominator(f), displayed);
}

TEST(BuildGH, AtWEqualsOneOnlyFirstOrderTermsSurvive) {
  std::mt19937_64 rng(17);
  const GenFunInput in = random_input(rng, DegreeCaps({2, 2, 1, 2}));
  const auto f = run_to_block(in);
  TruncSeries sum_f(in.caps);
  for (const auto& fi : f) sum_f += fi;
  const TruncSeries expect = series_inverse(TruncSeries::one(in.caps) - sum_f) - TruncSeries::one(in.caps);
  EXPECT_EQ(build_gh_explicit(in).G.substitute_w(1), expect.substitute_w(1));
}

TEST(BuildGH, RejectsMalformedInput) {
  const DegreeCaps caps({2, 2});
  GenFunInput in = unrestricted_input(caps);
  in.g[0] += TruncSeries::one(caps);
  EXPECT_THROW(build_gh_recursive(in), std::invalid_argument);

  GenFunInput cross = unrestricted_input(caps);
  cross.g[1] += TruncSeries::variable(caps, 0);
  EXPECT_THROW(build_gh_explicit(cross), std::invalid_argument);

  EXPECT_THROW(build_gh_explicit(GenFunInput{caps, {}}), std::invalid_argument);
}

TEST(BuildGHProperty, RecursiveEqualsExplicit) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<unsigned> kd(1, 5), cap(0, 3);
  for (int t = 0; t < 40; ++t) {
    const unsigned k = kd(rng);
    std::vector<unsigned> caps(k);
    for (auto& c : caps) c = cap(rng);
    // keep the ring small enough for the quadratic products
    while (DegreeCaps(caps).size() > 300) --caps[std::max_element(caps.begin(), caps.end()) - caps.begin()];
    const GenFunInput in = random_input(rng, DegreeCaps(caps));
    const GHPair a = build_gh_recursive(in), b = build_gh_explicit(in);
    EXPECT_EQ(a.G, b.G);
    EXPECT_EQ(a.H, b.H);
  }
}

TEST(BuildGHProperty, MatchesRunWeightedBruteForce) {
  std::mt19937_64 rng(99);
  for (const auto& c : std::vector<std::vector<unsigned>>{{2, 2}, {2, 1, 2}, {1, 2, 1, 1}, {3, 2}}) {
    const DegreeCaps caps(c);
    const GenFunInput in = random_input(rng, caps);
    std::vector<std::vector<BigInt>> weights(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      Exponent e(c.size(), 0);
      weights[i].push_back(0);
      for (unsigned j = 1; j <= c[i]; ++j) {
        e[i] = j;
        weights[i].push_back(in.g[i].coeff(e).coeff(0));
      }
    }
    const TruncSeries G = build_gh_recursive(in).G;
    for (std::uint64_t idx = 1; idx < caps.size(); ++idx) {
      const Exponent n = caps.decode(idx);
      EXPECT_EQ(G.coeff(n), bruteforce::run_weighted_polynomial(n, weights)) << "idx " << idx;
    }
  }
}

TEST(SuccessionPolynomial, PublishedExamples) {
  EXPECT_EQ(succession_polynomial(Specification({1, 2, 2})), kP122);
  EXPECT_EQ(succession_polynomial(Specification({2, 3, 4})), WPoly({93, 330, 435, 300, 90, 12}));
  EXPECT_EQ(succession_polynomial(Specification({2, 3, 1, 2, 2})),
            WPoly({14346, 26394, 21480, 10020, 2850, 474, 36}));
}

TEST(SuccessionPolynomial, SingleLetterHasNoSuccession) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(succession_polynomial(Specification({n})), WPoly::constant(1));
}

TEST(SuccessionPolynomial, ZeroMultiplicityKeepsValuesFixed) {
  // values 1 and 3 are never adjacent values, so no arrangement has a succession
  EXPECT_EQ(succession_polynomial(Specification({1, 0, 1})), WPoly::constant(2));
  EXPECT_EQ(succession_polynomial(Specification({1, 0, 1})), bruteforce::brute_force_polynomial({1, 0, 1}));
  EXPECT_EQ(succession_polynomial(Specification({0, 2, 1})), bruteforce::brute_force_polynomial({0, 2, 1}));
}

TEST(SuccessionPolynomial, RejectsEmptySpec) {
  EXPECT_THROW(Specification(std::vector<unsigned>{}), std::invalid_argument);
  EXPECT_THROW(Specification({0, 0}), std::invalid_argument);
}

TEST(RestrictedPolynomial, UnrestrictedRunsReproduceSuccessionPolynomial) {
  const Specification s({2, 1, 3});
  EXPECT_EQ(succession_polynomial_restricted(unrestricted_input(s.caps()), s.counts()), succession_polynomial(s));
}

TEST(RestrictedPolynomial, SingleRunOfOnes) {
  const DegreeCaps caps({1, 1});
  const GenFunInput in{caps, {TruncSeries::variable(caps, 0), unrestricted_input(caps).g[1]}};
  EXPECT_EQ(succession_polynomial_restricted(in, {1, 1}), WPoly({1, 1}));
}

TEST(RestrictedPolynomial, RunsOfTwosHaveLengthExactlyTwo) {
  // Only 122 and 221 keep the two 2's in a single run of length 2.
  const DegreeCaps caps({1, 2});
  const GenFunInput in{caps, {TruncSeries::variable(caps, 0), TruncSeries::monomial(caps, {0, 2})}};
  const WPoly p = succession_polynomial_restricted(in, {1, 2});
  EXPECT_EQ(p, WPoly({1, 1}));
  EXPECT_EQ(evaluate(p, BigInt(1)), BigInt(2));
  EXPECT_EQ(p, bruteforce::run_weighted_polynomial({1, 2}, {{0, 1}, {0, 0, 1}}));
}

TEST(RestrictedPolynomial, RejectsOutOfCaps) {
  const DegreeCaps caps({1, 1});
  EXPECT_THROW(succession_polynomial_restricted(unrestricted_input(caps), {2, 1}), std::out_of_range);
}

TEST(SuccessionPolynomialProperty, TotalsAreMultinomials) {
  for (const auto& s : all_specs(10, 10, false))
    EXPECT_EQ(evaluate(succession_polynomial(s), BigInt(1)), s.arrangements()) << s.to_string();
}

TEST(SuccessionPolynomialProperty, ShapeInvariants) {
  for (const auto& s : all_specs(4, 9, true)) {
    const WPoly p = succession_polynomial(s);
    EXPECT_EQ(p, succession_polynomial(s.reversed())) << s.to_string();
    EXPECT_LE(p.degree(), static_cast<long>(s.total()) - 1);
    for (const auto& c : p.coeffs()) EXPECT_GE(c, 0);
  }
}

}  // namespace
