#include <vector>

#include <gtest/gtest.h>

#include "succdist/oracle.hpp"
#include "succdist/verify.hpp"

using namespace succdist;

namespace {

TEST(CountSuccessions, Examples) {
  const std::vector<unsigned> worked{2, 3, 1, 3, 1, 2, 2};
  EXPECT_EQ(count_successions(worked), 2U);
  EXPECT_EQ(count_successions(std::vector<unsigned>{1, 1, 1}), 0U);
  EXPECT_EQ(count_successions(std::vector<unsigned>{1, 2, 3}), 2U);
  EXPECT_EQ(count_successions(std::vector<unsigned>{3, 2, 1}), 0U);
  EXPECT_THROW(count_successions(std::vector<unsigned>{}), std::invalid_argument);
}

TEST(EnumerateDistribution, Examples) {
  EXPECT_EQ(enumerate_distribution(Specification({1, 2, 2})).counts, (std::vector<BigInt>{7, 12, 9, 2}));
  EXPECT_EQ(enumerate_distribution(Specification({3})).counts, (std::vector<BigInt>{1}));
  // 123 has two successions, 231 and 312 one each, the rest none
  const auto d = enumerate_distribution(Specification({1, 1, 1}));
  EXPECT_EQ(d.counts, (std::vector<BigInt>{3, 2, 1}));
  EXPECT_EQ(d.total, 6);
}

TEST(EnumerateDistribution, BudgetIsHardError) {
  const Specification s({3, 3, 3});  // 1680 arrangements
  EXPECT_THROW(enumerate_distribution(s, 1679), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_distribution(s, 1680));
}

TEST(EnumerateDistribution, VisitsEachArrangementOnceAndIsDeterministic) {
  for (const auto& s : all_specs(4, 7, true)) {
    const auto a = enumerate_distribution(s);
    EXPECT_EQ(a.total, s.arrangements()) << s.to_string();
    EXPECT_EQ(a, enumerate_distribution(s));
  }
}

}  // namespace
