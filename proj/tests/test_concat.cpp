#include <gtest/gtest.h>

#include <random>
#include <string>

#include "cpell/concat.hpp"
#include "cpell/solver.hpp"
#include "support/reference_data.hpp"

using namespace cpell;

TEST(Concatenate, Examples) {
  EXPECT_EQ(concatenate(783, 56), 78356);
  EXPECT_EQ(concatenate(20, 7), 207);
  EXPECT_EQ(concatenate(1, 1), 11);
  EXPECT_EQ(concatenate(6, 21), 621);
  EXPECT_EQ(concatenate(5, 10), 510);
}

TEST(Concatenate, RejectsNonPositive) {
  EXPECT_THROW(concatenate(0, 5), DomainError);
  EXPECT_THROW(concatenate(5, 0), DomainError);
  EXPECT_THROW(concatenate(-1, 5), DomainError);
}

TEST(Concatenate, MatchesStringJoin) {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<unsigned long> dist(1, 1'000'000);
  for (int i = 0; i < 20000; ++i) {
    const auto a = dist(rng), b = dist(rng);
    ASSERT_EQ(concatenate(a, b).get_str(), std::to_string(a) + std::to_string(b));
  }
  const BigInt big("123456789012345678901234567890");
  EXPECT_EQ(concatenate(big, big).get_str(), big.get_str() + big.get_str());
}

TEST(IdentityHolds, Examples) {
  EXPECT_TRUE(identity_holds(20, 6));
  EXPECT_TRUE(identity_holds(175, 55));
  EXPECT_FALSE(identity_holds(21, 6));
  // 22 * (6∘22) = 22 * 622 = 13684 versus 7 * (21∘7) = 7 * 217 = 1519
  EXPECT_NE(BigInt(22) * 622, BigInt(7) * 217);
}

TEST(IdentityHolds, RejectsDegeneratePairs) {
  EXPECT_THROW(identity_holds(5, 0), DomainError);
  EXPECT_THROW(identity_holds(7, 7), DomainError);
  EXPECT_THROW(identity_holds(3, 9), DomainError);
  EXPECT_THROW(lemma1_check(5, 0), DomainError);
  EXPECT_THROW(lemma1_check(7, 7), DomainError);
}

TEST(Lemma1Check, Examples) {
  EXPECT_TRUE(lemma1_check(20, 6));
  EXPECT_FALSE(lemma1_check(4, 1));
  EXPECT_FALSE(lemma1_check(39, 12));
  EXPECT_FALSE(lemma1_check(21, 6));
}

TEST(Lemma1Check, EquivalentToIdentityOnSmallRange) {
  for (long x = 2; x <= 800; ++x)
    for (long y = 1; y < x; ++y)
      ASSERT_EQ(identity_holds(x, y), lemma1_check(x, y)) << x << "," << y;
}

TEST(IdentityHolds, GreenRowsOfTable) {
  for (const auto &row : testdata::kTable1) {
    const BigInt x{std::string(row.x)}, y{std::string(row.y)};
    EXPECT_EQ(identity_holds(x, y), row.green) << row.x;
    EXPECT_EQ(lemma1_check(x, y), row.green) << row.x;
  }
}

TEST(IdentityHolds, AgreesWithLemmaOnLargeTerms) {
  for (const auto &p : stream(250))
    ASSERT_EQ(identity_holds(p.x, p.y), lemma1_check(p.x, p.y)) << p.index;
}
