#include <gtest/gtest.h>

#include <random>

#include <mpfr.h>

#include "cpell/quadring.hpp"
#include "support/random_big.hpp"

using namespace cpell;

namespace {

// Independent evaluation of floor((p + q sqrt 10) / 40) with MPFR directed
// rounding: a lower and an upper bound are computed, and the precision is
// raised until both floor to the same integer.
BigInt interval_floor(const BigInt &p, const BigInt &q) {
  const auto width = mpz_sizeinbase(p.get_mpz_t(), 2) +
                     mpz_sizeinbase(q.get_mpz_t(), 2);
  for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(width) + 64;; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(lo, 10, MPFR_RNDD);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_mul_z(lo, lo, q.get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(lo, lo, p.get_mpz_t(), MPFR_RNDD);
    mpfr_div_ui(lo, lo, 40, MPFR_RNDD);
    mpfr_set_ui(hi, 10, MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_mul_z(hi, hi, q.get_mpz_t(), MPFR_RNDU);
    mpfr_add_z(hi, hi, p.get_mpz_t(), MPFR_RNDU);
    mpfr_div_ui(hi, hi, 40, MPFR_RNDU);
    BigInt flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (flo == fhi)
      return flo;
  }
}

QuadInt random_quad(std::mt19937_64 &rng, unsigned bits) {
  return {testkit::random_big_any(rng, bits, true),
          testkit::random_big_any(rng, bits, true)};
}

} // namespace

TEST(QuadMul, Examples) {
  EXPECT_EQ(quad_mul(epsilon(), epsilon()), QuadInt(19, 6));
  const QuadInt z(-12345, 678);
  EXPECT_EQ(quad_mul(z, QuadInt::one()), z);
  EXPECT_EQ(quad_mul(QuadInt(9, 3), phi()), QuadInt(351, 111));
  // the same step written out coordinate-wise
  EXPECT_EQ(19 * 9 + 60 * 3, 351);
  EXPECT_EQ(6 * 9 + 19 * 3, 111);
}

TEST(QuadNorm, Examples) {
  EXPECT_EQ(quad_norm(epsilon()), -1);
  EXPECT_EQ(quad_norm(QuadInt(1, 1)), -9);
  EXPECT_EQ(quad_norm(QuadInt(9, 3)), -9);
  EXPECT_EQ(quad_norm(phi()), 1);
}

TEST(QuadPow, Examples) {
  EXPECT_EQ(quad_pow(epsilon(), 2), QuadInt(19, 6));
  EXPECT_EQ(quad_pow(QuadInt(5, -7), 0), QuadInt::one());
  // (19 + 6 sqrt10)^2 = 361 + 360 + 228 sqrt10, about 1441.9993
  EXPECT_EQ(quad_pow(phi(), 2), QuadInt(721, 228));
  EXPECT_EQ(quad_pow(epsilon(), 4), QuadInt(721, 228));
  EXPECT_EQ(quad_pow(phi(), 2), quad_mul(phi(), phi()));
}

TEST(QuadPow, MatchesRepeatedMultiplication) {
  QuadInt acc = QuadInt::one();
  BigInt norm_power = 1;
  const QuadInt z(-4, 3);
  for (std::uint64_t n = 0; n < 80; ++n) {
    ASSERT_EQ(quad_pow(z, n), acc) << n;
    ASSERT_EQ(quad_norm(quad_pow(z, n)), norm_power) << n;
    acc = acc * z;
    norm_power *= quad_norm(z);
  }
}

TEST(QuadRing, NormIsMultiplicative) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const QuadInt z = random_quad(rng, 400), w = random_quad(rng, 400);
    ASSERT_EQ(quad_norm(quad_mul(z, w)), quad_norm(z) * quad_norm(w));
    ASSERT_EQ(conj(conj(z)), z);
    ASSERT_EQ(quad_mul(z, conj(z)).a, quad_norm(z));
    ASSERT_EQ(quad_mul(z, conj(z)).b, 0);
  }
}

TEST(QuadRing, UnitInverse) {
  EXPECT_EQ(-conj(epsilon()), QuadInt(-3, 1));
  EXPECT_EQ(quad_mul(epsilon(), -conj(epsilon())), QuadInt::one());
  EXPECT_EQ(quad_mul(phi(), conj(phi())), QuadInt::one());
}

TEST(QuadRing, PowersOfEpsilonAlternateNorm) {
  for (std::uint64_t n = 0; n <= 99; ++n)
    ASSERT_EQ(quad_norm(quad_pow(epsilon(), n)), n % 2 ? -1 : 1) << n;
}

TEST(QuadSign, ExactSign) {
  EXPECT_EQ(quad_sign(QuadInt(0, 0)), 0);
  EXPECT_EQ(quad_sign(QuadInt(-3, 1)), 1); // sqrt 10 > 3
  EXPECT_EQ(quad_sign(QuadInt(4, -1)), 1);
  EXPECT_EQ(quad_sign(QuadInt(-4, 1)), -1);
  EXPECT_EQ(quad_sign(QuadInt(3, -1)), -1);
  EXPECT_EQ(quad_sign(conj(quad_pow(phi(), 40))), 1);
  EXPECT_EQ(quad_sign(conj(quad_pow(epsilon(), 41))), -1);
}

TEST(FloorValue, Examples) {
  EXPECT_EQ(floor_value(ScaledQuad(3510, 1110)), 175);
  EXPECT_EQ(floor_value(ScaledQuad(1110, 351)), 55);
  EXPECT_EQ(floor_value(ScaledQuad(40, 0)), 1);
  // the same two values from their factored forms
  EXPECT_EQ(quad_mul(QuadInt(90, 30), phi()), QuadInt(3510, 1110));
  EXPECT_EQ(quad_mul(QuadInt(30, 9), phi()), QuadInt(1110, 351));
}

TEST(FloorValue, NegativeRationalPart) {
  EXPECT_EQ(floor_value(ScaledQuad(-41, 0)), -2);
  EXPECT_EQ(floor_value(ScaledQuad(-40, 0)), -1);
  EXPECT_EQ(floor_value(ScaledQuad(-127, 1)), -4); // (-127 + 3.16..)/40
}

TEST(FloorValue, RejectsNegativeSqrtCoordinate) {
  EXPECT_THROW(floor_value(ScaledQuad(100, -1)), DomainError);
}

TEST(FloorValue, UnitBounds) {
  EXPECT_EQ(floor_value(ScaledQuad(40 * phi())), 37);
  EXPECT_EQ(floor_value(ScaledQuad(40 * quad_pow(phi(), 2))), 1441);
  EXPECT_EQ(floor_value(ScaledQuad(40 * epsilon())), 6);
}

TEST(FloorValue, AgreesWithIntervalEvaluation) {
  std::mt19937_64 rng(4040);
  for (int i = 0; i < 1000; ++i) {
    const BigInt p = testkit::random_big_any(rng, 600, true);
    const BigInt q = testkit::random_big_any(rng, 600);
    ASSERT_EQ(floor_value(ScaledQuad(p, q)), interval_floor(p, q))
        << p.get_str() << " " << q.get_str();
  }
}
