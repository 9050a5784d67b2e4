#include <random>

#include <gtest/gtest.h>

#include "negcurve/exact_arith.hpp"
#include "oracles.hpp"

using namespace negcurve;

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(8085), 89);
  EXPECT_EQ(isqrt(1170), 34);
  EXPECT_EQ(isqrt(7921), 89);
  EXPECT_EQ(isqrt(7920), 88);
}

TEST(Isqrt, NegativeInputIsContractViolation) { EXPECT_THROW(isqrt(-1), ContractViolation); }

TEST(Isqrt, RandomUpTo128Bits) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240117);
  for (int trial = 0; trial < 2000; ++trial) {
    const BigInt n = rng.get_z_bits(1 + trial % 128);
    const BigInt m = isqrt(n);
    EXPECT_LE(m * m, n);
    EXPECT_GT((m + 1) * (m + 1), n);
  }
}

TEST(Isqrt, PerfectSquaresAndNeighbours) {
  for (long k = 1; k < 3000; k += 7) {
    const BigInt s = BigInt(k) * k;
    EXPECT_EQ(isqrt(s), k);
    EXPECT_EQ(isqrt(s - 1), k - 1);
    EXPECT_EQ(isqrt(s + 1), k);
  }
}

TEST(WordIsqrt, AgreesWithBigInt) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const word::u128 n = (static_cast<word::u128>(gen()) << (trial % 62)) ^ gen();
    const auto m = word::isqrt(n);
    EXPECT_EQ(word::to_big(m), isqrt(word::to_big(n)));
  }
}

TEST(FloorDivSqrt, Examples) {
  EXPECT_EQ(floor_div_sqrt(15, 60), 1);
  EXPECT_EQ(floor_div_sqrt(12, 210), 0);
  EXPECT_EQ(floor_div_sqrt(1617, 8085), 17);
  EXPECT_EQ(floor_div_sqrt(0, 5), 0);
  EXPECT_THROW(floor_div_sqrt(3, 0), ContractViolation);
}

TEST(FloorDivSqrt, AgreesWithBisection) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> nd(0, 5000000), xd(1, 200000);
  for (int trial = 0; trial < 3000; ++trial) {
    const BigInt n = nd(gen), xi = xd(gen);
    EXPECT_EQ(floor_div_sqrt(n, xi), oracle::floor_div_sqrt(n, xi)) << n << " " << xi;
  }
  // perfect-square xi, where n / sqrt(xi) can be an integer
  for (long s = 1; s < 40; ++s)
    for (long n = 0; n < 200; ++n) EXPECT_EQ(floor_div_sqrt(n, s * s), n / s);
}

TEST(LtRSqrtXi, Examples) {
  EXPECT_TRUE(lt_r_sqrt_xi(12, 1, 210));
  EXPECT_TRUE(lt_r_sqrt_xi(15, 2, 60));
  EXPECT_FALSE(lt_r_sqrt_xi(16, 2, 60));
  // equality n = r * sqrt(xi) is not "<"
  for (long m = 1; m < 20; ++m)
    for (long r = 1; r < 6; ++r) EXPECT_FALSE(lt_r_sqrt_xi(r * m, r, m * m));
}

TEST(LtRSqrtXi, MatchesSquaredComparison) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> d(1, 100000);
  for (int trial = 0; trial < 5000; ++trial) {
    const BigInt n = d(gen), r = d(gen) % 50 + 1, xi = d(gen);
    EXPECT_NE(lt_r_sqrt_xi(n, r, xi), n * n >= r * r * xi);
  }
}

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(falling_factorial(3, 3), 6);
  EXPECT_EQ(falling_factorial(0, 0), 1);
  EXPECT_EQ(falling_factorial(17, 0), 1);
  EXPECT_EQ(falling_factorial(323, 17), oracle::derivative_at_one(323, 0, 0, 17, 0, 0));
}

TEST(RationalArith, StaysReduced) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> d(-1000, 1000);
  Rational acc = 0;
  for (int trial = 0; trial < 500; ++trial) {
    long den = d(gen);
    if (den == 0) den = 1;
    const Rational q = make_rational(d(gen), den);
    EXPECT_TRUE(is_reduced(q));
    switch (trial % 3) {
      case 0: acc += q; break;
      case 1: acc -= q; break;
      default:
        if (sgn(q) != 0) acc = acc * q + 1;
    }
    EXPECT_TRUE(is_reduced(acc));
  }
}

TEST(RationalText, FormatAndParse) {
  EXPECT_EQ(to_string(make_rational(2, -4)), "-1/2");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("2/4"), ContractViolation);
  EXPECT_THROW(parse_rational("1/0"), ContractViolation);
  EXPECT_THROW(parse_rational("x/2"), ContractViolation);
  EXPECT_THROW(make_rational(1, 0), ContractViolation);
}
