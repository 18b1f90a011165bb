#include <cstdint>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rabin_nf/bigint.hpp"
#include "rabin_nf/jacobi.hpp"
#include "rabin_nf/poly.hpp"
#include "rabin_nf/primality.hpp"
#include "rabin_nf/random.hpp"

using namespace rabin_nf;
using testing_support::small_poly;

namespace {

IntPoly P(std::initializer_list<long> c) {
  IntPoly out;
  for (long x : c) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(BigInt, ParsesStrictDecimal) {
  EXPECT_EQ(parse_bigint("12345678901234567890"), BigInt("12345678901234567890"));
  EXPECT_EQ(parse_bigint("-7"), -7);
  EXPECT_RABIN_ERROR(parse_bigint(""), ErrorCode::kParseError);
  EXPECT_RABIN_ERROR(parse_bigint("1a"), ErrorCode::kParseError);
  EXPECT_EQ(parse_bigint(" 1\n"), 1);
  EXPECT_RABIN_ERROR(parse_bigint("1 2"), ErrorCode::kParseError);
  EXPECT_RABIN_ERROR(parse_bigint("-"), ErrorCode::kParseError);
}

TEST(BigInt, DecimalListsRoundTrip) {
  std::vector<BigInt> v{BigInt(0), BigInt(-3), BigInt("999999999999999999999")};
  EXPECT_EQ(join_decimal(v), "0,-3,999999999999999999999");
  EXPECT_EQ(split_decimal(join_decimal(v)), v);
  EXPECT_RABIN_ERROR(split_decimal("1,,2"), ErrorCode::kParseError);
}

TEST(BigInt, RootsAndValuations) {
  BigInt r;
  EXPECT_TRUE(exact_root(121, 2, &r));
  EXPECT_EQ(r, 11);
  EXPECT_TRUE(exact_root(27, 3, &r));
  EXPECT_EQ(r, 3);
  EXPECT_FALSE(exact_root(28, 3, &r));
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(valuation(BigInt(72), BigInt(2)), 3u);
  EXPECT_EQ(mod_symmetric(BigInt(5), BigInt(7)), -2);
  EXPECT_EQ(mod_floor(BigInt(-1), BigInt(7)), 6);
}

TEST(Resultant, WorkedExamples) {
  EXPECT_EQ(resultant(P({5, 0, 1}), P({-1, 1})), 6);
  EXPECT_EQ(resultant(P({5, 0, 1}), P({1})), 1);
  EXPECT_EQ(resultant(P({5, 0, 1}), poly_mul(P({1, 1}), P({16, 0, 1}))), 726);
  EXPECT_EQ(resultant(P({5, 0, 1}), IntPoly{}), 0);
}

TEST(Resultant, MatchesMultiplicationMatrixDeterminant) {
  DeterministicRandom rng(11);
  const std::vector<IntPoly> fields{P({-1, -2, 1, 1}), P({1, 0, 1}), P({5, 0, 1}),
                                    P({1, -3, 0, 1}), P({1, 1, 1, 1, 1}), P({-2, 0, 0, 1})};
  for (const auto& g : fields) {
    for (int trial = 0; trial < 40; ++trial) {
      IntPoly h;
      for (int i = 0; i < degree(g); ++i) h.push_back(rng.between(-50, 50));
      EXPECT_EQ(resultant(g, h), oracle::norm_by_determinant(h, g)) << format_poly(h);
    }
  }
}

TEST(Discriminant, KnownFields) {
  EXPECT_EQ(discriminant(P({-1, -2, 1, 1})), 49);
  EXPECT_EQ(discriminant(P({1, -3, 0, 1})), 81);
  EXPECT_EQ(discriminant(P({1, 0, 1})), -4);
  EXPECT_EQ(discriminant(P({5, 0, 1})), -20);
  EXPECT_EQ(discriminant(P({0, 1})), 1);
}

TEST(PolyText, RoundTrip) {
  IntPoly g = P({-1, -2, 1, 1});
  EXPECT_EQ(format_poly(g), "-1,-2,1,1");
  EXPECT_EQ(parse_poly("-1,-2,1,1"), g);
  EXPECT_EQ(pretty_poly(P({16, 0, 1})), "x^2 + 16");
}

TEST(FpPoly, IrreducibilityMatchesRootScanForSmallDegrees) {
  // Degree 2 and 3 polynomials are irreducible exactly when rootless.
  DeterministicRandom rng(5);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (int trial = 0; trial < 60; ++trial) {
      int d = 2 + static_cast<int>(rng.below(2).get_ui());
      IntPoly f;
      for (int i = 0; i < d; ++i) f.push_back(rng.below(p));
      f.push_back(1);
      bool rootless = true;
      for (long x = 0; x < p; ++x) rootless = rootless && poly_eval(f, x) % p != 0;
      EXPECT_EQ(fp::is_irreducible(f, p), rootless) << format_poly(f) << " mod " << p;
    }
  }
}

TEST(FpPoly, IrreducibilityOfCyclotomicQuarticAndSextic) {
  // Phi_5 is irreducible mod p iff p has order 4 mod 5.
  for (long p : {2L, 3L, 7L, 13L, 17L}) EXPECT_TRUE(fp::is_irreducible(P({1, 1, 1, 1, 1}), p));
  for (long p : {11L, 19L, 29L}) EXPECT_FALSE(fp::is_irreducible(P({1, 1, 1, 1, 1}), p));
  EXPECT_TRUE(fp::is_irreducible(P({1, 1, 1, 1, 1, 1, 1}), 3));
  EXPECT_FALSE(fp::is_irreducible(P({1, 1, 1, 1, 1, 1, 1}), 13));
}

TEST(Jacobi, WorkedExamples) {
  EXPECT_EQ(jacobi(1, 33), 1);
  EXPECT_EQ(jacobi(2, 33), 1);
  EXPECT_EQ(jacobi(3, 33), 0);
  EXPECT_RABIN_ERROR(jacobi(1, 34), ErrorCode::kContractViolation);
}

TEST(Jacobi, MatchesReciprocityOracleExhaustively) {
  for (std::uint64_t n = 3; n < 400; n += 2) {
    for (std::uint64_t a = 0; a < n; ++a) {
      ASSERT_EQ(jacobi(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(n))),
                oracle::jacobi(a, n))
          << a << "/" << n;
    }
  }
}

TEST(Jacobi, ZeroExactlyWhenNotCoprime) {
  for (long n = 3; n < 200; n += 2) {
    for (long a = 0; a < n; ++a) {
      EXPECT_EQ(jacobi(a, n) == 0, gcd(BigInt(a), BigInt(n)) != 1);
    }
  }
}

TEST(Primality, AgreesWithTrialDivisionBelow30000) {
  DeterministicRandom rng(1);
  for (std::uint64_t n = 0; n < 30000; ++n) {
    ASSERT_EQ(is_probable_prime(BigInt(static_cast<unsigned long>(n)), rng),
              oracle::is_prime_small(n))
        << n;
  }
}

TEST(Primality, LargeValues) {
  DeterministicRandom rng(2);
  // Mersenne primes, a Carmichael number and a strong pseudoprime to base 2.
  EXPECT_TRUE(is_probable_prime(BigInt("2305843009213693951"), rng));
  EXPECT_TRUE(is_probable_prime(BigInt("170141183460469231731687303715884105727"), rng));
  EXPECT_FALSE(is_probable_prime(BigInt("41041"), rng));
  EXPECT_FALSE(is_probable_prime(BigInt("3215031751"), rng));
  EXPECT_FALSE(is_probable_prime(BigInt("2305843009213693951") * BigInt("2147483647"), rng));
  for (int i = 0; i < 200; ++i) {
    BigInt v = rng.bits(200) | 1;
    EXPECT_EQ(is_probable_prime(v, rng), mpz_probab_prime_p(v.get_mpz_t(), 40) != 0);
  }
}
