#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "rabin_nf/attacks.hpp"
#include "rabin_nf/jacobi.hpp"
#include "rabin_nf/keygen.hpp"
#include "rabin_nf/scheme.hpp"

using namespace rabin_nf;
using namespace rabin_nf::attack;

namespace {

const NumberField& field(const char* name) { return find_profile(name).field; }

// Index of the lattice spanned by N*Z^d and h*theta^j, by closing the
// generators into a subgroup of (Z/N)^d. Desk-scale only.
long lattice_index_oracle(long n, const IntPoly& h, const NumberField& f) {
  const int d = f.degree();
  std::vector<std::vector<long>> gens;
  IntPoly shifted = divmod_monic(h, f.poly()).second;
  for (int j = 0; j < d; ++j) {
    std::vector<long> v(d, 0);
    for (std::size_t i = 0; i < shifted.size(); ++i) v[i] = mod_floor(shifted[i], n).get_si();
    gens.push_back(v);
    shifted = divmod_monic(poly_mul(shifted, IntPoly{0, 1}), f.poly()).second;
  }
  std::set<std::vector<long>> seen{std::vector<long>(d, 0)};
  std::vector<std::vector<long>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        std::vector<long> y(d);
        for (int i = 0; i < d; ++i) y[i] = (x[i] + g[i]) % n;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  long total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  return total / static_cast<long>(seen.size());
}

BigInt random_prime(RandomSource& rng, unsigned long lo, unsigned long hi,
                    const std::function<bool(const BigInt&)>& accept) {
  while (true) {
    BigInt p = rng.between(BigInt(lo), BigInt(hi));
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) != 0 && accept(p)) return p;
  }
}

std::pair<BigInt, BigInt> sorted(std::pair<BigInt, BigInt> v) {
  if (v.first > v.second) std::swap(v.first, v.second);
  return v;
}

}  // namespace

TEST(PrimeIdeals, QuadraticMinusFive) {
  const NumberField& f = field("quadratic-minus5");
  auto above3 = prime_ideals_above(3, f);
  ASSERT_EQ(above3.size(), 2u);
  EXPECT_EQ(above3[0].gp, (IntPoly{1, 1}));   // theta + 1
  EXPECT_EQ(above3[1].gp, (IntPoly{-1, 1}));  // theta - 1
  auto above7 = prime_ideals_above(7, f);
  ASSERT_EQ(above7.size(), 2u);
  for (const auto& P : above7) {
    EXPECT_EQ(P.f, 1u);
    EXPECT_EQ(mod_floor(resultant(f.poly(), P.gp), 7), 0);
  }
  auto above11 = prime_ideals_above(11, f);
  ASSERT_EQ(above11.size(), 1u);
  EXPECT_EQ(above11[0].f, 2u);
  // g itself vanishes at theta, so the generator is shifted by 11
  EXPECT_EQ(above11[0].gp, (IntPoly{16, 0, 1}));
}

TEST(PrimeIdeals, ResidueDegreesSumToDegree) {
  for (const char* name : {"quadratic-minus5", "quadratic-2", "quadratic-3", "gaussian", "zeta7-cubic",
                           "zeta9-cubic", "zeta13-cubic"}) {
    const NumberField& f = field(name);
    for (unsigned long p = 5; p < 200; ++p) {
      if (mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) continue;
      if (mod_floor(discriminant(f.poly()), p) == 0) continue;
      unsigned long sum = 0;
      for (const auto& P : prime_ideals_above(p, f)) {
        sum += P.f;
        // each ideal has norm p^f
        EXPECT_EQ(hnf_ideal_norm(ideal_hnf(P.p, P.gp, f)), pow_int(p, P.f)) << name << " " << p;
        EXPECT_EQ(prime_below(P, f), p);
      }
      EXPECT_EQ(sum, static_cast<unsigned long>(f.degree())) << name << " p=" << p;
    }
  }
}

TEST(PrimeIdeals, CubicSplittingMatchesIrreducibility) {
  const NumberField& f = field("zeta7-cubic");
  EXPECT_EQ(prime_ideals_above(13, f).size(), 3u);  // 13 = -1 mod 7
  auto inert = prime_ideals_above(3, f);
  ASSERT_EQ(inert.size(), 1u);
  EXPECT_EQ(inert[0].f, 3u);
  EXPECT_TRUE(oracle::berlekamp_irreducible(testing_support::small_poly(f.poly()), 3));
}

TEST(PrimeIdeals, Preconditions) {
  const NumberField& f = field("quadratic-minus5");
  EXPECT_RABIN_ERROR(prime_ideals_above(1048583, f), ErrorCode::kOutOfDeskScale);  // prime > 2^20
  EXPECT_RABIN_ERROR(prime_ideals_above(5, f), ErrorCode::kContractViolation);     // ramified
  EXPECT_RABIN_ERROR(prime_ideals_above(9, f), ErrorCode::kContractViolation);
  EXPECT_RABIN_ERROR(prime_ideals_above(3, field("zeta7")), ErrorCode::kOutOfDeskScale);
}

TEST(GeneratorGcd, NaiveGeneratorsLeakAFactor) {
  const NumberField& f = field("quadratic-minus5");
  auto P = prime_ideals_above(3, f)[0];
  auto Q = prime_ideals_above(7, f)[0];
  auto gens = naive_generators(P, Q, f);
  ASSERT_EQ(gens.size(), 4u);
  EXPECT_EQ(gens[0], IntPoly{21});
  auto g = factor_from_generator_gcd(gens, 21);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(*g == 3 || *g == 7);
  EXPECT_EQ(*g, 3);  // q*gp has content 7, but p*gq comes first with content 3
}

TEST(GeneratorGcd, RationalGeneratorAloneRevealsNothing) {
  EXPECT_FALSE(factor_from_generator_gcd({IntPoly{33}}, 33).has_value());
  EXPECT_FALSE(factor_from_generator_gcd({IntPoly{33}, IntPoly{1, 1}}, 33).has_value());
}

TEST(IdealNorm, HnfAgreesWithLatticeIndex) {
  const NumberField& f = field("quadratic-minus5");
  auto P = prime_ideals_above(3, f)[0];
  auto Q = prime_ideals_above(7, f)[0];
  IntPoly h = poly_mul(P.gp, Q.gp);
  HnfMatrix m = ideal_hnf(21, h, f);
  EXPECT_EQ(hnf_ideal_norm(m), 21);
  EXPECT_EQ(lattice_index_oracle(21, h, f), 21);
  EXPECT_EQ(hnf_ideal_norm(ideal_hnf(3, P.gp, f)), 3);
  EXPECT_EQ(lattice_index_oracle(3, P.gp, f), 3);
  EXPECT_EQ(hnf_ideal_norm(ideal_hnf(1, IntPoly{0, 1}, f)), 1);
  // cubic: (33, (theta+1)) in zeta7-cubic vs the subgroup oracle
  const NumberField& c = field("zeta7-cubic");
  for (long h0 = 0; h0 < 5; ++h0) {
    IntPoly hc{BigInt(h0), 1, 1};
    EXPECT_EQ(hnf_ideal_norm(ideal_hnf(33, hc, c)), lattice_index_oracle(33, hc, c)) << h0;
  }
}

TEST(IdealNorm, HnfShapeChecks) {
  EXPECT_RABIN_ERROR(hnf_ideal_norm(HnfMatrix{{{3, 0}, {1, 7}}}), ErrorCode::kContractViolation);
  EXPECT_RABIN_ERROR(hnf_ideal_norm(HnfMatrix{{{-3, 0}, {0, 7}}}), ErrorCode::kContractViolation);
  EXPECT_EQ(hnf_ideal_norm(HnfMatrix{{{3, 2}, {0, 7}}}), 21);
  EXPECT_EQ(parse_hnf("3,2\n0,7\n"), (HnfMatrix{{{3, 2}, {0, 7}}}));
  EXPECT_RABIN_ERROR(parse_hnf("3,2\n0\n"), ErrorCode::kParseError);
  EXPECT_RABIN_ERROR(parse_hnf(""), ErrorCode::kParseError);
}

TEST(UnequalDegrees, WorkedExampleN33) {
  const NumberField& f = field("quadratic-minus5");
  IntPoly h = poly_mul(IntPoly{1, 1}, IntPoly{16, 0, 1});
  EXPECT_EQ(resultant(f.poly(), h), 726);
  auto r = factor_unequal_degrees(33, GeneratorIdeal{33, h}, f);
  EXPECT_EQ(r.first, 11);
  EXPECT_EQ(r.second, 3);
  auto r2 = factor_unequal_degrees(33, ideal_hnf(33, h, f), f);
  EXPECT_EQ(sorted(r2), (std::pair<BigInt, BigInt>{3, 11}));
}

TEST(UnequalDegrees, EqualDegreesAreInapplicable) {
  const NumberField& f = field("quadratic-minus5");
  IntPoly h = poly_mul(prime_ideals_above(3, f)[0].gp, prime_ideals_above(7, f)[0].gp);
  EXPECT_RABIN_ERROR(factor_unequal_degrees(21, GeneratorIdeal{21, h}, f),
                     ErrorCode::kAttackInapplicable);
  EXPECT_RABIN_ERROR(factor_unequal_degrees(21, ideal_hnf(21, h, f), f), ErrorCode::kAttackInapplicable);
  // inert-inert: the ideal is (N) itself
  EXPECT_RABIN_ERROR(factor_unequal_degrees(11 * 19, GeneratorIdeal{209, IntPoly{209}}, f),
                     ErrorCode::kAttackInapplicable);
  EXPECT_RABIN_ERROR(factor_unequal_degrees(209, ideal_hnf(209, IntPoly{209}, f), f),
                     ErrorCode::kAttackInapplicable);
}

TEST(UnequalDegrees, RandomQuadraticInstances) {
  DeterministicRandom rng(11);
  for (const char* name : {"quadratic-minus5", "quadratic-2", "quadratic-3"}) {
    const NumberField& f = field(name);
    const BigInt delta = -f.poly()[0];
    const BigInt disc = discriminant(f.poly());
    auto split = [&](const BigInt& p) { return disc % p != 0 && jacobi(mod_floor(delta, p), p) == 1; };
    auto inert = [&](const BigInt& p) { return disc % p != 0 && jacobi(mod_floor(delta, p), p) == -1; };
    for (int i = 0; i < 100; ++i) {
      BigInt p = random_prime(rng, 3, 65535, split);
      BigInt q = random_prime(rng, 3, 65535, inert);
      BigInt n = p * q;
      auto P = prime_ideals_above(p, f);
      auto Q = prime_ideals_above(q, f);
      ASSERT_EQ(P.size(), 2u);
      ASSERT_EQ(Q.size(), 1u);
      IntPoly h = poly_mul(P[rng.below(2).get_ui()].gp, Q[0].gp);
      auto expect = sorted({p, q});
      ASSERT_EQ(sorted(factor_unequal_degrees(n, GeneratorIdeal{n, h}, f)), expect) << name;
      ASSERT_EQ(sorted(factor_unequal_degrees(n, ideal_hnf(n, h, f), f)), expect) << name;
    }
  }
}

TEST(FactorFromRoots, SmallClassical) {
  const NumberField& f = field("classical");
  auto r = factor_from_roots(21, f.element({2}, 21), f.element({16}, 21), f);
  EXPECT_EQ(sorted(r), (std::pair<BigInt, BigInt>{3, 7}));
  EXPECT_RABIN_ERROR(factor_from_roots(21, f.element({2}, 21), f.element({19}, 21), f),
                     ErrorCode::kPreconditionViolated);
  EXPECT_RABIN_ERROR(factor_from_roots(21, f.element({2}, 21), f.element({2}, 21), f),
                     ErrorCode::kPreconditionViolated);
  EXPECT_RABIN_ERROR(factor_from_roots(21, f.element({2}, 21), f.element({3}, 21), f),
                     ErrorCode::kPreconditionViolated);
}

TEST(FactorFromRoots, RootsHarvestedFromDecryption) {
  DeterministicRandom rng(12);
  for (const char* name : {"zeta7-cubic", "gaussian", "zeta9-cubic"}) {
    const auto& profile = find_profile(name);
    for (int i = 0; i < 10; ++i) {
      KeyPair k = keygen(profile, 16, rng);
      const std::vector<std::uint8_t> data{static_cast<std::uint8_t>(i + 1)};
      Plaintext m = encode(data, k.pub.n, profile.field);
      auto roots = square_roots(k.priv, mul(m.m, m.m, profile.field), profile.field);
      ASSERT_EQ(roots.size(), 4u);
      std::size_t cracked = 0;
      for (std::size_t j = 1; j < 4; ++j) {
        if (roots[j] == neg(roots[0], profile.field)) continue;
        auto r = factor_from_roots(k.pub.n, roots[0], roots[j], profile.field);
        EXPECT_EQ(sorted(r), sorted({k.priv.p, k.priv.q}));
        ++cracked;
      }
      EXPECT_EQ(cracked, 2u);
    }
  }
}

TEST(QuadraticReduction, ExactOracleOnN21) {
  std::set<ReductionRoute> routes;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DeterministicRandom rng(seed);
    auto r = quadratic_reduction(21, exact_oracle(), 1, rng);
    ASSERT_TRUE(r.factor.has_value()) << seed;
    EXPECT_TRUE(*r.factor == 3 || *r.factor == 7);
    EXPECT_EQ(r.iterations, 1u);
    routes.insert(*r.route);
  }
  // a = 5 gives delta = 4 = 2^2
  EXPECT_TRUE(routes.contains(ReductionRoute::kPerfectSquare));
}

TEST(QuadraticReduction, OracleRouteOnLargerSemiprimes) {
  DeterministicRandom rng(13);
  std::size_t via_oracle = 0;
  for (int i = 0; i < 30; ++i) {
    BigInt p = random_prime(rng, 200, 1000, [](const BigInt&) { return true; });
    BigInt q = random_prime(rng, 200, 1000, [&](const BigInt& x) { return x != p; });
    auto r = quadratic_reduction(p * q, exact_oracle(), 8, rng);
    ASSERT_TRUE(r.factor.has_value());
    EXPECT_TRUE(*r.factor == p || *r.factor == q);
    if (*r.route == ReductionRoute::kOracle) ++via_oracle;
  }
  EXPECT_GT(via_oracle, 0u);
}

TEST(QuadraticReduction, SilentOracleExhaustsBudget) {
  DeterministicRandom rng(14);
  const BigInt n = BigInt(1048573) * 1048571;  // two 20-bit primes
  auto silent = unreliable_oracle(exact_oracle(), 0.0, rng);
  auto r = quadratic_reduction(n, silent, 8, rng);
  EXPECT_FALSE(r.factor.has_value());
  EXPECT_EQ(r.iterations, 8u);
  EXPECT_FALSE(r.route.has_value());
}

TEST(QuadraticReduction, Preconditions) {
  DeterministicRandom rng(15);
  EXPECT_RABIN_ERROR(quadratic_reduction(22, exact_oracle(), 1, rng), ErrorCode::kContractViolation);
  EXPECT_RABIN_ERROR(quadratic_reduction(7, exact_oracle(), 1, rng), ErrorCode::kContractViolation);
}

TEST(BruteForceOracle, N21) {
  auto [P, Q] = brute_force_ideal_oracle(21, 16, 17);
  EXPECT_EQ(P.p, 3);
  EXPECT_EQ(Q.p, 7);
  for (const auto& I : {P, Q}) {
    EXPECT_EQ(I.f, 1u);
    ASSERT_EQ(I.gp.size(), 2u);
    // gp = theta - r with r^2 = delta and a + r = 0 mod p
    BigInt r = -I.gp[0];
    EXPECT_EQ(mod_floor(r * r - 16, I.p), 0);
    EXPECT_EQ(mod_floor(17 + r, I.p), 0);
  }
  auto [P15, Q15] = brute_force_ideal_oracle(15, 4, 2);
  EXPECT_EQ(P15.p, 3);
  EXPECT_EQ(Q15.p, 5);
}

TEST(BruteForceOracle, Preconditions) {
  EXPECT_RABIN_ERROR(brute_force_ideal_oracle(23, 4, 2), ErrorCode::kContractViolation);
  EXPECT_RABIN_ERROR(brute_force_ideal_oracle(49, 4, 2), ErrorCode::kContractViolation);
  EXPECT_RABIN_ERROR(brute_force_ideal_oracle(BigInt(1) << 21, 4, 2), ErrorCode::kOutOfDeskScale);
}

TEST(PrimeBelow, NormsOfPrimeIdeals) {
  EXPECT_EQ(prime_below(BigInt(121), 2), 11);
  EXPECT_EQ(prime_below(BigInt(3), 2), 3);
  EXPECT_EQ(prime_below(BigInt(27), 3), 3);
  EXPECT_RABIN_ERROR(prime_below(BigInt(27), 2), ErrorCode::kMalformedIdeal);
  EXPECT_RABIN_ERROR(prime_below(BigInt(12), 3), ErrorCode::kMalformedIdeal);
  EXPECT_RABIN_ERROR(prime_below(BigInt(1), 3), ErrorCode::kMalformedIdeal);
  EXPECT_EQ(prime_below(HnfMatrix{{{11, 0}, {0, 11}}}, 2), 11);
}
