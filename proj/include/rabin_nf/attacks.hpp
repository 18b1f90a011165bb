#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/nf_arith.hpp"
#include "rabin_nf/poly.hpp"
#include "rabin_nf/random.hpp"

// Factorisation procedures against badly chosen moduli. These exist to
// demonstrate why the scheme only uses inert primes; none of them threatens
// a modulus N = pq of two inert primes.
namespace rabin_nf::attack {

// Primes above which ideals are split by exhaustive root search.
inline constexpr unsigned long kDeskScaleLimit = 1ul << 20;

// P = (p, gp(theta)), gp a monic lift of an irreducible factor of g mod p.
struct PrimeIdealDesc {
  BigInt p;
  IntPoly gp;
  unsigned long f = 0;  // residue degree = deg gp

  friend bool operator==(const PrimeIdealDesc&, const PrimeIdealDesc&) = default;
};

// Ideal (n, h(theta)).
struct GeneratorIdeal {
  BigInt n;
  IntPoly h;
};

// Rows span the ideal as a Z-lattice on the basis 1, theta, ...;
// upper triangular with positive diagonal.
struct HnfMatrix {
  std::vector<std::vector<BigInt>> rows;

  friend bool operator==(const HnfMatrix&, const HnfMatrix&) = default;
};

using IdealDesc = std::variant<GeneratorIdeal, HnfMatrix>;

// Splits p by factoring g mod p (root scan plus an irreducible cofactor).
// Linear factors come first, ordered by their root in (-p/2, p/2]. When
// gp(theta) lies in P^2 (in particular gp = g for an inert p) the lift is
// replaced by gp + p.
std::vector<PrimeIdealDesc> prime_ideals_above(const BigInt& p, const NumberField& field);

// The four generators N, p*gq, q*gp, gp*gq of PQ.
std::vector<IntPoly> naive_generators(const PrimeIdealDesc& pp, const PrimeIdealDesc& qq,
                                      const NumberField& field);

// First generator whose content shares a proper factor with N.
std::optional<BigInt> factor_from_generator_gcd(const std::vector<IntPoly>& generators,
                                                const BigInt& n);

// HNF of the ideal generated by n and h(theta).
HnfMatrix ideal_hnf(const BigInt& n, const IntPoly& h, const NumberField& field);
HnfMatrix parse_hnf(std::string_view text);

// Product of the diagonal; kContractViolation unless upper triangular with a
// positive diagonal.
BigInt hnf_ideal_norm(const HnfMatrix& m);

// Determinant for HNF input. For generator input, |Res(g, h)| = |N(h(theta))|,
// which matches the ideal norm up to a factor coprime to n.
BigInt ideal_norm(const IdealDesc& ideal, const NumberField& field);

// For PQ with different residue degrees: strip the largest power of N from
// the ideal norm; what is left is divisible by exactly one of p, q.
// Returns (gcd, N / gcd). kAttackInapplicable when that gcd is trivial.
std::pair<BigInt, BigInt> factor_unequal_degrees(const BigInt& n, const IdealDesc& ideal,
                                                 const NumberField& field);

// m1^2 = m2^2 with m1 != +-m2 mod N: the norm of m1 + m2 is divisible by
// exactly one prime factor. kPreconditionViolated otherwise.
std::pair<BigInt, BigInt> factor_from_roots(const BigInt& n, const RingElement& m1,
                                            const RingElement& m2, const NumberField& field);

// Oracle factoring (N, a + sqrt(delta)) in Q(sqrt(delta)) into its two
// prime ideals, or giving up.
using IdealOracle = std::function<std::optional<std::pair<PrimeIdealDesc, PrimeIdealDesc>>(
    const BigInt& n, const BigInt& delta, const BigInt& a)>;

// Trial division stand-in for the hypothetical oracle; N <= 2^20.
std::pair<PrimeIdealDesc, PrimeIdealDesc> brute_force_ideal_oracle(const BigInt& n,
                                                                   const BigInt& delta,
                                                                   const BigInt& a);
IdealOracle exact_oracle();
// Wraps `base`, answering only with probability omega.
IdealOracle unreliable_oracle(IdealOracle base, double omega, RandomSource& rng);

enum class ReductionRoute { kSharedFactor, kPerfectSquare, kNormCofactor, kOracle };

const char* reduction_route_name(ReductionRoute route);

struct ReductionResult {
  std::optional<BigInt> factor;
  std::size_t iterations = 0;
  std::optional<ReductionRoute> route;
};

// Up to k rounds: a uniform in (sqrt N, N - sqrt N), delta = a^2 mod N,
// try the cheap gcd shortcuts, then ask the oracle to split (N, a + sqrt
// delta). Exhausting the budget yields an empty factor, not an error.
ReductionResult quadratic_reduction(const BigInt& n, const IdealOracle& oracle, std::size_t k,
                                    RandomSource& rng);

// The prime p under a prime ideal of norm p^f, f <= d.
BigInt prime_below(const BigInt& norm, int degree);
BigInt prime_below(const PrimeIdealDesc& ideal, const NumberField& field);
BigInt prime_below(const HnfMatrix& ideal, int degree);

}  // namespace rabin_nf::attack
