#include "rabin_nf/primality.hpp"

#include <vector>

namespace rabin_nf {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 2000;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& odd_part,
                        unsigned long two_power, const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < two_power; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool passes_trial_division(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n, RandomSource& rng, int rounds) {
  if (n < 2) return false;
  if (!passes_trial_division(n)) return false;
  if (n < 2000 * 2000) return true;  // no factor below its square root

  BigInt n_minus_1 = n - 1;
  unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  BigInt d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);

  // Base 2 first: it rejects almost every composite that survived sieving.
  if (!miller_rabin_round(n, n_minus_1, d, s, BigInt(2))) return false;
  for (int round = 1; round < rounds; ++round) {
    BigInt base = rng.between(2, n - 2);
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  return true;
}

}  // namespace rabin_nf
