#pragma once

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/random.hpp"

namespace rabin_nf {

inline constexpr int kMillerRabinRounds = 64;

// Trial division by the primes below 2000. Returns false when a proper
// divisor is found; small primes themselves pass.
bool passes_trial_division(const BigInt& n);

// Miller-Rabin with random bases from `rng`, after trial division.
bool is_probable_prime(const BigInt& n, RandomSource& rng, int rounds = kMillerRabinRounds);

}  // namespace rabin_nf
