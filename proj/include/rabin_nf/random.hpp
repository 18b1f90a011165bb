#pragma once

#include <cstdint>
#include <random>

#include "rabin_nf/bigint.hpp"

namespace rabin_nf {

// Source of randomness injected into key generation, non-square search and
// the attack drivers. The default implementation is a seeded Mersenne
// Twister and is NOT suitable for real keys; plug an entropy-backed source in
// through this interface instead.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  // Uniform in [0, bound), bound > 0.
  BigInt below(const BigInt& bound);

  // Uniform in [lo, hi], lo <= hi.
  BigInt between(const BigInt& lo, const BigInt& hi);

  // Uniform with exactly `bits` random bits (top bit not forced).
  BigInt bits(std::size_t count);
};

class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Backed by std::random_device.
class SystemRandom final : public RandomSource {
 public:
  std::uint64_t next_u64() override;

 private:
  std::random_device device_;
};

}  // namespace rabin_nf
