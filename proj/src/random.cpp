#include "rabin_nf/random.hpp"

#include "rabin_nf/error.hpp"

namespace rabin_nf {

BigInt RandomSource::bits(std::size_t count) {
  BigInt out = 0;
  std::size_t have = 0;
  while (have < count) {
    std::uint64_t word = next_u64();
    std::size_t take = count - have < 64 ? count - have : 64;
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    BigInt chunk;
    mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    out = (out << static_cast<mp_bitcnt_t>(take)) | chunk;
    have += take;
  }
  return out;
}

BigInt RandomSource::below(const BigInt& bound) {
  require(bound > 0, ErrorCode::kContractViolation, "random bound must be positive");
  if (bound == 1) return 0;
  std::size_t n = bit_length(bound - 1);
  // rejection sampling, expected < 2 draws
  while (true) {
    BigInt candidate = bits(n);
    if (candidate < bound) return candidate;
  }
}

BigInt RandomSource::between(const BigInt& lo, const BigInt& hi) {
  require(lo <= hi, ErrorCode::kContractViolation, "empty random range");
  return lo + below(hi - lo + 1);
}

std::uint64_t SystemRandom::next_u64() {
  std::uint64_t hi = device_();
  std::uint64_t lo = device_();
  return (hi << 32) ^ lo;
}

}  // namespace rabin_nf
