#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/jacobi.hpp"
#include "rabin_nf/keygen.hpp"
#include "rabin_nf/nf_arith.hpp"

namespace rabin_nf {

struct Ciphertext {
  RingElement c;
  int b0 = 0;  // parity of alpha(m)
  int b1 = 0;  // (1 - (alpha(m)/N)) / 2

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct Plaintext {
  RingElement m;

  friend bool operator==(const Plaintext&, const Plaintext&) = default;
};

// Bytes per coefficient, floor((bitlen(N) - 1) / 8).
std::size_t bytes_per_coefficient(const BigInt& n);
// d * B - 1.
std::size_t message_capacity(const BigInt& n, int degree);

// Message embedding with B bytes per coefficient and L data bytes.
// Coefficient 0 is the big-endian integer of (count || head), where head is
// the first L mod B data bytes and count the number of coefficients in use;
// the remaining bytes fill coefficients 1, 2, ... as full B-byte chunks.
// The leading byte is non-zero, so a0 lies in [1, 256^B) and the empty
// message encodes to a0 = 1.
Plaintext encode(std::span<const std::uint8_t> data, const BigInt& n, const NumberField& field);
std::vector<std::uint8_t> decode(const Plaintext& m, const NumberField& field);

// Index of alpha(m), the first coefficient not = 0 mod N.
std::size_t leading_index(const RingElement& m);

Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, const NumberField& field);

// The four square roots of c mod N, in the order (+,+), (+,-), (-,+), (-,-)
// of the signs applied to the prime roots.
std::vector<RingElement> square_roots(const PrivateKey& sk, const RingElement& c,
                                      const NumberField& field);

Plaintext decrypt(const PrivateKey& sk, const Ciphertext& ct, const PublicKey& pk,
                  const NumberField& field);

}  // namespace rabin_nf
