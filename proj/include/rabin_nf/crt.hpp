#pragma once

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/nf_arith.hpp"

namespace rabin_nf {

struct BezoutPair {
  BigInt a;  // a*p + b*q = 1
  BigInt b;
};

// Throws kNotCoprime when gcd(p, q) != 1.
BezoutPair bezout(const BigInt& p, const BigInt& q);

// Precomputed idempotents b*q (= 1 mod p, 0 mod q) and a*p for one pair of
// primes; combining is then two scalings and an addition per coefficient.
class CrtBasis {
 public:
  CrtBasis(const BigInt& p, const BigInt& q);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& n() const { return n_; }

  // m = x*b*q + y*a*p, coefficientwise, reduced into [0, pq).
  RingElement combine(const RingElement& x, const RingElement& y, const NumberField& field) const;

 private:
  BigInt p_, q_, n_;
  BigInt e_p_;  // b*q mod n
  BigInt e_q_;  // a*p mod n
};

RingElement crt_combine(const RingElement& x, const RingElement& y, const BigInt& p,
                        const BigInt& q, const NumberField& field);

}  // namespace rabin_nf
