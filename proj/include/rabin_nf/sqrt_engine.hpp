#pragma once

#include <optional>

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/nf_arith.hpp"
#include "rabin_nf/random.hpp"

namespace rabin_nf {

// n = 2^s * t with t odd.
struct TwoPowerSplit {
  unsigned long s = 0;
  BigInt t;
};

TwoPowerSplit split_two_power(const BigInt& n);

// The residue field Z[theta]/(p) of a prime p of residue degree f; for an
// inert prime f equals the field degree.
class PrimeContext {
 public:
  PrimeContext(BigInt p, unsigned long residue_degree);
  // Inert prime: residue degree = d.
  static PrimeContext inert(const BigInt& p, const NumberField& field);

  const BigInt& p() const { return p_; }
  unsigned long residue_degree() const { return f_; }
  const BigInt& cardinality() const { return cardinality_; }

  const std::optional<RingElement>& nonsquare() const { return nonsquare_; }
  // The caller vouches that `m` fails the Euler test.
  void set_nonsquare(RingElement m) { nonsquare_ = std::move(m); }

 private:
  BigInt p_;
  unsigned long f_;
  BigInt cardinality_;
  std::optional<RingElement> nonsquare_;
};

// Euler's criterion: x^((p^f-1)/2) == 1. Throws kZeroElement for x == 0.
bool is_square_mod_p(const RingElement& x, const PrimeContext& ctx, const NumberField& field);

// Random elements until one fails the Euler test; at most 128 trials.
RingElement find_nonsquare(const PrimeContext& ctx, const NumberField& field, RandomSource& rng);

// Inverse via the product of the non-trivial Galois conjugates,
// c~ = c^((p^f-1)/(p-1) - 1), whose product with c is a unit of F_p.
RingElement invert_mod_p(const RingElement& c, const PrimeContext& ctx, const NumberField& field);

struct TonelliShanksTrace {
  unsigned long s = 0;
  BigInt t;
  BigInt i;  // the exponent found by the sequential search
  RingElement inverse;
};

// Needs a non-square in ctx, or an rng to find one.
RingElement tonelli_shanks(const RingElement& c, PrimeContext& ctx, const NumberField& field,
                           RandomSource* rng = nullptr, TonelliShanksTrace* trace = nullptr);
RingElement tonelli_shanks(const RingElement& c, const PrimeContext& ctx, const NumberField& field,
                           TonelliShanksTrace* trace = nullptr);

// c^((p^f+1)/4), valid when p^f = 3 mod 4.
RingElement fast_sqrt(const RingElement& c, const PrimeContext& ctx, const NumberField& field);

enum class SqrtMethod { kZero, kFast, kTonelliShanks };

SqrtMethod sqrt_method(const PrimeContext& ctx);

// Dispatcher: 0 -> 0, fast_sqrt when p^f = 3 mod 4, Tonelli-Shanks otherwise.
// Throws kNotASquare when c has no root.
RingElement sqrt_mod_prime(const RingElement& c, PrimeContext& ctx, const NumberField& field,
                           RandomSource* rng = nullptr);
RingElement sqrt_mod_prime(const RingElement& c, const PrimeContext& ctx, const NumberField& field);

}  // namespace rabin_nf
