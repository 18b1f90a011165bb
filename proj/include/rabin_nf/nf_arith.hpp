#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/poly.hpp"

namespace rabin_nf {

// An element of Z[theta]/(M): d residues in [0, M) on the basis
// 1, theta, ..., theta^(d-1).
struct RingElement {
  std::vector<BigInt> coeffs;
  BigInt modulus;

  bool is_zero() const;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// K = Q[x]/(g) for a monic irreducible integer polynomial g, together with
// the reduction rules theta^(d+k) = sum_j table[k][j] theta^j, 0 <= k < d-1.
class NumberField {
 public:
  // Throws kInvalidPolynomial for a non-monic or constant g. Irreducibility
  // is certified by a small prime modulo which g stays irreducible; without
  // one the field is still built but marked unverified.
  static NumberField make(IntPoly g);

  const IntPoly& poly() const { return g_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<BigInt>>& power_table() const { return power_table_; }
  bool verified() const { return witness_.has_value(); }
  std::optional<unsigned long> irreducibility_witness() const { return witness_; }

  RingElement element(std::vector<BigInt> coeffs, const BigInt& modulus) const;
  RingElement zero(const BigInt& modulus) const;
  RingElement one(const BigInt& modulus) const;
  RingElement constant(const BigInt& value, const BigInt& modulus) const;
  // theta itself (theta = 0 when d = 1 and g = x).
  RingElement generator(const BigInt& modulus) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.g_ == b.g_; }

 private:
  NumberField() = default;

  IntPoly g_;
  int degree_ = 0;
  std::vector<std::vector<BigInt>> power_table_;
  std::optional<unsigned long> witness_;
};

enum class RingOp { kAdd, kSub, kNeg, kMul };

RingElement ring_arith(RingOp op, const RingElement& a, const RingElement& b,
                       const NumberField& field);

RingElement add(const RingElement& a, const RingElement& b, const NumberField& field);
RingElement sub(const RingElement& a, const RingElement& b, const NumberField& field);
RingElement neg(const RingElement& a, const NumberField& field);
RingElement mul(const RingElement& a, const RingElement& b, const NumberField& field);
RingElement scale(const RingElement& a, const BigInt& k, const NumberField& field);

// Coefficientwise reduction to a smaller modulus dividing the current one
// (e.g. from N down to p).
RingElement reduce_to(const RingElement& a, const BigInt& modulus, const NumberField& field);

struct PowStats {
  std::size_t multiplications = 0;
};

// Left-to-right sliding-window exponentiation; `stats` counts ring
// multiplications (d = 1 uses GMP directly unless stats are requested).
RingElement pow_mod(const RingElement& a, const BigInt& e, const NumberField& field,
                    PowStats* stats = nullptr);

// Integer lift of the coefficients, taken in [0, M).
IntPoly lift(const RingElement& a);

// N(lift(a)) = Res(g, lift(a)).
BigInt norm_int(const RingElement& a, const NumberField& field);
BigInt norm_int(const IntPoly& a, const NumberField& field);

// C = d^d * L(g)^(2d-2) with L(g) the sum of absolute coefficient values.
struct MahlerBound {
  BigInt value;
};

MahlerBound mahler_bound(const NumberField& field);

}  // namespace rabin_nf
