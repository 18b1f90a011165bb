#include "rabin_nf/crt.hpp"

#include "rabin_nf/error.hpp"

namespace rabin_nf {

BezoutPair bezout(const BigInt& p, const BigInt& q) {
  ExtendedGcd eg = extended_gcd(p, q);
  if (eg.g != 1) fail(ErrorCode::kNotCoprime, "Bezout coefficients need coprime inputs");
  return BezoutPair{eg.x, eg.y};
}

CrtBasis::CrtBasis(const BigInt& p, const BigInt& q) : p_(p), q_(q), n_(p * q) {
  BezoutPair ab = bezout(p, q);
  e_p_ = mod_floor(ab.b * q, n_);
  e_q_ = mod_floor(ab.a * p, n_);
}

RingElement CrtBasis::combine(const RingElement& x, const RingElement& y,
                              const NumberField& field) const {
  if (x.modulus != p_ || y.modulus != q_) {
    fail(ErrorCode::kContextMismatch, "CRT inputs must be reduced modulo p and q");
  }
  const auto d = static_cast<std::size_t>(field.degree());
  if (x.coeffs.size() != d || y.coeffs.size() != d) {
    fail(ErrorCode::kContextMismatch, "ring element degree does not match the field");
  }
  RingElement out{std::vector<BigInt>(d), n_};
  for (std::size_t i = 0; i < d; ++i) {
    BigInt v = x.coeffs[i] * e_p_ + y.coeffs[i] * e_q_;
    out.coeffs[i] = mod_floor(v, n_);
  }
  return out;
}

RingElement crt_combine(const RingElement& x, const RingElement& y, const BigInt& p,
                        const BigInt& q, const NumberField& field) {
  return CrtBasis(p, q).combine(x, y, field);
}

}  // namespace rabin_nf
