#include "rabin_nf/sqrt_engine.hpp"

#include "rabin_nf/error.hpp"

namespace rabin_nf {

namespace {

constexpr int kNonsquareTrialCap = 128;

void check_prime_ring(const RingElement& x, const PrimeContext& ctx) {
  if (x.modulus != ctx.p()) fail(ErrorCode::kContextMismatch, "element is not reduced modulo p");
}

bool is_one(const RingElement& x) {
  if (x.coeffs.empty() || x.coeffs[0] != 1) return false;
  for (std::size_t i = 1; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] != 0) return false;
  }
  return true;
}

}  // namespace

TwoPowerSplit split_two_power(const BigInt& n) {
  require(n >= 2 && mpz_even_p(n.get_mpz_t()) != 0, ErrorCode::kContractViolation,
          "split_two_power needs an even n >= 2");
  TwoPowerSplit out;
  out.s = mpz_scan1(n.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(out.t.get_mpz_t(), n.get_mpz_t(), out.s);
  return out;
}

PrimeContext::PrimeContext(BigInt p, unsigned long residue_degree)
    : p_(std::move(p)), f_(residue_degree) {
  require(p_ >= 3 && mpz_odd_p(p_.get_mpz_t()) != 0, ErrorCode::kContractViolation,
          "prime context needs an odd prime");
  require(f_ >= 1, ErrorCode::kContractViolation, "residue degree must be positive");
  cardinality_ = pow_int(p_, f_);
}

PrimeContext PrimeContext::inert(const BigInt& p, const NumberField& field) {
  return PrimeContext(p, static_cast<unsigned long>(field.degree()));
}

bool is_square_mod_p(const RingElement& x, const PrimeContext& ctx, const NumberField& field) {
  check_prime_ring(x, ctx);
  if (x.is_zero()) fail(ErrorCode::kZeroElement, "Euler test is undefined for zero");
  BigInt half = (ctx.cardinality() - 1) / 2;
  return is_one(pow_mod(x, half, field));
}

RingElement find_nonsquare(const PrimeContext& ctx, const NumberField& field, RandomSource& rng) {
  for (int trial = 0; trial < kNonsquareTrialCap; ++trial) {
    std::vector<BigInt> coeffs(field.degree());
    for (auto& c : coeffs) c = rng.below(ctx.p());
    RingElement x = field.element(std::move(coeffs), ctx.p());
    if (x.is_zero()) continue;
    if (!is_square_mod_p(x, ctx, field)) return x;
  }
  fail(ErrorCode::kImprobableFailure,
       "no non-square found in 128 trials (broken random source or composite p?)");
}

RingElement invert_mod_p(const RingElement& c, const PrimeContext& ctx, const NumberField& field) {
  check_prime_ring(c, ctx);
  if (c.is_zero()) fail(ErrorCode::kNotInvertible, "zero has no inverse");
  const BigInt& p = ctx.p();
  BigInt exponent = (ctx.cardinality() - 1) / (p - 1) - 1;
  RingElement conjugates = pow_mod(c, exponent, field);
  RingElement n0 = mul(c, conjugates, field);
  for (std::size_t i = 1; i < n0.coeffs.size(); ++i) {
    if (n0.coeffs[i] != 0) {
      fail(ErrorCode::kContractViolation,
           "conjugate product is not rational; residue degree does not match the prime");
    }
  }
  ExtendedGcd eg = extended_gcd(n0.coeffs[0], p);
  if (eg.g != 1) fail(ErrorCode::kNotInvertible, "norm is not a unit modulo p");
  return scale(conjugates, eg.x, field);
}

RingElement tonelli_shanks(const RingElement& c, const PrimeContext& ctx, const NumberField& field,
                           TonelliShanksTrace* trace) {
  check_prime_ring(c, ctx);
  if (!ctx.nonsquare()) {
    fail(ErrorCode::kContractViolation, "Tonelli-Shanks needs a non-square in the prime context");
  }
  if (c.is_zero()) fail(ErrorCode::kZeroElement, "Tonelli-Shanks expects a non-zero square");
  const RingElement& m = *ctx.nonsquare();

  TwoPowerSplit split = split_two_power(ctx.cardinality() - 1);
  // One exponentiation serves both c^((t+1)/2) and d^t = (c^t)^-1.
  RingElement base = pow_mod(c, (split.t - 1) / 2, field);  // c^((t-1)/2)
  RingElement c_half = mul(base, c, field);                 // c^((t+1)/2)
  RingElement target = invert_mod_p(mul(c_half, base, field), ctx, field);  // d^t
  RingElement m_t = pow_mod(m, split.t, field);             // m^t
  RingElement step = mul(m_t, m_t, field);                  // m^(2t)

  // Sequential search for i in {1, ..., 2^(s-1)} with m^(2ti) = d^t,
  // carrying m^(ti) along.
  BigInt limit = pow_int(2, split.s - 1);
  RingElement power = step;
  RingElement half_power = m_t;
  for (BigInt i = 1; i <= limit; ++i) {
    if (power == target) {
      if (trace != nullptr) {
        *trace = TonelliShanksTrace{split.s, split.t, i, invert_mod_p(c, ctx, field)};
      }
      return mul(c_half, half_power, field);
    }
    power = mul(power, step, field);
    half_power = mul(half_power, m_t, field);
  }
  fail(ErrorCode::kNotASquare, "element is not a square modulo p");
}

RingElement tonelli_shanks(const RingElement& c, PrimeContext& ctx, const NumberField& field,
                           RandomSource* rng, TonelliShanksTrace* trace) {
  if (!ctx.nonsquare()) {
    if (rng == nullptr) {
      fail(ErrorCode::kContractViolation, "no cached non-square and no random source");
    }
    ctx.set_nonsquare(find_nonsquare(ctx, field, *rng));
  }
  return tonelli_shanks(c, static_cast<const PrimeContext&>(ctx), field, trace);
}

RingElement fast_sqrt(const RingElement& c, const PrimeContext& ctx, const NumberField& field) {
  check_prime_ring(c, ctx);
  if (mod_floor(ctx.cardinality(), 4) != 3) {
    fail(ErrorCode::kMethodNotApplicable, "fast square root needs p^f = 3 mod 4");
  }
  return pow_mod(c, (ctx.cardinality() + 1) / 4, field);
}

SqrtMethod sqrt_method(const PrimeContext& ctx) {
  return mod_floor(ctx.cardinality(), 4) == 3 ? SqrtMethod::kFast : SqrtMethod::kTonelliShanks;
}

RingElement sqrt_mod_prime(const RingElement& c, const PrimeContext& ctx,
                           const NumberField& field) {
  check_prime_ring(c, ctx);
  if (c.is_zero()) return c;
  if (sqrt_method(ctx) == SqrtMethod::kFast) {
    RingElement root = fast_sqrt(c, ctx, field);
    if (mul(root, root, field) != c) fail(ErrorCode::kNotASquare, "element is not a square modulo p");
    return root;
  }
  return tonelli_shanks(c, ctx, field);
}

RingElement sqrt_mod_prime(const RingElement& c, PrimeContext& ctx, const NumberField& field,
                           RandomSource* rng) {
  check_prime_ring(c, ctx);
  if (!c.is_zero() && sqrt_method(ctx) == SqrtMethod::kTonelliShanks && !ctx.nonsquare()) {
    if (rng == nullptr) {
      fail(ErrorCode::kContractViolation, "no cached non-square and no random source");
    }
    ctx.set_nonsquare(find_nonsquare(ctx, field, *rng));
  }
  return sqrt_mod_prime(c, static_cast<const PrimeContext&>(ctx), field);
}

}  // namespace rabin_nf
