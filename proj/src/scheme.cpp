#include "rabin_nf/scheme.hpp"

#include "rabin_nf/crt.hpp"
#include "rabin_nf/error.hpp"
#include "rabin_nf/sqrt_engine.hpp"

namespace rabin_nf {

namespace {

BigInt from_bytes(std::span<const std::uint8_t> bytes) {
  BigInt out = 0;
  if (!bytes.empty()) mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
  return out;
}

// Exactly `width` big-endian bytes; v must fit.
void append_bytes(std::vector<std::uint8_t>& out, const BigInt& v, std::size_t width) {
  std::vector<std::uint8_t> buf(width, 0);
  std::size_t written = 0;
  if (v != 0) {
    std::size_t needed = (bit_length(v) + 7) / 8;
    if (needed > width) fail(ErrorCode::kMalformedCiphertext, "coefficient too large for its chunk");
    mpz_export(buf.data() + (width - needed), &written, 1, 1, 0, 0, v.get_mpz_t());
  }
  out.insert(out.end(), buf.begin(), buf.end());
}

PrimeContext context_for(const BigInt& p, const std::optional<RingElement>& nonsquare,
                         const NumberField& field) {
  PrimeContext ctx = PrimeContext::inert(p, field);
  if (nonsquare) ctx.set_nonsquare(*nonsquare);
  return ctx;
}

struct PrimeRoots {
  RingElement root_p;
  RingElement root_q;
};

PrimeRoots roots_at_primes(const PrivateKey& sk, const RingElement& c, const NumberField& field) {
  if (c.modulus != sk.n) fail(ErrorCode::kContextMismatch, "ciphertext modulus differs from the key");
  PrimeContext ctx_p = context_for(sk.p, sk.nonsquare_p, field);
  PrimeContext ctx_q = context_for(sk.q, sk.nonsquare_q, field);
  if ((sqrt_method(ctx_p) == SqrtMethod::kTonelliShanks && !ctx_p.nonsquare()) ||
      (sqrt_method(ctx_q) == SqrtMethod::kTonelliShanks && !ctx_q.nonsquare())) {
    fail(ErrorCode::kContractViolation, "private key lacks the cached non-squares");
  }
  try {
    return PrimeRoots{sqrt_mod_prime(reduce_to(c, sk.p, field), ctx_p, field),
                      sqrt_mod_prime(reduce_to(c, sk.q, field), ctx_q, field)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotASquare) {
      fail(ErrorCode::kMalformedCiphertext, "ciphertext is not a square modulo the key primes");
    }
    throw;
  }
}

}  // namespace

std::size_t bytes_per_coefficient(const BigInt& n) { return (bit_length(n) - 1) / 8; }

std::size_t message_capacity(const BigInt& n, int degree) {
  std::size_t b = bytes_per_coefficient(n);
  std::size_t total = static_cast<std::size_t>(degree) * b;
  return total == 0 ? 0 : total - 1;
}

Plaintext encode(std::span<const std::uint8_t> data, const BigInt& n, const NumberField& field) {
  const int d = field.degree();
  const std::size_t b = bytes_per_coefficient(n);
  require(d <= 255, ErrorCode::kContractViolation, "degree too large for the count byte");
  require(b >= 1, ErrorCode::kCapacityExceeded, "modulus too small to carry a message");
  if (data.size() > message_capacity(n, d)) {
    fail(ErrorCode::kCapacityExceeded, "message of " + std::to_string(data.size()) +
                                           " bytes exceeds capacity " +
                                           std::to_string(message_capacity(n, d)));
  }
  const std::size_t full = data.size() / b;
  const std::size_t head = data.size() % b;
  std::vector<BigInt> coeffs(d, 0);
  std::vector<std::uint8_t> first{static_cast<std::uint8_t>(full + 1)};
  first.insert(first.end(), data.begin(), data.begin() + static_cast<std::ptrdiff_t>(head));
  coeffs[0] = from_bytes(first);
  for (std::size_t i = 0; i < full; ++i) {
    coeffs[i + 1] = from_bytes(data.subspan(head + i * b, b));
  }
  return Plaintext{field.element(std::move(coeffs), n)};
}

std::vector<std::uint8_t> decode(const Plaintext& m, const NumberField& field) {
  const auto& coeffs = m.m.coeffs;
  require(coeffs.size() == static_cast<std::size_t>(field.degree()), ErrorCode::kContextMismatch,
          "plaintext degree does not match the field");
  const std::size_t b = bytes_per_coefficient(m.m.modulus);
  const BigInt& a0 = coeffs[0];
  if (a0 == 0 || bit_length(a0) > 8 * b) {
    fail(ErrorCode::kMalformedCiphertext, "plaintext does not carry a valid encoding prefix");
  }
  const std::size_t width = (bit_length(a0) + 7) / 8;
  std::vector<std::uint8_t> first;
  append_bytes(first, a0, width);
  const std::size_t used = first[0];
  if (used < 1 || used > coeffs.size()) {
    fail(ErrorCode::kMalformedCiphertext, "plaintext coefficient count out of range");
  }
  std::vector<std::uint8_t> out(first.begin() + 1, first.end());
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (i < used) {
      append_bytes(out, coeffs[i], b);
    } else if (coeffs[i] != 0) {
      fail(ErrorCode::kMalformedCiphertext, "non-zero coefficient beyond the encoded length");
    }
  }
  return out;
}

std::size_t leading_index(const RingElement& m) {
  for (std::size_t i = 0; i < m.coeffs.size(); ++i) {
    if (m.coeffs[i] != 0) return i;
  }
  fail(ErrorCode::kContractViolation, "the zero element has no leading coefficient");
}

Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, const NumberField& field) {
  if (m.m.modulus != pk.n) fail(ErrorCode::kContextMismatch, "plaintext modulus differs from N");
  const BigInt& alpha = m.m.coeffs[leading_index(m.m)];
  BigInt g = gcd(alpha, pk.n);
  if (g != 1) {
    throw AccidentalFactorError(g, "leading coefficient shares the factor " + to_decimal(g) +
                                       " with N");
  }
  Ciphertext ct;
  ct.c = mul(m.m, m.m, field);
  ct.b0 = mpz_odd_p(alpha.get_mpz_t()) != 0 ? 1 : 0;
  ct.b1 = (1 - jacobi(alpha, pk.n)) / 2;
  return ct;
}

std::vector<RingElement> square_roots(const PrivateKey& sk, const RingElement& c,
                                      const NumberField& field) {
  PrimeRoots roots = roots_at_primes(sk, c, field);
  CrtBasis basis(sk.p, sk.q);
  RingElement neg_p = neg(roots.root_p, field);
  RingElement neg_q = neg(roots.root_q, field);
  return {basis.combine(roots.root_p, roots.root_q, field),
          basis.combine(roots.root_p, neg_q, field),
          basis.combine(neg_p, roots.root_q, field),
          basis.combine(neg_p, neg_q, field)};
}

Plaintext decrypt(const PrivateKey& sk, const Ciphertext& ct, const PublicKey& pk,
                  const NumberField& field) {
  if (pk.n != sk.n) fail(ErrorCode::kContextMismatch, "public and private key do not match");
  if (mpz_fdiv_ui(sk.p.get_mpz_t(), 4) != 3 || mpz_fdiv_ui(sk.q.get_mpz_t(), 4) != 3) {
    fail(ErrorCode::kContractViolation, "root selection needs p = q = 3 mod 4");
  }
  if ((ct.b0 != 0 && ct.b0 != 1) || (ct.b1 != 0 && ct.b1 != 1)) {
    fail(ErrorCode::kMalformedCiphertext, "disambiguation bits must be 0 or 1");
  }
  PrimeRoots roots = roots_at_primes(sk, ct.c, field);

  // alpha sits at the first index where the roots are not zero at both
  // primes; zero at exactly one prime would reveal the factorisation.
  std::size_t index = 0;
  const std::size_t d = roots.root_p.coeffs.size();
  while (index < d && roots.root_p.coeffs[index] == 0 && roots.root_q.coeffs[index] == 0) ++index;
  if (index == d) fail(ErrorCode::kMalformedCiphertext, "ciphertext is zero");
  if (roots.root_p.coeffs[index] == 0) {
    throw AccidentalFactorError(sk.p, "leading coefficient vanishes modulo p only");
  }
  if (roots.root_q.coeffs[index] == 0) {
    throw AccidentalFactorError(sk.q, "leading coefficient vanishes modulo q only");
  }

  // (-1/p) = -1 for p = 3 mod 4, so flipping a root flips its symbol.
  const int symbol_p = jacobi(roots.root_p.coeffs[index], sk.p);
  const int symbol_q = jacobi(roots.root_q.coeffs[index], sk.q);
  const int wanted = 1 - 2 * ct.b1;
  RingElement root_q = symbol_p * symbol_q == wanted ? roots.root_q : neg(roots.root_q, field);
  RingElement m1 = CrtBasis(sk.p, sk.q).combine(roots.root_p, root_q, field);

  const int parity = mpz_odd_p(m1.coeffs[index].get_mpz_t()) != 0 ? 1 : 0;
  if (parity != ct.b0) m1 = neg(m1, field);
  return Plaintext{std::move(m1)};
}

}  // namespace rabin_nf
