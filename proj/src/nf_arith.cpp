#include "rabin_nf/nf_arith.hpp"

#include <algorithm>

#include "rabin_nf/error.hpp"

namespace rabin_nf {

namespace {

constexpr unsigned long kWitnessSearchLimit = 10000;

void check_same_ring(const RingElement& a, const RingElement& b, const NumberField& field) {
  if (a.modulus != b.modulus) fail(ErrorCode::kContextMismatch, "ring elements have different moduli");
  const auto d = static_cast<std::size_t>(field.degree());
  if (a.coeffs.size() != d || b.coeffs.size() != d) {
    fail(ErrorCode::kContextMismatch, "ring element degree does not match the field");
  }
}

void check_in_field(const RingElement& a, const NumberField& field) {
  if (a.coeffs.size() != static_cast<std::size_t>(field.degree())) {
    fail(ErrorCode::kContextMismatch, "ring element degree does not match the field");
  }
}

// Schoolbook product followed by folding the high powers through the power
// table, then one reduction per output coefficient. `prod` is scratch space
// of length 2d-1.
void mul_into(std::vector<BigInt>& out, const std::vector<BigInt>& a,
              const std::vector<BigInt>& b, const BigInt& modulus, const NumberField& field,
              std::vector<BigInt>& prod) {
  const int d = field.degree();
  const auto& table = field.power_table();
  for (auto& c : prod) c = 0;
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - d];
    for (int j = 0; j < d; ++j) {
      if (row[j] != 0) mpz_addmul(prod[j].get_mpz_t(), prod[k].get_mpz_t(), row[j].get_mpz_t());
    }
  }
  for (int j = 0; j < d; ++j) mpz_mod(out[j].get_mpz_t(), prod[j].get_mpz_t(), modulus.get_mpz_t());
}

std::optional<unsigned long> find_irreducibility_witness(const IntPoly& g) {
  if (degree(g) == 1) return 2;
  mpz_class w = 2;
  while (w <= kWitnessSearchLimit) {
    if (fp::is_irreducible(g, w)) return w.get_ui();
    mpz_nextprime(w.get_mpz_t(), w.get_mpz_t());
  }
  return std::nullopt;
}

}  // namespace

bool RingElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

NumberField NumberField::make(IntPoly g) {
  trim(g);
  const int d = rabin_nf::degree(g);
  if (d < 1) fail(ErrorCode::kInvalidPolynomial, "defining polynomial must have degree >= 1");
  if (g[d] != 1) fail(ErrorCode::kInvalidPolynomial, "defining polynomial must be monic");

  NumberField field;
  field.g_ = g;
  field.degree_ = d;

  // Row k holds x^(d+k) mod g; start from x^d = -(g_0 + ... + g_(d-1) x^(d-1)).
  std::vector<BigInt> row(d);
  for (int j = 0; j < d; ++j) row[j] = -g[j];
  for (int k = 0; k + 1 < d; ++k) {
    field.power_table_.push_back(row);
    // multiply by x
    BigInt top = row[d - 1];
    for (int j = d - 1; j > 0; --j) row[j] = row[j - 1];
    row[0] = 0;
    for (int j = 0; j < d; ++j) row[j] -= top * g[j];
  }
  field.witness_ = find_irreducibility_witness(g);
  return field;
}

RingElement NumberField::element(std::vector<BigInt> coeffs, const BigInt& modulus) const {
  require(modulus >= 2, ErrorCode::kContractViolation, "modulus must be at least 2");
  if (coeffs.size() != static_cast<std::size_t>(degree_)) {
    fail(ErrorCode::kContextMismatch, "coefficient vector length must equal the field degree");
  }
  for (auto& c : coeffs) c = mod_floor(c, modulus);
  return RingElement{std::move(coeffs), modulus};
}

RingElement NumberField::zero(const BigInt& modulus) const {
  return element(std::vector<BigInt>(degree_, 0), modulus);
}

RingElement NumberField::one(const BigInt& modulus) const { return constant(1, modulus); }

RingElement NumberField::constant(const BigInt& value, const BigInt& modulus) const {
  std::vector<BigInt> c(degree_, 0);
  c[0] = value;
  return element(std::move(c), modulus);
}

RingElement NumberField::generator(const BigInt& modulus) const {
  if (degree_ == 1) return constant(-g_[0], modulus);
  std::vector<BigInt> c(degree_, 0);
  c[1] = 1;
  return element(std::move(c), modulus);
}

RingElement add(const RingElement& a, const RingElement& b, const NumberField& field) {
  check_same_ring(a, b, field);
  RingElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] += b.coeffs[i];
    if (out.coeffs[i] >= out.modulus) out.coeffs[i] -= out.modulus;
  }
  return out;
}

RingElement sub(const RingElement& a, const RingElement& b, const NumberField& field) {
  check_same_ring(a, b, field);
  RingElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] -= b.coeffs[i];
    if (out.coeffs[i] < 0) out.coeffs[i] += out.modulus;
  }
  return out;
}

RingElement neg(const RingElement& a, const NumberField& field) {
  check_in_field(a, field);
  RingElement out = a;
  for (auto& c : out.coeffs) {
    if (c != 0) c = out.modulus - c;
  }
  return out;
}

RingElement mul(const RingElement& a, const RingElement& b, const NumberField& field) {
  check_same_ring(a, b, field);
  RingElement out{std::vector<BigInt>(a.coeffs.size()), a.modulus};
  std::vector<BigInt> prod(2 * field.degree() - 1);
  mul_into(out.coeffs, a.coeffs, b.coeffs, a.modulus, field, prod);
  return out;
}

RingElement scale(const RingElement& a, const BigInt& k, const NumberField& field) {
  check_in_field(a, field);
  RingElement out = a;
  for (auto& c : out.coeffs) c = mod_floor(c * k, out.modulus);
  return out;
}

RingElement ring_arith(RingOp op, const RingElement& a, const RingElement& b,
                       const NumberField& field) {
  switch (op) {
    case RingOp::kAdd: return add(a, b, field);
    case RingOp::kSub: return sub(a, b, field);
    case RingOp::kNeg:
      check_same_ring(a, b, field);
      return neg(a, field);
    case RingOp::kMul: return mul(a, b, field);
  }
  fail(ErrorCode::kContractViolation, "unknown ring operation");
}

RingElement reduce_to(const RingElement& a, const BigInt& modulus, const NumberField& field) {
  check_in_field(a, field);
  return field.element(a.coeffs, modulus);
}

RingElement pow_mod(const RingElement& a, const BigInt& e, const NumberField& field,
                    PowStats* stats) {
  check_in_field(a, field);
  require(e >= 0, ErrorCode::kContractViolation, "exponent must be non-negative");
  if (e == 0) return field.one(a.modulus);
  if (field.degree() == 1 && stats == nullptr) {
    // Plain modular exponentiation.
    RingElement out = a;
    mpz_powm(out.coeffs[0].get_mpz_t(), a.coeffs[0].get_mpz_t(), e.get_mpz_t(),
             a.modulus.get_mpz_t());
    return out;
  }

  // Left-to-right sliding window over the odd powers a, a^3, ..., a^(2^w - 1).
  const std::size_t bits = bit_length(e);
  const unsigned w = bits <= 24 ? 1 : bits <= 256 ? 3 : bits <= 768 ? 4 : 5;
  std::vector<BigInt> prod(2 * field.degree() - 1);
  std::vector<BigInt> tmp(field.degree());
  std::size_t count = 0;

  std::vector<std::vector<BigInt>> odd{a.coeffs};
  if (w > 1) {
    std::vector<BigInt> sq(field.degree());
    mul_into(sq, a.coeffs, a.coeffs, a.modulus, field, prod);
    ++count;
    for (std::size_t k = 1; k < (std::size_t{1} << (w - 1)); ++k) {
      mul_into(tmp, odd.back(), sq, a.modulus, field, prod);
      odd.push_back(tmp);
      ++count;
    }
  }

  const mpz_srcptr ep = e.get_mpz_t();
  std::vector<BigInt> acc;
  long i = static_cast<long>(bits) - 1;
  while (i >= 0) {
    if (mpz_tstbit(ep, static_cast<mp_bitcnt_t>(i)) == 0) {
      mul_into(tmp, acc, acc, a.modulus, field, prod);
      acc.swap(tmp);
      ++count;
      --i;
      continue;
    }
    // Longest window e[i..j] of at most w bits ending in a set bit.
    long j = std::max(0L, i - static_cast<long>(w) + 1);
    while (mpz_tstbit(ep, static_cast<mp_bitcnt_t>(j)) == 0) ++j;
    unsigned long value = 0;
    for (long k = i; k >= j; --k) value = (value << 1) | mpz_tstbit(ep, static_cast<mp_bitcnt_t>(k));
    if (acc.empty()) {
      acc = odd[value >> 1];
    } else {
      for (long k = i; k >= j; --k) {
        mul_into(tmp, acc, acc, a.modulus, field, prod);
        acc.swap(tmp);
        ++count;
      }
      mul_into(tmp, acc, odd[value >> 1], a.modulus, field, prod);
      acc.swap(tmp);
      ++count;
    }
    i = j - 1;
  }
  if (stats != nullptr) stats->multiplications += count;
  return RingElement{std::move(acc), a.modulus};
}

IntPoly lift(const RingElement& a) {
  IntPoly out(a.coeffs);
  trim(out);
  return out;
}

BigInt norm_int(const IntPoly& a, const NumberField& field) {
  return resultant(field.poly(), a);
}

BigInt norm_int(const RingElement& a, const NumberField& field) {
  check_in_field(a, field);
  return norm_int(lift(a), field);
}

MahlerBound mahler_bound(const NumberField& field) {
  const auto d = static_cast<unsigned long>(field.degree());
  BigInt length = 0;
  for (const auto& c : field.poly()) length += abs(c);
  return MahlerBound{pow_int(BigInt(d), d) * pow_int(length, 2 * d - 2)};
}

}  // namespace rabin_nf
