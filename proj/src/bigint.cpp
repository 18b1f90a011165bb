#include "rabin_nf/bigint.hpp"

#include <cctype>

#include "rabin_nf/error.hpp"

namespace rabin_nf {

BigInt parse_bigint(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string trimmed(text.substr(begin, end - begin));
  if (trimmed.empty()) fail(ErrorCode::kParseError, "empty integer literal");
  std::size_t digits_from = (trimmed[0] == '-' || trimmed[0] == '+') ? 1 : 0;
  if (digits_from == trimmed.size()) fail(ErrorCode::kParseError, "sign without digits");
  for (std::size_t i = digits_from; i < trimmed.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
      fail(ErrorCode::kParseError, "not a decimal integer: '" + trimmed + "'");
    }
  }
  if (trimmed[0] == '+') trimmed.erase(0, 1);
  BigInt out;
  if (out.set_str(trimmed, 10) != 0) {
    fail(ErrorCode::kParseError, "not a decimal integer: '" + trimmed + "'");
  }
  return out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt mod_symmetric(const BigInt& a, const BigInt& m) {
  BigInt r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  ExtendedGcd out;
  mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
  if (v < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), v.get_mpz_t());
  return true;
}

BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool exact_root(const BigInt& v, unsigned long k, BigInt* root) {
  BigInt r;
  bool exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) != 0;
  if (exact && root != nullptr) *root = r;
  return exact;
}

unsigned long valuation(const BigInt& v, const BigInt& p) {
  BigInt rest = v;
  unsigned long n = 0;
  while (rest != 0 && mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    rest /= p;
    ++n;
  }
  return n;
}

std::string join_decimal(const std::vector<BigInt>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += to_decimal(values[i]);
  }
  return out;
}

std::vector<BigInt> split_decimal(std::string_view text, char sep) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(parse_bigint(text.substr(start, pos == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPolynomial: return "invalid-polynomial";
    case ErrorCode::kContextMismatch: return "context-mismatch";
    case ErrorCode::kZeroElement: return "zero-element";
    case ErrorCode::kNotInvertible: return "not-invertible";
    case ErrorCode::kImprobableFailure: return "improbable-failure";
    case ErrorCode::kNotASquare: return "not-a-square";
    case ErrorCode::kMethodNotApplicable: return "method-not-applicable";
    case ErrorCode::kContractViolation: return "contract-violation";
    case ErrorCode::kNotCoprime: return "not-coprime";
    case ErrorCode::kNoInertPrimes: return "no-inert-primes";
    case ErrorCode::kGenerationFailure: return "generation-failure";
    case ErrorCode::kCapacityExceeded: return "capacity-exceeded";
    case ErrorCode::kAccidentalFactor: return "accidental-factor";
    case ErrorCode::kMalformedCiphertext: return "malformed-ciphertext";
    case ErrorCode::kAttackInapplicable: return "attack-inapplicable";
    case ErrorCode::kPreconditionViolated: return "precondition-violated";
    case ErrorCode::kOutOfDeskScale: return "out-of-desk-scale";
    case ErrorCode::kMalformedIdeal: return "malformed-ideal";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kUnsupportedVersion: return "unsupported-version";
    case ErrorCode::kUnknownProfile: return "unknown-profile";
  }
  return "unknown";
}

}  // namespace rabin_nf
