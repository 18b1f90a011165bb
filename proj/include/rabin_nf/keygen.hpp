#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rabin_nf/bigint.hpp"
#include "rabin_nf/nf_arith.hpp"
#include "rabin_nf/random.hpp"

namespace rabin_nf {

enum class ProfileKind {
  kClassical,
  kQuadratic,
  kCyclotomicPower,
  kCyclotomicCubicSubfield,
  kGeneric,
};

const char* profile_kind_name(ProfileKind kind);
ProfileKind parse_profile_kind(std::string_view text);

// Input to congruence_profile. `parameter` is delta for quadratic fields and
// the conductor m for the cyclotomic kinds; generic fields carry their
// polynomial instead.
struct ProfileSpec {
  std::string name;
  ProfileKind kind = ProfileKind::kClassical;
  BigInt parameter = 0;
  IntPoly polynomial;  // generic only
};

// A field together with congruence classes mod D that force primes to be
// inert and = 3 mod 4. Generic profiles have D = 4, residues {3} and rely on
// an explicit inertness test per candidate.
struct FieldProfile {
  std::string name;
  ProfileKind kind = ProfileKind::kClassical;
  BigInt parameter = 0;
  NumberField field;
  BigInt modulus_d;
  std::vector<BigInt> residues;

  bool needs_inertness_filter() const { return kind == ProfileKind::kGeneric; }
};

FieldProfile congruence_profile(const ProfileSpec& spec);

// Minimal polynomial of the Gaussian period generating the unique cubic
// subfield of Q(zeta_m), m an odd prime power with 3 | phi(m).
IntPoly cubic_period_polynomial(unsigned long m);

// Phi_m for m an odd prime power or 4.
IntPoly cyclotomic_polynomial(unsigned long m);

// g irreducible mod p (Rabin's test); p odd and not dividing disc(g).
bool is_inert(const BigInt& p, const NumberField& field);

struct StrongPrime {
  BigInt p;
  BigInt ell;  // prime, ell = 2kD + 1, divides p - 1
  std::size_t candidates = 0;
};

inline constexpr std::size_t kStrongPrimeCandidateCap = 1000000;
inline constexpr unsigned long kMinSecurityParameter = 8;

// k > 2^lambda random until ell = 2kD + 1 is prime, then the first h >= 0
// with p = (hD + c - 1) ell + 1 prime. Gives p = c mod D.
StrongPrime gen_strong_prime(const BigInt& d, const BigInt& c, unsigned long lambda,
                             RandomSource& rng);

// Strong prime of exactly `bits` bits: ell = 2kD + 1 of bits - 16 bits,
// then random h until p = (hD + c - 1) ell + 1 is a prime of the right
// size. Needs bits >= 40.
StrongPrime gen_strong_prime_bits(const BigInt& d, const BigInt& c, unsigned long bits,
                                  RandomSource& rng);
inline constexpr unsigned long kMinExactPrimeBits = 40;

struct PublicKey {
  std::string profile;
  BigInt n;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  std::string profile;
  BigInt n;
  BigInt p;
  BigInt q;
  std::optional<RingElement> nonsquare_p;
  std::optional<RingElement> nonsquare_q;

  PublicKey public_key() const { return PublicKey{profile, n}; }
  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeygenStats {
  std::size_t prime_candidates = 0;
  std::size_t inert_rejections = 0;  // generic profiles only
  std::size_t equal_prime_retries = 0;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
  KeygenStats stats;
};

KeyPair keygen(const FieldProfile& profile, unsigned long lambda, RandomSource& rng);
// Same, with p and q of exactly `prime_bits` bits each.
KeyPair keygen_with_prime_bits(const FieldProfile& profile, unsigned long prime_bits,
                               RandomSource& rng);

// The shipped catalog; see data/profiles.txt.
const std::vector<FieldProfile>& builtin_profiles();
const FieldProfile& find_profile(std::string_view name);  // kUnknownProfile
std::string_view builtin_catalog_text();

// Parses the catalog format and checks every entry against
// congruence_profile; mismatches raise kParseError.
std::vector<FieldProfile> parse_catalog(std::string_view text);
std::string format_catalog_entry(const FieldProfile& profile);

}  // namespace rabin_nf
