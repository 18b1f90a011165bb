#include "rabin_nf/keygen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "rabin_nf/error.hpp"
#include "rabin_nf/jacobi.hpp"
#include "rabin_nf/primality.hpp"
#include "rabin_nf/sqrt_engine.hpp"

namespace rabin_nf {

namespace {

bool is_small_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) {
  while (b != 0) {
    unsigned long r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// m = l^k for an odd prime l; returns l, or 0.
unsigned long odd_prime_base(unsigned long m) {
  if (m < 3 || m % 2 == 0) return 0;
  unsigned long l = 0;
  for (unsigned long k = 3; k * k <= m; k += 2) {
    if (m % k == 0) {
      l = k;
      break;
    }
  }
  if (l == 0) return m;
  while (m % l == 0) m /= l;
  return m == 1 ? l : 0;
}

unsigned long multiplicative_order(unsigned long r, unsigned long m) {
  unsigned long x = r % m;
  unsigned long order = 1;
  while (x != 1) {
    x = (x * r) % m;
    ++order;
  }
  return order;
}

unsigned long phi_prime_power(unsigned long m, unsigned long l) { return m / l * (l - 1); }

// Classes r mod D, r = 3 mod 4, gcd(r, D) = 1, accepted by `keep`.
template <typename Pred>
std::vector<BigInt> classes_mod(unsigned long d, Pred keep) {
  std::vector<BigInt> out;
  for (unsigned long r = 3; r < d; r += 4) {
    if (gcd_ul(r, d) == 1 && keep(r)) out.emplace_back(r);
  }
  return out;
}

void check_squarefree(long delta) {
  unsigned long v = static_cast<unsigned long>(delta < 0 ? -delta : delta);
  for (unsigned long k = 2; k * k <= v; ++k) {
    if (v % (k * k) == 0) fail(ErrorCode::kContractViolation, "delta must be square-free");
  }
}

FieldProfile quadratic_profile(const ProfileSpec& spec) {
  require(spec.parameter.fits_slong_p(), ErrorCode::kOutOfDeskScale, "delta too large");
  const long delta = spec.parameter.get_si();
  if (delta == 0 || delta == 1) fail(ErrorCode::kContractViolation, "delta must not be 0 or 1");
  check_squarefree(delta);
  long delta_mod_4 = ((delta % 4) + 4) % 4;
  if (delta_mod_4 != 2 && delta_mod_4 != 3) {
    fail(ErrorCode::kContractViolation,
         "quadratic profiles need delta = 2, 3 mod 4 so that Z[sqrt(delta)] is maximal");
  }
  const unsigned long d = 4 * static_cast<unsigned long>(delta < 0 ? -delta : delta);

  // The quadratic character of delta is constant on classes mod 4|delta|;
  // read it off two sample primes per class and insist they agree.
  auto inert_class = [&](unsigned long r) {
    int seen = 0;
    int symbol = 0;
    for (unsigned long p = r; seen < 2; p += d) {
      if (!is_small_prime(p)) continue;
      int s = jacobi(BigInt(delta), BigInt(p));
      if (seen == 1 && s != symbol) {
        fail(ErrorCode::kContractViolation, "quadratic character not constant on a class");
      }
      symbol = s;
      ++seen;
    }
    return symbol == -1;
  };

  IntPoly g{BigInt(-delta), 0, 1};
  return FieldProfile{spec.name, spec.kind, spec.parameter, NumberField::make(g), BigInt(d),
                      classes_mod(d, inert_class)};
}

unsigned long conductor(const ProfileSpec& spec) {
  require(spec.parameter.fits_ulong_p() && spec.parameter <= 100000, ErrorCode::kOutOfDeskScale,
          "conductor out of range");
  return spec.parameter.get_ui();
}

FieldProfile cyclotomic_profile(const ProfileSpec& spec) {
  const unsigned long m = conductor(spec);
  unsigned long phi = 0;
  if (m == 4) {
    phi = 2;
  } else {
    unsigned long l = odd_prime_base(m);
    if (l == 0) {
      fail(ErrorCode::kNoInertPrimes,
           "Q(zeta_m) has inert primes only for m an odd prime power or m = 4");
    }
    phi = phi_prime_power(m, l);
  }
  const unsigned long d = m == 4 ? 4 : 4 * m;
  auto primitive = [&](unsigned long r) { return multiplicative_order(r % m, m) == phi; };
  return FieldProfile{spec.name, spec.kind, spec.parameter,
                      NumberField::make(cyclotomic_polynomial(m)), BigInt(d),
                      classes_mod(d, primitive)};
}

FieldProfile cubic_subfield_profile(const ProfileSpec& spec) {
  const unsigned long m = conductor(spec);
  unsigned long l = odd_prime_base(m);
  if (l == 0) {
    fail(ErrorCode::kNoInertPrimes, "cubic subfield profiles need m an odd prime power");
  }
  unsigned long phi = phi_prime_power(m, l);
  if (phi % 3 != 0) fail(ErrorCode::kContractViolation, "Q(zeta_m) has no cubic subfield");
  // p is inert in the cubic subfield iff 3^a divides its order, 3^a || phi(m)
  unsigned long three_part = 1;
  while (phi % (three_part * 3) == 0) three_part *= 3;
  const unsigned long d = 4 * m;
  auto inert = [&](unsigned long r) { return multiplicative_order(r % m, m) % three_part == 0; };
  return FieldProfile{spec.name, spec.kind, spec.parameter,
                      NumberField::make(cubic_period_polynomial(m)), BigInt(d),
                      classes_mod(d, inert)};
}

}  // namespace

const char* profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kClassical: return "classical";
    case ProfileKind::kQuadratic: return "quadratic";
    case ProfileKind::kCyclotomicPower: return "cyclotomic_power";
    case ProfileKind::kCyclotomicCubicSubfield: return "cyclotomic_cubic_subfield";
    case ProfileKind::kGeneric: return "generic";
  }
  return "unknown";
}

ProfileKind parse_profile_kind(std::string_view text) {
  for (ProfileKind k : {ProfileKind::kClassical, ProfileKind::kQuadratic,
                        ProfileKind::kCyclotomicPower, ProfileKind::kCyclotomicCubicSubfield,
                        ProfileKind::kGeneric}) {
    if (text == profile_kind_name(k)) return k;
  }
  fail(ErrorCode::kParseError, "unknown profile kind '" + std::string(text) + "'");
}

IntPoly cyclotomic_polynomial(unsigned long m) {
  if (m == 4) return IntPoly{1, 0, 1};
  unsigned long l = odd_prime_base(m);
  if (l == 0) fail(ErrorCode::kNoInertPrimes, "only odd prime powers and 4 are supported");
  // Phi_{l^k}(x) = sum_{j<l} x^(j l^(k-1))
  unsigned long step = m / l;
  IntPoly g(phi_prime_power(m, l) + 1, 0);
  for (unsigned long j = 0; j < l; ++j) g[j * step] = 1;
  return g;
}

IntPoly cubic_period_polynomial(unsigned long m) {
  unsigned long l = odd_prime_base(m);
  if (l == 0) fail(ErrorCode::kNoInertPrimes, "cubic subfield needs m an odd prime power");
  unsigned long phi = phi_prime_power(m, l);
  if (phi % 3 != 0) fail(ErrorCode::kContractViolation, "Q(zeta_m) has no cubic subfield");

  unsigned long generator = 2;
  while (gcd_ul(generator, m) != 1 || multiplicative_order(generator, m) != phi) ++generator;

  // Periods over the index-3 subgroup H = <g^3>; H contains -1, so they
  // are real: eta_j = sum_{h in H} cos(2 pi h g^j / m).
  std::vector<long double> eta(3, 0.0L);
  unsigned long coset = 1;
  for (int j = 0; j < 3; ++j) {
    unsigned long h = coset;
    for (unsigned long n = 0; n < phi / 3; ++n) {
      eta[j] += std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(h) /
                         static_cast<long double>(m));
      h = (h * generator % m) * generator % m * generator % m;
    }
    coset = coset * generator % m;
  }
  long double e1 = eta[0] + eta[1] + eta[2];
  long double e2 = eta[0] * eta[1] + eta[0] * eta[2] + eta[1] * eta[2];
  long double e3 = eta[0] * eta[1] * eta[2];
  auto round_checked = [](long double v) {
    long double r = std::round(v);
    if (std::fabs(v - r) > 1e-6L) fail(ErrorCode::kContractViolation, "period polynomial not integral");
    return BigInt(static_cast<long>(r));
  };
  return IntPoly{round_checked(-e3), round_checked(e2), round_checked(-e1), 1};
}

FieldProfile congruence_profile(const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileKind::kClassical:
      return FieldProfile{spec.name, spec.kind, 1, NumberField::make(IntPoly{0, 1}), 4, {3}};
    case ProfileKind::kQuadratic: return quadratic_profile(spec);
    case ProfileKind::kCyclotomicPower: return cyclotomic_profile(spec);
    case ProfileKind::kCyclotomicCubicSubfield: return cubic_subfield_profile(spec);
    case ProfileKind::kGeneric:
      return FieldProfile{spec.name, spec.kind, 0, NumberField::make(spec.polynomial), 4, {3}};
  }
  fail(ErrorCode::kContractViolation, "unknown profile kind");
}

bool is_inert(const BigInt& p, const NumberField& field) {
  return fp::is_irreducible(field.poly(), p);
}

StrongPrime gen_strong_prime(const BigInt& d, const BigInt& c, unsigned long lambda,
                             RandomSource& rng) {
  require(lambda >= kMinSecurityParameter, ErrorCode::kContractViolation,
          "security parameter must be at least 8");
  require(d >= 4 && c >= 2 && c < d, ErrorCode::kContractViolation, "need 2 <= c < D");
  require(gcd(c, d) == 1, ErrorCode::kContractViolation, "residue must be coprime to D");

  const BigInt k_low = pow_int(2, lambda) + 1;
  const BigInt k_high = pow_int(2, lambda + 1);
  std::size_t candidates = 0;
  while (candidates < kStrongPrimeCandidateCap) {
    BigInt k = rng.between(k_low, k_high);
    BigInt ell = 2 * k * d + 1;
    ++candidates;
    if (!is_probable_prime(ell, rng)) continue;
    for (BigInt h = 0; candidates < kStrongPrimeCandidateCap; ++h) {
      BigInt p = (h * d + c - 1) * ell + 1;
      ++candidates;
      if (is_probable_prime(p, rng)) return StrongPrime{p, ell, candidates};
    }
  }
  fail(ErrorCode::kGenerationFailure, "strong prime search exceeded the candidate cap");
}

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

StrongPrime gen_strong_prime_bits(const BigInt& d, const BigInt& c, unsigned long bits,
                                  RandomSource& rng) {
  require(bits >= kMinExactPrimeBits, ErrorCode::kContractViolation,
          "exact-size primes need at least 40 bits");
  require(d >= 4 && c >= 2 && c < d, ErrorCode::kContractViolation, "need 2 <= c < D");
  require(gcd(c, d) == 1, ErrorCode::kContractViolation, "residue must be coprime to D");

  // ell in [2^(bits-17), 2^(bits-16)), p in [2^(bits-1), 2^bits)
  const BigInt ell_low = pow_int(2, bits - 17);
  const BigInt ell_high = pow_int(2, bits - 16) - 1;
  const BigInt p_low = pow_int(2, bits - 1);
  const BigInt p_high = pow_int(2, bits) - 1;
  const BigInt k_low = ceil_div(ell_low - 1, 2 * d);
  const BigInt k_high = (ell_high - 1) / (2 * d);
  std::size_t candidates = 0;
  while (candidates < kStrongPrimeCandidateCap) {
    BigInt ell = 2 * rng.between(k_low, k_high) * d + 1;
    ++candidates;
    if (!is_probable_prime(ell, rng)) continue;
    // p - 1 = m ell with m = c - 1 mod D
    const BigInt h_low = ceil_div(ceil_div(p_low - 1, ell) - (c - 1), d);
    const BigInt h_high = ((p_high - 1) / ell - (c - 1)) / d;
    for (unsigned long tries = 0; tries < 8 * bits && candidates < kStrongPrimeCandidateCap; ++tries) {
      BigInt p = (rng.between(h_low, h_high) * d + c - 1) * ell + 1;
      ++candidates;
      if (is_probable_prime(p, rng)) return StrongPrime{p, ell, candidates};
    }
  }
  fail(ErrorCode::kGenerationFailure, "strong prime search exceeded the candidate cap");
}

namespace {

using PrimeDraw = std::function<StrongPrime(const BigInt& residue)>;

KeyPair keygen_from(const FieldProfile& profile, const PrimeDraw& draw, RandomSource& rng) {
  require(!profile.residues.empty(), ErrorCode::kNoInertPrimes, "profile has no residue classes");
  const NumberField& field = profile.field;
  const BigInt bound = mahler_bound(field).value;
  KeyPair out;

  auto draw_prime = [&]() -> BigInt {
    while (true) {
      std::size_t pick = rng.below(BigInt(profile.residues.size())).get_ui();
      StrongPrime sp = draw(profile.residues[pick]);
      out.stats.prime_candidates += sp.candidates;
      if (!profile.needs_inertness_filter()) return sp.p;
      if (sp.p > bound && is_inert(sp.p, field)) return sp.p;
      ++out.stats.inert_rejections;
    }
  };

  BigInt p = draw_prime();
  BigInt q = draw_prime();
  while (q == p) {
    ++out.stats.equal_prime_retries;
    q = draw_prime();
  }
  if (!is_inert(p, field) || !is_inert(q, field)) {
    fail(ErrorCode::kGenerationFailure,
         "generated prime is not inert; the profile's congruence list is unsound");
  }

  PrivateKey sk{profile.name, p * q, p, q, std::nullopt, std::nullopt};
  PrimeContext ctx_p = PrimeContext::inert(p, field);
  if (sqrt_method(ctx_p) == SqrtMethod::kTonelliShanks) {
    PrimeContext ctx_q = PrimeContext::inert(q, field);
    sk.nonsquare_p = find_nonsquare(ctx_p, field, rng);
    sk.nonsquare_q = find_nonsquare(ctx_q, field, rng);
  }
  out.pub = sk.public_key();
  out.priv = std::move(sk);
  return out;
}

}  // namespace

KeyPair keygen(const FieldProfile& profile, unsigned long lambda, RandomSource& rng) {
  return keygen_from(
      profile,
      [&](const BigInt& c) { return gen_strong_prime(profile.modulus_d, c, lambda, rng); }, rng);
}

KeyPair keygen_with_prime_bits(const FieldProfile& profile, unsigned long prime_bits,
                               RandomSource& rng) {
  return keygen_from(
      profile,
      [&](const BigInt& c) { return gen_strong_prime_bits(profile.modulus_d, c, prime_bits, rng); },
      rng);
}

std::string format_catalog_entry(const FieldProfile& profile) {
  std::ostringstream os;
  os << "name=" << profile.name << " kind=" << profile_kind_name(profile.kind)
     << " param=" << to_decimal(profile.parameter) << " g=" << format_poly(profile.field.poly())
     << " D=" << to_decimal(profile.modulus_d) << " residues=" << join_decimal(profile.residues);
  return os.str();
}

std::vector<FieldProfile> parse_catalog(std::string_view text) {
  std::vector<FieldProfile> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("rabin-nf profiles ", 0) != 0) {
        fail(ErrorCode::kParseError, "catalog header missing");
      }
      if (line != "rabin-nf profiles v1") {
        fail(ErrorCode::kUnsupportedVersion, "unsupported catalog version: " + line);
      }
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    std::string name, kind, param, g, d, residues;
    while (fields >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) {
        fail(ErrorCode::kParseError, "catalog line " + std::to_string(line_no) + ": bad token");
      }
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "name") name = value;
      else if (key == "kind") kind = value;
      else if (key == "param") param = value;
      else if (key == "g") g = value;
      else if (key == "D") d = value;
      else if (key == "residues") residues = value;
      else fail(ErrorCode::kParseError, "catalog line " + std::to_string(line_no) + ": unknown key " + key);
    }
    if (name.empty() || kind.empty() || param.empty() || g.empty() || d.empty() || residues.empty()) {
      fail(ErrorCode::kParseError, "catalog line " + std::to_string(line_no) + ": missing field");
    }
    ProfileSpec spec{name, parse_profile_kind(kind), parse_bigint(param), parse_poly(g)};
    FieldProfile profile = congruence_profile(spec);
    if (profile.field.poly() != parse_poly(g) || profile.modulus_d != parse_bigint(d) ||
        profile.residues != split_decimal(residues)) {
      fail(ErrorCode::kParseError,
           "catalog entry '" + name + "' disagrees with its recomputed congruence profile");
    }
    out.push_back(std::move(profile));
  }
  if (!header_seen) fail(ErrorCode::kParseError, "empty catalog");
  return out;
}

const std::vector<FieldProfile>& builtin_profiles() {
  static const std::vector<FieldProfile> profiles = parse_catalog(builtin_catalog_text());
  return profiles;
}

const FieldProfile& find_profile(std::string_view name) {
  for (const auto& p : builtin_profiles()) {
    if (p.name == name) return p;
  }
  fail(ErrorCode::kUnknownProfile, "unknown profile '" + std::string(name) + "'");
}

}  // namespace rabin_nf
