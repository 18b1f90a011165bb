#include "rabin_nf/attacks.hpp"

#include <algorithm>
#include <sstream>

#include "rabin_nf/error.hpp"

namespace rabin_nf::attack {

namespace {

IntPoly symmetric_lift(const IntPoly& f, const BigInt& p) {
  IntPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mod_symmetric(f[i], p);
  trim(out);
  return out;
}

std::vector<BigInt> as_vector(const IntPoly& reduced, int d) {
  std::vector<BigInt> v(d, 0);
  for (std::size_t i = 0; i < reduced.size() && i < static_cast<std::size_t>(d); ++i) v[i] = reduced[i];
  return v;
}

IntPoly reduce_mod_g(const IntPoly& h, const NumberField& field) {
  return divmod_monic(h, field.poly()).second;
}

bool is_prime(const BigInt& v) { return v >= 2 && mpz_probab_prime_p(v.get_mpz_t(), 40) != 0; }

}  // namespace

std::vector<PrimeIdealDesc> prime_ideals_above(const BigInt& p, const NumberField& field) {
  const int d = field.degree();
  if (p > kDeskScaleLimit) fail(ErrorCode::kOutOfDeskScale, "prime too large for ideal splitting");
  if (d > 3) fail(ErrorCode::kOutOfDeskScale, "ideal splitting supports degree <= 3");
  require(is_prime(p), ErrorCode::kContractViolation, "ideal splitting needs a prime");
  if (mod_floor(discriminant(field.poly()), p) == 0) {
    fail(ErrorCode::kContractViolation, "p divides disc(g); ramified primes are not handled");
  }

  std::vector<BigInt> roots = fp::roots_by_scan(field.poly(), p);
  for (auto& r : roots) r = mod_symmetric(r, p);
  std::sort(roots.begin(), roots.end());

  std::vector<IntPoly> factors;
  IntPoly cofactor = fp::reduce(field.poly(), p);
  for (const auto& r : roots) {
    IntPoly linear{BigInt(-r), 1};
    factors.push_back(linear);
    cofactor = fp::divmod(cofactor, fp::reduce(linear, p), p).first;
  }
  // No roots left and degree <= 3, so what remains is irreducible.
  if (degree(cofactor) >= 1) factors.push_back(symmetric_lift(cofactor, p));

  std::vector<PrimeIdealDesc> out;
  for (auto& gp : factors) {
    const auto f = static_cast<unsigned long>(degree(gp));
    // v_P(gp(theta)) = v_p(N(gp(theta))) / f, as gp(theta) avoids the
    // other primes above p.
    BigInt norm = resultant(field.poly(), gp);
    if (norm == 0 || valuation(norm, p) >= 2 * f) gp[0] += p;
    out.push_back(PrimeIdealDesc{p, gp, f});
  }
  return out;
}

std::vector<IntPoly> naive_generators(const PrimeIdealDesc& pp, const PrimeIdealDesc& qq,
                                      const NumberField& field) {
  return {IntPoly{pp.p * qq.p}, reduce_mod_g(poly_scale(qq.gp, pp.p), field),
          reduce_mod_g(poly_scale(pp.gp, qq.p), field), reduce_mod_g(poly_mul(pp.gp, qq.gp), field)};
}

std::optional<BigInt> factor_from_generator_gcd(const std::vector<IntPoly>& generators,
                                                const BigInt& n) {
  for (const auto& gen : generators) {
    BigInt g = gcd(content(gen), n);
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

HnfMatrix ideal_hnf(const BigInt& n, const IntPoly& h, const NumberField& field) {
  const int d = field.degree();
  require(n != 0, ErrorCode::kContractViolation, "ideal needs a non-zero rational generator");
  std::vector<std::vector<BigInt>> rows;
  for (int j = 0; j < d; ++j) {
    std::vector<BigInt> row(d, 0);
    row[j] = abs(n);
    rows.push_back(row);
  }
  IntPoly shifted = reduce_mod_g(h, field);
  for (int j = 0; j < d; ++j) {
    rows.push_back(as_vector(shifted, d));
    shifted = reduce_mod_g(poly_mul(shifted, IntPoly{0, 1}), field);
  }

  // Integer row reduction column by column; the lattice has full rank
  // because it contains n Z^d.
  std::size_t top = 0;
  for (int col = 0; col < d; ++col) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col]))) {
          pivot = r;
        }
      }
      if (pivot == rows.size()) fail(ErrorCode::kMalformedIdeal, "ideal lattice is not of full rank");
      std::swap(rows[top], rows[pivot]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt qt;
        mpz_fdiv_q(qt.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (int c = col; c < d; ++c) rows[r][c] -= qt * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] < 0) {
      for (auto& v : rows[top]) v = -v;
    }
    for (std::size_t r = 0; r < top; ++r) {
      BigInt qt;
      mpz_fdiv_q(qt.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      for (int c = col; c < d; ++c) rows[r][c] -= qt * rows[top][c];
    }
    ++top;
  }
  rows.resize(d);
  return HnfMatrix{rows};
}

HnfMatrix parse_hnf(std::string_view text) {
  HnfMatrix m;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    m.rows.push_back(split_decimal(line));
  }
  if (m.rows.empty()) fail(ErrorCode::kParseError, "empty matrix");
  for (const auto& row : m.rows) {
    if (row.size() != m.rows.size()) fail(ErrorCode::kParseError, "matrix must be square");
  }
  return m;
}

BigInt hnf_ideal_norm(const HnfMatrix& m) {
  const std::size_t d = m.rows.size();
  require(d >= 1, ErrorCode::kContractViolation, "empty matrix");
  BigInt det = 1;
  for (std::size_t i = 0; i < d; ++i) {
    require(m.rows[i].size() == d, ErrorCode::kContractViolation, "matrix must be square");
    for (std::size_t j = 0; j < i; ++j) {
      require(m.rows[i][j] == 0, ErrorCode::kContractViolation, "matrix is not upper triangular");
    }
    require(m.rows[i][i] > 0, ErrorCode::kContractViolation, "diagonal must be positive");
    det *= m.rows[i][i];
  }
  return det;
}

BigInt ideal_norm(const IdealDesc& ideal, const NumberField& field) {
  if (const auto* gen = std::get_if<GeneratorIdeal>(&ideal)) {
    return abs(resultant(field.poly(), gen->h));
  }
  return hnf_ideal_norm(std::get<HnfMatrix>(ideal));
}

std::pair<BigInt, BigInt> factor_unequal_degrees(const BigInt& n, const IdealDesc& ideal,
                                                 const NumberField& field) {
  require(n > 1, ErrorCode::kContractViolation, "N must exceed 1");
  BigInt norm = ideal_norm(ideal, field);
  if (norm == 0) fail(ErrorCode::kAttackInapplicable, "ideal norm vanishes");
  while (mpz_divisible_p(norm.get_mpz_t(), n.get_mpz_t()) != 0) norm /= n;
  BigInt g = gcd(norm, n);
  if (g == 1 || g == n) {
    fail(ErrorCode::kAttackInapplicable,
         "no prime survives stripping N from the norm (equal residue degrees?)");
  }
  return {g, n / g};
}

std::pair<BigInt, BigInt> factor_from_roots(const BigInt& n, const RingElement& m1,
                                            const RingElement& m2, const NumberField& field) {
  if (m1.modulus != n || m2.modulus != n) {
    fail(ErrorCode::kContextMismatch, "roots must be reduced modulo N");
  }
  if (mul(m1, m1, field) != mul(m2, m2, field)) {
    fail(ErrorCode::kPreconditionViolated, "m1 and m2 do not square to the same element");
  }
  BigInt s = norm_int(add(m1, m2, field), field);
  BigInt g = gcd(s, n);
  if (g == 1 || g == n) {
    fail(ErrorCode::kPreconditionViolated, "roots are antipodal or equal; no factor revealed");
  }
  return {g, n / g};
}

std::pair<PrimeIdealDesc, PrimeIdealDesc> brute_force_ideal_oracle(const BigInt& n,
                                                                   const BigInt& delta,
                                                                   const BigInt& a) {
  if (n > kDeskScaleLimit) fail(ErrorCode::kOutOfDeskScale, "oracle factors N <= 2^20 only");
  require(n >= 6, ErrorCode::kContractViolation, "N must be a semiprime");
  const unsigned long nn = n.get_ui();
  unsigned long p = 0;
  for (unsigned long k = 2; k * k <= nn; ++k) {
    if (nn % k == 0) {
      p = k;
      break;
    }
  }
  if (p == 0) fail(ErrorCode::kContractViolation, "N is prime, not a semiprime");
  const unsigned long q = nn / p;
  if (q == p || !is_prime(BigInt(q))) {
    fail(ErrorCode::kContractViolation, "N is not a product of two distinct primes");
  }

  const IntPoly g{BigInt(-delta), 0, 1};
  auto ideal_containing = [&](unsigned long ell) {
    const BigInt prime(ell);
    // (ell, theta - r) contains a + theta iff a + r = 0 mod ell
    for (const auto& r : fp::roots_by_scan(g, prime)) {
      if (mod_floor(a + r, prime) == 0) {
        return PrimeIdealDesc{prime, IntPoly{BigInt(-mod_symmetric(r, prime)), 1}, 1};
      }
    }
    fail(ErrorCode::kContractViolation, "a + sqrt(delta) lies in no degree-one prime above N");
  };
  return {ideal_containing(p), ideal_containing(q)};
}

IdealOracle exact_oracle() {
  return [](const BigInt& n, const BigInt& delta, const BigInt& a)
             -> std::optional<std::pair<PrimeIdealDesc, PrimeIdealDesc>> {
    return brute_force_ideal_oracle(n, delta, a);
  };
}

IdealOracle unreliable_oracle(IdealOracle base, double omega, RandomSource& rng) {
  return [base = std::move(base), omega, &rng](const BigInt& n, const BigInt& delta,
                                               const BigInt& a)
             -> std::optional<std::pair<PrimeIdealDesc, PrimeIdealDesc>> {
    double u = static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
    if (u >= omega) return std::nullopt;
    return base(n, delta, a);
  };
}

const char* reduction_route_name(ReductionRoute route) {
  switch (route) {
    case ReductionRoute::kSharedFactor: return "shared-factor";
    case ReductionRoute::kPerfectSquare: return "perfect-square";
    case ReductionRoute::kNormCofactor: return "norm-cofactor";
    case ReductionRoute::kOracle: return "oracle";
  }
  return "unknown";
}

ReductionResult quadratic_reduction(const BigInt& n, const IdealOracle& oracle, std::size_t k,
                                    RandomSource& rng) {
  require(n >= 9 && mpz_odd_p(n.get_mpz_t()) != 0, ErrorCode::kContractViolation,
          "N must be an odd composite");
  const BigInt root = isqrt(n);
  // sqrt(N) < a < N - sqrt(N)
  const BigInt lo = root + 1;
  const BigInt hi = n - root - 1;
  require(lo <= hi, ErrorCode::kContractViolation, "N too small for the sampling interval");

  ReductionResult result;
  auto found = [&](const BigInt& g, ReductionRoute route) {
    if (g == 1 || g == n) return false;
    result.factor = g;
    result.route = route;
    return true;
  };
  for (std::size_t round = 0; round < k; ++round) {
    result.iterations = round + 1;
    BigInt a = rng.between(lo, hi);
    BigInt delta = mod_floor(a * a, n);
    if (gcd(delta, n) != 1) {
      if (found(gcd(a, n), ReductionRoute::kSharedFactor)) return result;
      continue;
    }
    BigInt b;
    if (is_perfect_square(delta, &b)) {
      if (found(gcd(n, b - a), ReductionRoute::kPerfectSquare)) return result;
      continue;
    }
    BigInt cofactor = (a * a - delta) / n;
    if (found(gcd(cofactor, n), ReductionRoute::kNormCofactor)) return result;

    auto ideals = oracle(n, delta, a);
    if (!ideals) continue;
    for (const auto* ideal : {&ideals->first, &ideals->second}) {
      BigInt norm = pow_int(ideal->p, ideal->f);
      if (found(gcd(norm, n), ReductionRoute::kOracle)) return result;
    }
  }
  return result;
}

BigInt prime_below(const BigInt& norm, int degree) {
  if (norm < 2) fail(ErrorCode::kMalformedIdeal, "a prime ideal has norm at least 2");
  for (int f = degree; f >= 1; --f) {
    BigInt root;
    if (exact_root(norm, static_cast<unsigned long>(f), &root) && is_prime(root)) return root;
  }
  fail(ErrorCode::kMalformedIdeal, "norm is not a prime power p^f with f <= d");
}

BigInt prime_below(const PrimeIdealDesc& ideal, const NumberField& field) {
  return prime_below(hnf_ideal_norm(ideal_hnf(ideal.p, ideal.gp, field)), field.degree());
}

BigInt prime_below(const HnfMatrix& ideal, int degree) {
  return prime_below(hnf_ideal_norm(ideal), degree);
}

}  // namespace rabin_nf::attack
