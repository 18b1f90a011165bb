#include "rabin_nf/poly.hpp"

#include <algorithm>

#include "rabin_nf/error.hpp"

namespace rabin_nf {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

IntPoly poly_scale(const IntPoly& a, const BigInt& k) {
  IntPoly out(a);
  for (auto& c : out) c *= k;
  trim(out);
  return out;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

BigInt poly_eval(const IntPoly& f, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = f.size(); i > 0; --i) acc = acc * x + f[i - 1];
  return acc;
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f) g = rabin_nf::gcd(g, c);
  return g;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  int dg = degree(monic);
  require(dg >= 0 && monic[dg] == 1, ErrorCode::kInvalidPolynomial, "divisor must be monic");
  IntPoly r(a);
  trim(r);
  IntPoly q;
  if (degree(r) >= dg) q.assign(r.size() - dg, 0);
  for (int i = degree(r); i >= dg; --i) {
    BigInt lead = r[i];
    if (lead == 0) continue;
    q[i - dg] = lead;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= lead * monic[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

BigInt resultant(const IntPoly& f_in, const IntPoly& h_in) {
  IntPoly f(f_in), h(h_in);
  trim(f);
  trim(h);
  if (f.empty() || h.empty()) return 0;
  const int m = degree(f);
  const int n = degree(h);
  const int size = m + n;
  if (size == 0) return 1;

  // Sylvester matrix: n shifted copies of f, then m shifted copies of h,
  // leading coefficient first.
  std::vector<std::vector<BigInt>> mat(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) mat[r][r + j] = f[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) mat[n + r][r + j] = h[n - j];
  }

  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k] == 0) {
      int swap_with = -1;
      for (int r = k + 1; r < size; ++r) {
        if (mat[r][k] != 0) {
          swap_with = r;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(mat[k], mat[swap_with]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        BigInt v = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        mat[i][j] = v;
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  BigInt det = mat[size - 1][size - 1];
  return sign > 0 ? det : BigInt(-det);
}

BigInt discriminant(const IntPoly& monic) {
  int d = degree(monic);
  require(d >= 1 && monic[d] == 1, ErrorCode::kInvalidPolynomial,
          "discriminant needs a monic polynomial of degree >= 1");
  if (d == 1) return 1;
  BigInt res = resultant(monic, derivative(monic));
  return ((d * (d - 1) / 2) % 2 == 0) ? res : BigInt(-res);
}

IntPoly parse_poly(std::string_view text) {
  IntPoly f = split_decimal(text, ',');
  return f;
}

std::string format_poly(const IntPoly& f) { return join_decimal(f, ','); }

std::string pretty_poly(const IntPoly& f, char var) {
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    const BigInt& c = f[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = mag != 1 || i == 0;
    if (show_coeff) out += to_decimal(mag);
    if (i >= 1) out.push_back(var);
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace fp {

IntPoly reduce(const IntPoly& f, const BigInt& p) {
  IntPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mod_floor(f[i], p);
  trim(out);
  return out;
}

static BigInt inverse_mod(const BigInt& a, const BigInt& p) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    fail(ErrorCode::kNotInvertible, "coefficient not invertible mod p");
  }
  return inv;
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b, const BigInt& p) {
  int db = degree(b);
  require(db >= 0, ErrorCode::kContractViolation, "polynomial division by zero");
  BigInt lead_inv = inverse_mod(b[db], p);
  IntPoly r = reduce(a, p);
  IntPoly q;
  if (degree(r) >= db) q.assign(r.size() - db, 0);
  for (int i = degree(r); i >= db; --i) {
    if (r[i] == 0) continue;
    BigInt factor = mod_floor(r[i] * lead_inv, p);
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod_floor(r[i - db + j] - factor * b[j], p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

IntPoly rem(const IntPoly& a, const IntPoly& b, const BigInt& p) { return divmod(a, b, p).second; }

IntPoly make_monic(const IntPoly& f, const BigInt& p) {
  int d = degree(f);
  if (d < 0) return {};
  BigInt inv = inverse_mod(f[d], p);
  IntPoly out(d + 1);
  for (int i = 0; i <= d; ++i) out[i] = mod_floor(f[i] * inv, p);
  return out;
}

IntPoly gcd(IntPoly a, IntPoly b, const BigInt& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    IntPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& modulus, const BigInt& p) {
  return rem(reduce(poly_mul(a, b), p), modulus, p);
}

IntPoly powmod(const IntPoly& a, const BigInt& e, const IntPoly& modulus, const BigInt& p) {
  IntPoly result{1};
  result = rem(result, modulus, p);
  IntPoly base = rem(a, modulus, p);
  for (std::size_t i = bit_length(e); i > 0; --i) {
    result = mulmod(result, result, modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i - 1) != 0) result = mulmod(result, base, modulus, p);
  }
  return result;
}

static std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const IntPoly& f_in, const BigInt& p) {
  IntPoly f = reduce(f_in, p);
  int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = make_monic(f, p);
  const IntPoly x{0, 1};

  // frobenius[k] = x^(p^k) mod f
  std::vector<IntPoly> frobenius{rem(x, f, p)};
  for (int k = 1; k <= n; ++k) frobenius.push_back(powmod(frobenius.back(), p, f, p));

  if (reduce(poly_sub(frobenius[n], x), p) != IntPoly{}) return false;
  for (int r : prime_divisors(n)) {
    IntPoly diff = reduce(poly_sub(frobenius[n / r], x), p);
    if (degree(gcd(diff, f, p)) != 0) return false;
  }
  return true;
}

std::vector<BigInt> roots_by_scan(const IntPoly& f, const BigInt& p) {
  require(p.fits_ulong_p(), ErrorCode::kOutOfDeskScale, "root scan needs a small prime");
  std::vector<BigInt> out;
  IntPoly g = reduce(f, p);
  unsigned long bound = p.get_ui();
  for (unsigned long x = 0; x < bound; ++x) {
    if (mod_floor(poly_eval(g, BigInt(x)), p) == 0) out.emplace_back(x);
  }
  return out;
}

}  // namespace fp

}  // namespace rabin_nf
