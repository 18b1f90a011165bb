#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

long long md(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_scalar(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::runtime_error("oracle: scalar not invertible");
  return md(t, p);
}

void strip(SmallPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

SmallPoly poly_rem(SmallPoly a, const SmallPoly& b, long long p) {
  strip(a);
  SmallPoly bb = b;
  strip(bb);
  const long long lead_inv = inv_scalar(bb.back(), p);
  while (a.size() >= bb.size()) {
    long long factor = md(a.back() * lead_inv, p);
    std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] = md(a[shift + i] - factor * bb[i], p);
    strip(a);
  }
  return a;
}

}  // namespace

SmallPoly mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& g, long long p) {
  const std::size_t d = g.size() - 1;
  SmallPoly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = md(prod[i + j] + a[i] * b[j], p);
  }
  SmallPoly gm(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gm[i] = md(g[i], p);
  SmallPoly r = poly_rem(prod, gm, p);
  r.resize(d, 0);
  return r;
}

std::vector<SmallPoly> all_elements(int d, long long p) {
  std::vector<SmallPoly> out;
  SmallPoly cur(static_cast<std::size_t>(d), 0);
  while (true) {
    out.push_back(cur);
    int k = 0;
    while (k < d && ++cur[k] == p) cur[k++] = 0;
    if (k == d) break;
  }
  return out;
}

std::vector<SmallPoly> square_roots(const SmallPoly& c, const SmallPoly& g, long long p) {
  std::vector<SmallPoly> out;
  for (const auto& x : all_elements(static_cast<int>(g.size()) - 1, p)) {
    if (mulmod(x, x, g, p) == c) out.push_back(x);
  }
  return out;
}

std::vector<SmallPoly> nonzero_squares(const SmallPoly& g, long long p) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<SmallPoly> out;
  for (const auto& x : all_elements(d, p)) {
    bool zero = true;
    for (auto v : x) zero = zero && v == 0;
    if (zero) continue;
    SmallPoly sq = mulmod(x, x, g, p);
    bool seen = false;
    for (const auto& s : out) seen = seen || s == sq;
    if (!seen) out.push_back(sq);
  }
  return out;
}

SmallPoly inverse(const SmallPoly& a, const SmallPoly& g, long long p) {
  // r0 = s0 a + t0 g; track only s.
  SmallPoly gm(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gm[i] = md(g[i], p);
  SmallPoly r0 = gm, r1 = a, s0{}, s1{1};
  strip(r1);
  if (r1.empty()) throw std::runtime_error("oracle: zero has no inverse");
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    SmallPoly rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const long long li = inv_scalar(r1.back(), p);
    while (rem.size() >= r1.size()) {
      long long f = md(rem.back() * li, p);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = f;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = md(rem[shift + i] - f * r1[i], p);
      strip(rem);
    }
    // s2 = s0 - q s1
    SmallPoly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = md(qs[i + j] + q[i] * s1[j], p);
    }
    SmallPoly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      s2[i] = md((i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0), p);
    }
    strip(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r0.size() != 1) throw std::runtime_error("oracle: not invertible");
  const long long c = inv_scalar(r0[0], p);
  SmallPoly out(g.size() - 1, 0);
  SmallPoly reduced = poly_rem(s0, gm, p);
  for (std::size_t i = 0; i < reduced.size(); ++i) out[i] = md(reduced[i] * c, p);
  return out;
}

std::vector<mpz_class> x_power_mod(unsigned e, const std::vector<mpz_class>& g) {
  const std::size_t d = g.size() - 1;
  std::vector<mpz_class> a(e + 1, 0);
  a[e] = 1;
  for (std::size_t top = e; top >= d && top + 1 > 0; --top) {
    mpz_class f = a[top];
    if (f != 0) {
      for (std::size_t i = 0; i <= d; ++i) a[top - d + i] -= f * g[i];
    }
    if (top == d) break;
  }
  a.resize(d, 0);
  return a;
}

mpz_class norm_by_determinant(const std::vector<mpz_class>& h, const std::vector<mpz_class>& g) {
  const std::size_t d = g.size() - 1;
  // Column j = h * theta^j reduced mod g.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<mpz_class> col(d, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      std::vector<mpz_class> xp = x_power_mod(static_cast<unsigned>(i + j), g);
      for (std::size_t k = 0; k < d; ++k) col[k] += h[i] * xp[k];
    }
    for (std::size_t k = 0; k < d; ++k) m[k][j] = col[k];
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < d; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  if (det.get_den() != 1) throw std::runtime_error("oracle: non-integral determinant");
  return det.get_num();
}

bool berlekamp_irreducible(const SmallPoly& g, long long p) {
  const std::size_t d = g.size() - 1;
  // Row i of Q holds x^(i p) mod g.
  SmallPoly xp(d, 0);
  if (d == 1) return true;
  SmallPoly x(d, 0);
  x[1] = 1;
  // x^p by repeated squaring with mulmod.
  SmallPoly acc(d, 0);
  acc[0] = 1;
  SmallPoly base = x;
  for (long long e = p; e > 0; e >>= 1) {
    if (e & 1) acc = mulmod(acc, base, g, p);
    base = mulmod(base, base, g, p);
  }
  xp = acc;
  std::vector<SmallPoly> q(d);
  SmallPoly row(d, 0);
  row[0] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    q[i] = row;
    row = mulmod(row, xp, g, p);
  }
  for (std::size_t i = 0; i < d; ++i) q[i][i] = md(q[i][i] - 1, p);
  // rank of Q - I modulo p
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < d; ++c) {
    std::size_t piv = rank;
    while (piv < d && q[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(q[piv], q[rank]);
    long long inv = inv_scalar(q[rank][c], p);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == rank || q[r][c] == 0) continue;
      long long f = md(q[r][c] * inv, p);
      for (std::size_t k = 0; k < d; ++k) q[r][k] = md(q[r][k] - f * q[rank][k], p);
    }
    ++rank;
  }
  return d - rank == 1;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
  if (n % 2 == 0) throw std::runtime_error("oracle: even modulus");
  a %= n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::uint64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

long long crt_search(long long x, long long y, long long p, long long q) {
  for (long long r = md(x, p); r < p * q; r += p) {
    if (r % q == md(y, q)) return r;
  }
  throw std::runtime_error("oracle: no CRT solution");
}

}  // namespace oracle
