#pragma once

// Independent reference implementations used only as test oracles. None of
// them call into the library's arithmetic.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using SmallPoly = std::vector<long long>;  // constant term first

// Product of a and b modulo (g, p) by schoolbook multiplication and long
// division by the monic g. Inputs reduced into [0, p).
SmallPoly mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& g, long long p);

// Every element of F_p[x]/(g) as a length-d vector.
std::vector<SmallPoly> all_elements(int d, long long p);

// All x with x^2 = c in F_p[x]/(g).
std::vector<SmallPoly> square_roots(const SmallPoly& c, const SmallPoly& g, long long p);

// Inverse of a modulo (g, p) by the extended Euclidean algorithm in F_p[x].
SmallPoly inverse(const SmallPoly& a, const SmallPoly& g, long long p);

// The set of non-zero squares of F_p[x]/(g).
std::vector<SmallPoly> nonzero_squares(const SmallPoly& g, long long p);

// Reduce x^e modulo a monic integer polynomial g over Z by long division.
std::vector<mpz_class> x_power_mod(unsigned e, const std::vector<mpz_class>& g);

// Norm of h(theta): determinant of the multiplication-by-h matrix on the
// basis 1, theta, ..., theta^(d-1), by Gaussian elimination over Q.
mpz_class norm_by_determinant(const std::vector<mpz_class>& h, const std::vector<mpz_class>& g);

// Irreducibility of a squarefree monic g over F_p by Berlekamp's criterion:
// the Frobenius fixed space of F_p[x]/(g) is one-dimensional.
bool berlekamp_irreducible(const SmallPoly& g, long long p);

// Jacobi symbol by the binary reciprocity algorithm on machine words.
int jacobi(std::uint64_t a, std::uint64_t n);

// Deterministic primality by trial division (n < 2^40).
bool is_prime_small(std::uint64_t n);

// Scalar CRT by search: the unique r in [0, pq) with r = x mod p, r = y mod q.
long long crt_search(long long x, long long y, long long p, long long q);

}  // namespace oracle
