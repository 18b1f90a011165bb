#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rabin_nf/bigint.hpp"

namespace rabin_nf {

// Dense univariate polynomial, constant term first. The zero polynomial is
// the empty vector once trimmed.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& f);
int degree(const IntPoly& f);  // -1 for zero
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const BigInt& k);
IntPoly derivative(const IntPoly& f);
BigInt poly_eval(const IntPoly& f, const BigInt& x);
BigInt content(const IntPoly& f);

// Division by a monic divisor over Z.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

// Res(f, h) as the determinant of the Sylvester matrix, evaluated with
// Bareiss fraction-free elimination. Res(f, 0) = 0.
BigInt resultant(const IntPoly& f, const IntPoly& h);

// Discriminant of a monic polynomial: (-1)^(d(d-1)/2) Res(g, g').
BigInt discriminant(const IntPoly& monic);

// "c0,c1,...,cd" decimal text.
IntPoly parse_poly(std::string_view text);
std::string format_poly(const IntPoly& f);
// Human readable, e.g. "x^2 + 16".
std::string pretty_poly(const IntPoly& f, char var = 'x');

namespace fp {

// All routines take coefficients already reduced into [0, p) and return
// trimmed results in the same range. p must be prime.
IntPoly reduce(const IntPoly& f, const BigInt& p);
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b, const BigInt& p);
IntPoly rem(const IntPoly& a, const IntPoly& b, const BigInt& p);
IntPoly make_monic(const IntPoly& f, const BigInt& p);
IntPoly gcd(IntPoly a, IntPoly b, const BigInt& p);
IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& modulus, const BigInt& p);
IntPoly powmod(const IntPoly& a, const BigInt& e, const IntPoly& modulus, const BigInt& p);

// Rabin's test: f of degree n is irreducible over F_p iff
// x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const IntPoly& f, const BigInt& p);

// Roots in [0, p) by exhaustive scan, ascending. Desk-scale p only.
std::vector<BigInt> roots_by_scan(const IntPoly& f, const BigInt& p);

}  // namespace fp

}  // namespace rabin_nf
