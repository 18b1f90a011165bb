#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rabin_nf {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_decimal(const BigInt& v);

std::size_t bit_length(const BigInt& v);

// Least non-negative residue.
BigInt mod_floor(const BigInt& a, const BigInt& m);

// Representative in (-m/2, m/2].
BigInt mod_symmetric(const BigInt& a, const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);

struct ExtendedGcd {
  BigInt g;
  BigInt x;  // x*a + y*b = g
  BigInt y;
};

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

BigInt pow_int(const BigInt& base, unsigned long exp);

bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);

// floor(sqrt(v)) for v >= 0
BigInt isqrt(const BigInt& v);

// Exact k-th root if one exists.
bool exact_root(const BigInt& v, unsigned long k, BigInt* root);

// Valuation of v at the prime p; v must be non-zero.
unsigned long valuation(const BigInt& v, const BigInt& p);

std::string join_decimal(const std::vector<BigInt>& values, char sep = ',');
std::vector<BigInt> split_decimal(std::string_view text, char sep = ',');

}  // namespace rabin_nf
