#pragma once

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rabin_nf/error.hpp"
#include "rabin_nf/nf_arith.hpp"

namespace testing_support {

using rabin_nf::BigInt;

inline rabin_nf::NumberField field_of(std::initializer_list<long> coeffs) {
  rabin_nf::IntPoly g;
  for (long c : coeffs) g.emplace_back(c);
  return rabin_nf::NumberField::make(g);
}

inline oracle::SmallPoly small_poly(const rabin_nf::IntPoly& g) {
  oracle::SmallPoly out;
  for (const auto& c : g) out.push_back(c.get_si());
  return out;
}

inline oracle::SmallPoly to_small(const rabin_nf::RingElement& a) {
  oracle::SmallPoly out;
  for (const auto& c : a.coeffs) out.push_back(c.get_si());
  return out;
}

inline rabin_nf::RingElement from_small(const oracle::SmallPoly& a, long long p) {
  rabin_nf::RingElement out;
  for (auto v : a) out.coeffs.emplace_back(static_cast<long>(v));
  out.modulus = static_cast<long>(p);
  return out;
}

inline rabin_nf::RingElement elem(const rabin_nf::NumberField& field, std::initializer_list<long> c,
                                  const BigInt& modulus) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return field.element(v, modulus);
}

}  // namespace testing_support

// Expects `stmt` to throw rabin_nf::Error with the given code.
#define EXPECT_RABIN_ERROR(stmt, expected_code)                                    \
  do {                                                                             \
    try {                                                                          \
      stmt;                                                                        \
      ADD_FAILURE() << "expected " << rabin_nf::error_code_name(expected_code);    \
    } catch (const rabin_nf::Error& e_) {                                          \
      EXPECT_EQ(e_.code(), expected_code)                                          \
          << "got " << rabin_nf::error_code_name(e_.code()) << ": " << e_.what(); \
    }                                                                              \
  } while (0)
