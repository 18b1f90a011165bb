#pragma once

#include "rabin_nf/bigint.hpp"

namespace rabin_nf {

// Jacobi symbol (a/n) for odd n >= 3 by the reciprocity iteration.
// Returns 0 exactly when gcd(a, n) > 1. Throws kContractViolation for even n.
int jacobi(const BigInt& a, const BigInt& n);

}  // namespace rabin_nf
