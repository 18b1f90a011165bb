#include "rabin_nf/jacobi.hpp"

#include "rabin_nf/error.hpp"

namespace rabin_nf {

int jacobi(const BigInt& a, const BigInt& n) {
  require(n >= 3 && mpz_odd_p(n.get_mpz_t()) != 0, ErrorCode::kContractViolation,
          "Jacobi symbol needs an odd modulus >= 3");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

}  // namespace rabin_nf
