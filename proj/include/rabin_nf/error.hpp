#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rabin_nf {

enum class ErrorCode {
  kInvalidPolynomial,
  kContextMismatch,
  kZeroElement,
  kNotInvertible,
  kImprobableFailure,
  kNotASquare,
  kMethodNotApplicable,
  kContractViolation,
  kNotCoprime,
  kNoInertPrimes,
  kGenerationFailure,
  kCapacityExceeded,
  kAccidentalFactor,
  kMalformedCiphertext,
  kAttackInapplicable,
  kPreconditionViolated,
  kOutOfDeskScale,
  kMalformedIdeal,
  kParseError,
  kUnsupportedVersion,
  kUnknownProfile,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a value that should be a unit modulo N shares a factor with N.
// Carries the factor, because holding it is as good as holding the key.
class AccidentalFactorError : public Error {
 public:
  AccidentalFactorError(mpz_class factor, const std::string& what)
      : Error(ErrorCode::kAccidentalFactor, what), factor_(std::move(factor)) {}

  const mpz_class& factor() const noexcept { return factor_; }

 private:
  mpz_class factor_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace rabin_nf
