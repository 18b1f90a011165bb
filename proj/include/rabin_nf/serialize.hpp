#pragma once

#include <string>
#include <string_view>

#include "rabin_nf/keygen.hpp"
#include "rabin_nf/scheme.hpp"

namespace rabin_nf {

// Text formats, one field per line, '\n' line ends:
//
//   rabin-nf pk v1      rabin-nf sk v1           rabin-nf ct v1
//   profile=<name>      profile=<name>           <c0>,<c1>,...
//   N=<decimal>         N=<decimal>              b0=<0|1> b1=<0|1>
//                       p=<decimal>
//                       q=<decimal>
//                       [ns_p=<c0>,<c1>,...]
//                       [ns_q=<c0>,<c1>,...]
//
// The non-square lines appear only for keys whose primes need
// Tonelli-Shanks. Parsers reject anything else with kParseError, or
// kUnsupportedVersion for a recognised header with another version.

std::string serialize_public_key(const PublicKey& pk);
std::string serialize_private_key(const PrivateKey& sk);
std::string serialize_ciphertext(const Ciphertext& ct);

PublicKey parse_public_key(std::string_view text);
// The profile named by a key file, read before the rest is parsed.
std::string key_profile_name(std::string_view text);
// The field gives the element degree for the cached non-squares.
PrivateKey parse_private_key(std::string_view text, const NumberField& field);
Ciphertext parse_ciphertext(std::string_view text, const PublicKey& pk, const NumberField& field);

}  // namespace rabin_nf
