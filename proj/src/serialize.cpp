#include "rabin_nf/serialize.hpp"

#include <vector>

#include "rabin_nf/error.hpp"

namespace rabin_nf {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

void check_header(std::string_view line, std::string_view kind) {
  std::string prefix = "rabin-nf " + std::string(kind) + " ";
  if (line.substr(0, prefix.size()) != prefix) {
    fail(ErrorCode::kParseError, "expected a '" + prefix + "v1' header");
  }
  if (line.substr(prefix.size()) != "v1") {
    fail(ErrorCode::kUnsupportedVersion,
         "unsupported " + std::string(kind) + " version '" + std::string(line.substr(prefix.size())) + "'");
  }
}

std::string_view value_of(std::string_view line, std::string_view key) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key || line[key.size()] != '=') {
    fail(ErrorCode::kParseError, "expected '" + std::string(key) + "=...'");
  }
  return line.substr(key.size() + 1);
}

RingElement parse_element(std::string_view text, const BigInt& modulus, const NumberField& field) {
  std::vector<BigInt> coeffs = split_decimal(text);
  if (coeffs.size() != static_cast<std::size_t>(field.degree())) {
    fail(ErrorCode::kParseError, "element has the wrong number of coefficients");
  }
  for (const auto& c : coeffs) {
    if (c < 0 || c >= modulus) fail(ErrorCode::kParseError, "coefficient out of range");
  }
  return RingElement{std::move(coeffs), modulus};
}

BigInt parse_positive(std::string_view text) {
  BigInt v = parse_bigint(text);
  if (v < 2) fail(ErrorCode::kParseError, "expected an integer >= 2");
  return v;
}

std::vector<std::string_view> body_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n') fail(ErrorCode::kParseError, "truncated file");
  return split_lines(text);
}

}  // namespace

std::string serialize_public_key(const PublicKey& pk) {
  return "rabin-nf pk v1\nprofile=" + pk.profile + "\nN=" + to_decimal(pk.n) + "\n";
}

std::string serialize_private_key(const PrivateKey& sk) {
  std::string out = "rabin-nf sk v1\nprofile=" + sk.profile + "\nN=" + to_decimal(sk.n) +
                    "\np=" + to_decimal(sk.p) + "\nq=" + to_decimal(sk.q) + "\n";
  if (sk.nonsquare_p) out += "ns_p=" + join_decimal(sk.nonsquare_p->coeffs) + "\n";
  if (sk.nonsquare_q) out += "ns_q=" + join_decimal(sk.nonsquare_q->coeffs) + "\n";
  return out;
}

std::string serialize_ciphertext(const Ciphertext& ct) {
  return "rabin-nf ct v1\n" + join_decimal(ct.c.coeffs) + "\nb0=" + std::to_string(ct.b0) +
         " b1=" + std::to_string(ct.b1) + "\n";
}

PublicKey parse_public_key(std::string_view text) {
  auto lines = body_lines(text);
  if (lines.empty()) fail(ErrorCode::kParseError, "empty public key");
  check_header(lines[0], "pk");
  if (lines.size() != 3) fail(ErrorCode::kParseError, "public key must have exactly 3 lines");
  PublicKey pk;
  pk.profile = std::string(value_of(lines[1], "profile"));
  if (pk.profile.empty()) fail(ErrorCode::kParseError, "empty profile name");
  pk.n = parse_positive(value_of(lines[2], "N"));
  return pk;
}

std::string key_profile_name(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) fail(ErrorCode::kParseError, "truncated key file");
  if (lines[0].substr(0, 12) != "rabin-nf pk " && lines[0].substr(0, 12) != "rabin-nf sk ") {
    fail(ErrorCode::kParseError, "not a key file");
  }
  std::string name(value_of(lines[1], "profile"));
  if (name.empty()) fail(ErrorCode::kParseError, "empty profile name");
  return name;
}

PrivateKey parse_private_key(std::string_view text, const NumberField& field) {
  auto lines = body_lines(text);
  if (lines.empty()) fail(ErrorCode::kParseError, "empty private key");
  check_header(lines[0], "sk");
  if (lines.size() != 5 && lines.size() != 7) {
    fail(ErrorCode::kParseError, "private key must have 5 or 7 lines");
  }
  PrivateKey sk;
  sk.profile = std::string(value_of(lines[1], "profile"));
  if (sk.profile.empty()) fail(ErrorCode::kParseError, "empty profile name");
  sk.n = parse_positive(value_of(lines[2], "N"));
  sk.p = parse_positive(value_of(lines[3], "p"));
  sk.q = parse_positive(value_of(lines[4], "q"));
  if (sk.p * sk.q != sk.n) fail(ErrorCode::kParseError, "p * q does not equal N");
  if (lines.size() == 7) {
    sk.nonsquare_p = parse_element(value_of(lines[5], "ns_p"), sk.p, field);
    sk.nonsquare_q = parse_element(value_of(lines[6], "ns_q"), sk.q, field);
  }
  return sk;
}

Ciphertext parse_ciphertext(std::string_view text, const PublicKey& pk, const NumberField& field) {
  auto lines = body_lines(text);
  if (lines.empty()) fail(ErrorCode::kParseError, "empty ciphertext");
  check_header(lines[0], "ct");
  if (lines.size() != 3) fail(ErrorCode::kParseError, "ciphertext must have exactly 3 lines");
  Ciphertext ct;
  ct.c = parse_element(lines[1], pk.n, field);
  const std::string_view bits = lines[2];
  if (bits.size() != 9 || bits.substr(0, 3) != "b0=" || bits.substr(4, 4) != " b1=" ||
      (bits[3] != '0' && bits[3] != '1') || (bits[8] != '0' && bits[8] != '1')) {
    fail(ErrorCode::kParseError, "expected 'b0=<0|1> b1=<0|1>'");
  }
  ct.b0 = bits[3] - '0';
  ct.b1 = bits[8] - '0';
  return ct;
}

}  // namespace rabin_nf
