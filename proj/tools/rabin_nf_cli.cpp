// rabin-nf: key generation, encryption, decryption, attacks and benchmarks
// for the Rabin cryptosystem over number fields.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rabin_nf/attacks.hpp"
#include "rabin_nf/bench.hpp"
#include "rabin_nf/error.hpp"
#include "rabin_nf/keygen.hpp"
#include "rabin_nf/scheme.hpp"
#include "rabin_nf/serialize.hpp"

namespace {

using namespace rabin_nf;

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitUnknownProfile = 3,
  kExitMalformedInput = 4,
  kExitUnsupportedVersion = 5,
  kExitAccidentalFactor = 6,
  kExitAttackFailed = 7,
  kExitCapacity = 8,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownProfile:
      return kExitUnknownProfile;
    case ErrorCode::kParseError:
    case ErrorCode::kMalformedCiphertext:
    case ErrorCode::kMalformedIdeal:
      return kExitMalformedInput;
    case ErrorCode::kUnsupportedVersion:
      return kExitUnsupportedVersion;
    case ErrorCode::kAccidentalFactor:
      return kExitAccidentalFactor;
    case ErrorCode::kAttackInapplicable:
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kOutOfDeskScale:
      return kExitAttackFailed;
    case ErrorCode::kCapacityExceeded:
      return kExitCapacity;
    default:
      return kExitFailure;
  }
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_all(const std::string& path, std::string_view data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// Non-cryptographic unless --entropy is given.
std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed, bool entropy) {
  // A seed gives reproducible runs; anything else uses system entropy.
  if (seed && !entropy) return std::make_unique<DeterministicRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

RingElement parse_element_arg(const std::string& text, const BigInt& modulus,
                              const NumberField& field) {
  return field.element(split_decimal(text), modulus);
}

struct Options {
  // keygen
  std::string profile;
  std::optional<unsigned long> lambda;
  std::optional<unsigned long> bits;
  std::string out_prefix = "key";
  std::optional<std::uint64_t> seed;
  bool entropy = false;
  // encrypt / decrypt
  std::string key_path;
  std::string in_path = "-";
  std::string out_path = "-";
  // attacks
  std::string n;
  std::string h;
  std::string hnf_path;
  std::string ideal;
  std::string m1, m2;
  std::vector<std::string> generators;
  std::size_t rounds = 8;
  // bench
  std::vector<std::string> bench_profiles{"classical", "gaussian", "zeta7-cubic"};
  unsigned long bench_bits = 512;
  std::size_t reps = 11;
  bool machine_only = false;
};

int cmd_profiles() {
  for (const auto& p : builtin_profiles()) {
    std::cout << format_catalog_entry(p) << "\n";
  }
  return kExitOk;
}

int cmd_keygen(const Options& o) {
  const FieldProfile& profile = find_profile(o.profile);
  auto rng = make_rng(o.seed, o.entropy);
  KeyPair key = o.bits ? keygen_with_prime_bits(profile, *o.bits, *rng)
                       : keygen(profile, o.lambda.value_or(16), *rng);
  write_all(o.out_prefix + ".pk", serialize_public_key(key.pub));
  write_all(o.out_prefix + ".sk", serialize_private_key(key.priv));
  std::cerr << "wrote " << o.out_prefix << ".pk and " << o.out_prefix << ".sk ("
            << bit_length(key.pub.n) << "-bit N)\n";
  return kExitOk;
}

int cmd_encrypt(const Options& o) {
  PublicKey pk = parse_public_key(read_all(o.key_path));
  const NumberField& field = find_profile(pk.profile).field;
  std::string raw = read_all(o.in_path);
  std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
  Ciphertext ct = encrypt(pk, encode(bytes, pk.n, field), field);
  write_all(o.out_path, serialize_ciphertext(ct));
  return kExitOk;
}

int cmd_decrypt(const Options& o) {
  std::string sk_text = read_all(o.key_path);
  const NumberField& field = find_profile(key_profile_name(sk_text)).field;
  PrivateKey sk = parse_private_key(sk_text, field);
  PublicKey pk = sk.public_key();
  Ciphertext ct = parse_ciphertext(read_all(o.in_path), pk, field);
  std::vector<std::uint8_t> bytes = decode(decrypt(sk, ct, pk, field), field);
  write_all(o.out_path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  return kExitOk;
}

int cmd_attack_unequal(const Options& o) {
  const NumberField& field = find_profile(o.profile).field;
  BigInt n;
  attack::IdealDesc ideal;
  if (!o.ideal.empty()) {
    // "N,h0,h1,...": the rational generator, then h(theta)
    std::vector<BigInt> values = split_decimal(o.ideal);
    if (values.size() < 2) fail(ErrorCode::kMalformedIdeal, "--ideal needs N and at least one coefficient");
    n = values.front();
    IntPoly h(values.begin() + 1, values.end());
    trim(h);
    if (!o.n.empty() && parse_bigint(o.n) != n) fail(ErrorCode::kMalformedIdeal, "--n disagrees with --ideal");
    ideal = attack::GeneratorIdeal{n, h};
  } else {
    if (o.n.empty()) fail(ErrorCode::kMalformedIdeal, "--n is required with --hpoly or --hnf");
    n = parse_bigint(o.n);
    if (!o.hnf_path.empty()) {
      ideal = attack::parse_hnf(read_all(o.hnf_path));
    } else if (!o.h.empty()) {
      ideal = attack::GeneratorIdeal{n, parse_poly(o.h)};
    } else {
      fail(ErrorCode::kMalformedIdeal, "give --ideal, --hpoly or --hnf");
    }
  }
  auto [a, b] = attack::factor_unequal_degrees(n, ideal, field);
  std::cout << "factors " << a << " " << b << "\n";
  return kExitOk;
}

int cmd_attack_roots(const Options& o) {
  const NumberField& field = find_profile(o.profile).field;
  BigInt n = parse_bigint(o.n);
  auto [a, b] = attack::factor_from_roots(n, parse_element_arg(o.m1, n, field),
                                          parse_element_arg(o.m2, n, field), field);
  std::cout << "factors " << a << " " << b << "\n";
  return kExitOk;
}

int cmd_attack_generators(const Options& o) {
  BigInt n = parse_bigint(o.n);
  std::vector<IntPoly> gens;
  for (const auto& g : o.generators) gens.push_back(parse_poly(g));
  auto factor = attack::factor_from_generator_gcd(gens, n);
  if (!factor) {
    std::cerr << "error: no generator content shares a factor with N\n";
    return kExitAttackFailed;
  }
  std::cout << "factors " << *factor << " " << BigInt(n / *factor) << "\n";
  return kExitOk;
}

int cmd_attack_quadratic(const Options& o) {
  BigInt n = parse_bigint(o.n);
  auto rng = make_rng(o.seed, o.entropy);
  auto result = attack::quadratic_reduction(n, attack::exact_oracle(), o.rounds, *rng);
  if (!result.factor) {
    std::cerr << "error: no factor after " << result.iterations << " rounds\n";
    return kExitAttackFailed;
  }
  std::cout << "factors " << *result.factor << " " << BigInt(n / *result.factor) << "\n";
  std::cout << "rounds " << result.iterations << " route "
            << attack::reduction_route_name(*result.route) << "\n";
  return kExitOk;
}

int cmd_bench(const Options& o) {
  BenchConfig config;
  config.profiles = o.bench_profiles;
  config.bits = o.bench_bits;
  config.reps = o.reps;
  auto rng = make_rng(o.seed, o.entropy);
  BenchReport report = run_bench(config, *rng);
  if (!o.machine_only) std::cout << format_report_text(report) << "\n";
  std::cout << format_report_lines(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Rabin cryptosystem over number fields"};
  app.require_subcommand(1);

  auto add_rng_flags = [&](CLI::App* cmd) {
    auto* seed_opt = cmd->add_option("--seed", o.seed, "Reproducible, non-cryptographic generator seed");
    cmd->add_flag("--entropy", o.entropy, "System entropy source (the default)")->excludes(seed_opt);
  };

  app.add_subcommand("profiles", "List the built-in field profiles");

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--profile", o.profile, "Field profile")->required();
  auto* lambda_opt = keygen_cmd->add_option("--lambda", o.lambda, "Security parameter (default 16)");
  keygen_cmd->add_option("--bits", o.bits, "Exact bit size per prime (at least 40)")->excludes(lambda_opt);
  keygen_cmd->add_option("--out", o.out_prefix, "Output prefix for <prefix>.pk and <prefix>.sk");
  add_rng_flags(keygen_cmd);

  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message file");
  encrypt_cmd->add_option("--pk", o.key_path, "Public key file")->required();
  encrypt_cmd->add_option("--in", o.in_path, "Message file, '-' for stdin");
  encrypt_cmd->add_option("--out", o.out_path, "Ciphertext file, '-' for stdout");

  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt_cmd->add_option("--sk", o.key_path, "Private key file")->required();
  decrypt_cmd->add_option("--in", o.in_path, "Ciphertext file, '-' for stdin");
  decrypt_cmd->add_option("--out", o.out_path, "Message file, '-' for stdout");

  auto* attack_cmd = app.add_subcommand("attack", "Factor badly chosen moduli");
  attack_cmd->require_subcommand(1);
  auto* unequal = attack_cmd->add_subcommand("unequal-degrees", "PQ with residue degrees f_p != f_q");
  unequal->add_option("--profile", o.profile, "Field profile")->required();
  unequal->add_option("--n", o.n, "N = pq");
  auto* h_opt = unequal->add_option("--hpoly", o.h, "Second generator h(theta), coefficients c0,c1,...");
  auto* hnf_opt =
      unequal->add_option("--hnf", o.hnf_path, "HNF basis file, one row per line")->excludes(h_opt);
  unequal->add_option("--ideal", o.ideal, "Ideal (N, h(theta)) as N,c0,c1,...")
      ->excludes(h_opt)
      ->excludes(hnf_opt);
  auto* roots = attack_cmd->add_subcommand("roots", "Two non-antipodal square roots of one square");
  roots->add_option("--profile", o.profile, "Field profile")->required();
  roots->add_option("--n", o.n, "N = pq")->required();
  roots->add_option("--m1", o.m1, "First root, coefficients c0,c1,...")->required();
  roots->add_option("--m2", o.m2, "Second root, coefficients c0,c1,...")->required();
  auto* gens = attack_cmd->add_subcommand("generator-gcd", "Content of published ideal generators");
  gens->add_option("--n", o.n, "N = pq")->required();
  gens->add_option("--generator", o.generators, "Generator coefficients c0,c1,... (repeatable)")
      ->required();
  auto* quad = attack_cmd->add_subcommand("quadratic", "Reduction to ideal factoring in Q(sqrt delta)");
  quad->add_option("--n", o.n, "Odd semiprime N <= 2^20")->required();
  quad->add_option("--k", o.rounds, "Oracle rounds");
  add_rng_flags(quad);

  auto* bench_cmd = app.add_subcommand("bench", "Time keygen, encryption and decryption");
  bench_cmd->add_option("--profiles", o.bench_profiles, "Profiles to compare")->delimiter(',');
  bench_cmd->add_option("--bits", o.bench_bits, "Bits per prime")
      ->check(CLI::IsMember({256ul, 512ul, 1024ul}));
  bench_cmd->add_option("--reps", o.reps, "Repetitions (odd, >= 11)");
  bench_cmd->add_flag("--machine", o.machine_only, "Only the machine-readable lines");
  add_rng_flags(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("profiles")) return cmd_profiles();
    if (app.got_subcommand(keygen_cmd)) return cmd_keygen(o);
    if (app.got_subcommand(encrypt_cmd)) return cmd_encrypt(o);
    if (app.got_subcommand(decrypt_cmd)) return cmd_decrypt(o);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(o);
    if (unequal->parsed()) return cmd_attack_unequal(o);
    if (roots->parsed()) return cmd_attack_roots(o);
    if (gens->parsed()) return cmd_attack_generators(o);
    if (quad->parsed()) return cmd_attack_quadratic(o);
  } catch (const AccidentalFactorError& e) {
    std::cerr << "accidental factor: " << e.what() << "\n";
    std::cout << "factor " << e.factor() << "\n";
    return kExitAccidentalFactor;
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
