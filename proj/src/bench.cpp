#include "rabin_nf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>

#include "rabin_nf/error.hpp"
#include "rabin_nf/keygen.hpp"
#include "rabin_nf/scheme.hpp"
#include "rabin_nf/sqrt_engine.hpp"

namespace rabin_nf {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& body) {
  auto start = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Repetitions of an operation taking `once_ms` so that a timed batch lasts
// at least kMinBatchMs. The per-call estimate averages kSizingCalls calls,
// which double as warmup.
constexpr double kMinBatchMs = 5.0;
constexpr std::size_t kSizingCalls = 3;

std::size_t batch_size(double once_ms) {
  if (once_ms <= 0) return 1000;
  return std::clamp<std::size_t>(static_cast<std::size_t>(kMinBatchMs / once_ms) + 1, 1, 1000);
}

template <typename F>
double time_per_op_ms(std::size_t batch, F&& body) {
  return time_ms([&] {
           for (std::size_t k = 0; k < batch; ++k) body();
         }) /
         static_cast<double>(batch);
}

std::vector<std::uint8_t> random_bytes(std::size_t count, RandomSource& rng) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng.next_u64());
  return out;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

TimingStats summarize(std::vector<double> samples_ms) {
  require(!samples_ms.empty() && samples_ms.size() % 2 == 1, ErrorCode::kContractViolation,
          "summarize needs an odd number of samples");
  TimingStats out;
  out.mean_ms = std::accumulate(samples_ms.begin(), samples_ms.end(), 0.0) /
                static_cast<double>(samples_ms.size());
  std::vector<double> sorted = samples_ms;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  out.median_ms = sorted[sorted.size() / 2];
  out.samples_ms = std::move(samples_ms);
  return out;
}

std::vector<ProfileRatios> compute_ratios(const std::vector<ProfileTimings>& timings) {
  auto base = std::find_if(timings.begin(), timings.end(),
                           [](const ProfileTimings& t) { return t.profile == "classical"; });
  std::vector<ProfileRatios> out;
  if (base == timings.end()) return out;
  for (const auto& t : timings) {
    ProfileRatios r;
    r.profile = t.profile;
    r.keygen = t.keygen.median_ms / base->keygen.median_ms;
    r.encrypt = t.encrypt.median_ms / base->encrypt.median_ms;
    r.decrypt = t.decrypt.median_ms / base->decrypt.median_ms;
    double d = t.degree;
    r.predicted_per_multiplication = d * d;
    r.predicted_exponent_length = d;
    r.predicted_decrypt = d * d * d;
    out.push_back(std::move(r));
  }
  return out;
}

BenchReport run_bench(const BenchConfig& config, RandomSource& rng) {
  require(config.bits == 256 || config.bits == 512 || config.bits == 1024,
          ErrorCode::kContractViolation, "bench bit size must be 256, 512 or 1024");
  require(config.reps >= kMinBenchReps && config.reps % 2 == 1, ErrorCode::kContractViolation,
          "bench repetitions must be odd and at least 11");
  require(!config.profiles.empty(), ErrorCode::kContractViolation, "no profiles to benchmark");

  BenchReport report;
  report.bits = config.bits;
  report.reps = config.reps;

  // Untimed setup per profile: the key, the messages and the batch sizes.
  struct Subject {
    const FieldProfile* profile;
    KeyPair key;
    std::vector<Plaintext> messages;
    std::vector<Ciphertext> cts;
    std::vector<double> keygen_ms, encrypt_ms, decrypt_ms;
  };
  std::vector<Subject> subjects;
  for (const auto& name : config.profiles) {
    const FieldProfile& profile = find_profile(name);
    const NumberField& field = profile.field;
    Subject s{&profile, keygen_with_prime_bits(profile, config.bits, rng), {}, {}, {}, {}, {}};

    ProfileTimings t;
    t.profile = profile.name;
    t.degree = field.degree();
    t.prime_bits = bit_length(s.key.priv.p);
    BigInt pf, qf;
    mpz_pow_ui(pf.get_mpz_t(), s.key.priv.p.get_mpz_t(), field.degree());
    mpz_pow_ui(qf.get_mpz_t(), s.key.priv.q.get_mpz_t(), field.degree());
    t.s_p = split_two_power(pf - 1).s;
    t.s_q = split_two_power(qf - 1).s;

    const std::size_t capacity = message_capacity(s.key.pub.n, field.degree());
    for (std::size_t i = 0; i <= config.reps; ++i) {
      s.messages.push_back(encode(random_bytes(capacity, rng), s.key.pub.n, field));
      s.cts.push_back(encrypt(s.key.pub, s.messages.back(), field));
    }
    t.encrypt_batch = batch_size(
        time_per_op_ms(kSizingCalls, [&] { (void)encrypt(s.key.pub, s.messages[0], field); }));
    t.decrypt_batch = batch_size(
        time_per_op_ms(kSizingCalls, [&] { (void)decrypt(s.key.priv, s.cts[0], s.key.pub, field); }));
    report.profiles.push_back(std::move(t));
    subjects.push_back(std::move(s));
  }

  // Repetitions run round-robin over the profiles, so that a slow spell of
  // the machine lands on every profile rather than on one.
  for (std::size_t i = 0; i < config.reps; ++i) {
    for (auto& s : subjects) {
      s.keygen_ms.push_back(time_ms([&] { keygen_with_prime_bits(*s.profile, config.bits, rng); }));
    }
  }
  for (std::size_t i = 1; i <= config.reps; ++i) {
    for (std::size_t j = 0; j < subjects.size(); ++j) {
      Subject& s = subjects[j];
      const ProfileTimings& t = report.profiles[j];
      const NumberField& field = s.profile->field;
      Ciphertext ct;
      s.encrypt_ms.push_back(
          time_per_op_ms(t.encrypt_batch, [&] { ct = encrypt(s.key.pub, s.messages[i], field); }));
      require(ct == s.cts[i], ErrorCode::kContractViolation, "bench encryption is not deterministic");
      Plaintext out;
      s.decrypt_ms.push_back(
          time_per_op_ms(t.decrypt_batch, [&] { out = decrypt(s.key.priv, s.cts[i], s.key.pub, field); }));
      require(out == s.messages[i], ErrorCode::kContractViolation, "bench round trip failed");
    }
  }
  for (std::size_t j = 0; j < subjects.size(); ++j) {
    report.profiles[j].keygen = summarize(std::move(subjects[j].keygen_ms));
    report.profiles[j].encrypt = summarize(std::move(subjects[j].encrypt_ms));
    report.profiles[j].decrypt = summarize(std::move(subjects[j].decrypt_ms));
  }
  report.ratios = compute_ratios(report.profiles);
  return report;
}

std::string format_report_text(const BenchReport& report) {
  std::string out = "bit size " + std::to_string(report.bits) + " per prime, " +
                    std::to_string(report.reps) + " repetitions, times in ms (median / mean)\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %2s %5s %21s %21s %21s %4s %4s\n", "profile", "d",
                "bits", "keygen", "encrypt", "decrypt", "s_p", "s_q");
  out += line;
  for (const auto& t : report.profiles) {
    std::snprintf(line, sizeof line,
                  "%-22s %2d %5lu %10.3f /%9.3f %10.4f /%9.4f %10.3f /%9.3f %4lu %4lu\n",
                  t.profile.c_str(), t.degree, t.prime_bits, t.keygen.median_ms,
                  t.keygen.mean_ms, t.encrypt.median_ms, t.encrypt.mean_ms, t.decrypt.median_ms,
                  t.decrypt.mean_ms, t.s_p, t.s_q);
    out += line;
  }
  if (!report.ratios.empty()) {
    out += "\nratios vs classical (medians), predicted decrypt = d^2 per multiplication x d\n";
    std::snprintf(line, sizeof line, "%-22s %9s %9s %9s %10s\n", "profile", "keygen", "encrypt",
                  "decrypt", "predicted");
    out += line;
    for (const auto& r : report.ratios) {
      std::snprintf(line, sizeof line, "%-22s %9.2f %9.2f %9.2f %10.0f\n", r.profile.c_str(),
                    r.keygen, r.encrypt, r.decrypt, r.predicted_decrypt);
      out += line;
    }
  }
  return out;
}

std::string format_report_lines(const BenchReport& report) {
  std::string out;
  for (const auto& t : report.profiles) {
    out += "bench profile=" + t.profile + " bits=" + std::to_string(report.bits) +
           " reps=" + std::to_string(report.reps) + " d=" + std::to_string(t.degree) +
           " keygen_median_ms=" + fmt("%.6f", t.keygen.median_ms) +
           " keygen_mean_ms=" + fmt("%.6f", t.keygen.mean_ms) +
           " encrypt_median_ms=" + fmt("%.6f", t.encrypt.median_ms) +
           " encrypt_mean_ms=" + fmt("%.6f", t.encrypt.mean_ms) +
           " decrypt_median_ms=" + fmt("%.6f", t.decrypt.median_ms) +
           " decrypt_mean_ms=" + fmt("%.6f", t.decrypt.mean_ms) +
           " s_p=" + std::to_string(t.s_p) + " s_q=" + std::to_string(t.s_q) +
           " encrypt_batch=" + std::to_string(t.encrypt_batch) +
           " decrypt_batch=" + std::to_string(t.decrypt_batch) + "\n";
  }
  for (const auto& r : report.ratios) {
    out += "bench-ratio profile=" + r.profile + " bits=" + std::to_string(report.bits) +
           " keygen=" + fmt("%.4f", r.keygen) + " encrypt=" + fmt("%.4f", r.encrypt) +
           " decrypt=" + fmt("%.4f", r.decrypt) +
           " predicted_mul=" + fmt("%.0f", r.predicted_per_multiplication) +
           " predicted_exp=" + fmt("%.0f", r.predicted_exponent_length) +
           " predicted_decrypt=" + fmt("%.0f", r.predicted_decrypt) + "\n";
  }
  return out;
}

}  // namespace rabin_nf
