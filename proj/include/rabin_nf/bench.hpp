#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rabin_nf/random.hpp"

namespace rabin_nf {

struct TimingStats {
  std::vector<double> samples_ms;
  double median_ms = 0;
  double mean_ms = 0;
};

// Median and mean of an odd-length sample.
TimingStats summarize(std::vector<double> samples_ms);

struct ProfileTimings {
  std::string profile;
  int degree = 0;
  unsigned long prime_bits = 0;  // of the benchmarked key's p
  TimingStats keygen;
  TimingStats encrypt;
  TimingStats decrypt;
  // Two-power exponent of p^f - 1 and q^f - 1.
  unsigned long s_p = 0;
  unsigned long s_q = 0;
  // Operations per timed sample; sub-millisecond operations are batched.
  std::size_t encrypt_batch = 1;
  std::size_t decrypt_batch = 1;
};

struct ProfileRatios {
  std::string profile;
  double keygen = 0;
  double encrypt = 0;
  double decrypt = 0;
  // Cost model for decryption relative to d = 1: d^2 per ring
  // multiplication times d for the exponent length.
  double predicted_per_multiplication = 0;
  double predicted_exponent_length = 0;
  double predicted_decrypt = 0;
};

struct BenchReport {
  unsigned long bits = 0;
  std::size_t reps = 0;
  std::vector<ProfileTimings> profiles;
  std::vector<ProfileRatios> ratios;  // vs "classical", same bit size
};

struct BenchConfig {
  std::vector<std::string> profiles{"classical", "gaussian", "zeta7-cubic"};
  unsigned long bits = 512;  // per prime: 256, 512 or 1024
  std::size_t reps = 11;     // odd, >= 11
};

inline constexpr std::size_t kMinBenchReps = 11;

// Single-threaded. Per profile: R timed key generations, then R timed
// encryptions and decryptions of random full-capacity messages under one
// key. Untimed warmup calls size the batch each encryption or decryption
// sample is averaged over. Repetitions alternate between the profiles.
// Throws kContractViolation for a bad configuration.
BenchReport run_bench(const BenchConfig& config, RandomSource& rng);

// Pure: ratios of medians against the "classical" entry; empty without one.
std::vector<ProfileRatios> compute_ratios(const std::vector<ProfileTimings>& timings);

std::string format_report_text(const BenchReport& report);
// One "bench key=value ..." line per profile and per ratio row.
std::string format_report_lines(const BenchReport& report);

}  // namespace rabin_nf
