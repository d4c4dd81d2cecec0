#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdeform/ext_real.hpp"

namespace qdeform {

struct SampleDomain {
  double q_lo = -2.0;
  double q_hi = 3.0;
  double x_lo = -3.0;
  double x_hi = 3.0;
  double exclusion = 1e-6;  // collar kept clear of cutoff borders, poles and zeros
  std::size_t count = 10000;
  std::size_t calc_count = 1000;
  std::uint64_t seed = 42;
};

// Counter-based generator: output i is a SplitMix64 finalizer applied to seed + i*golden.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform(double lo, double hi);  // 53-bit resolution on [lo, hi)

 private:
  std::uint64_t state_;
};

struct Counterexample {
  std::vector<double> point;
  ExtReal residual;
};

struct LawReport {
  std::string law;
  std::string scope;
  double tolerance = 0.0;
  bool expect_counterexample = false;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t skips = 0;
  double max_residual = 0.0;
  std::map<std::string, std::size_t> skip_reasons;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return expect_counterexample ? failures > 0 : failures == 0; }
  void record(const std::vector<double>& point, const ExtReal& residual);
  void skip(const std::string& reason);
};

struct VerifyResult {
  std::string suite;
  SampleDomain domain;
  std::vector<LawReport> laws;

  bool passed() const;
  const LawReport* find(const std::string& law, const std::string& scope) const;
};

VerifyResult verify_qfun(const SampleDomain& dom);
VerifyResult verify_arith(const SampleDomain& dom);
VerifyResult verify_calc(const SampleDomain& dom);
VerifyResult verify_entropy(const SampleDomain& dom);
VerifyResult verify_all(const SampleDomain& dom);

// suite: qfun | arith | calc | entropy | all
VerifyResult verify_suite(const std::string& suite, const SampleDomain& dom);

// Stable key order; identical input gives byte-identical output.
std::string report_json(const VerifyResult& result);

}  // namespace qdeform
