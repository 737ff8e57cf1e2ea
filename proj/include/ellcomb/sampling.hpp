#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/numeric.hpp"

namespace ellcomb {

// Seeded generator with platform-independent derived distributions
// (std::uniform_*_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
    return lo + static_cast<long>(engine_() % span);
  }
  // Modulus uniform in [rmin, rmax], phase uniform in [0, 2 pi).
  Complex annulus(double rmin, double rmax);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Default sampling policy for generic elliptic parameters: |p| in [0.05, 0.5],
// q, a, b on the annulus 0.4 <= |.| <= 0.9, all with random phase.
struct SamplingPolicy {
  double p_min = 0.05, p_max = 0.5;
  double r_min = 0.4, r_max = 0.9;
  double guard = 1e-6;  // min_denominator carried by sampled parameters
  int max_retries = 100;
};

// Draws parameters whose guarded denominators of [z] and W(z) have modulus
// >= policy.guard for all z in [lo, hi]; resamples up to max_retries times.
EllipticParams sample_elliptic_params(Rng& rng, long lo, long hi, const SamplingPolicy& policy = {});

// Runs body(params) on freshly sampled parameters, resampling whenever the
// body reports DegenerateParameters or DegenerateSequence.
template <class Body>
auto with_generic_params(Rng& rng, long lo, long hi, Body&& body, const SamplingPolicy& policy = {}) {
  for (int attempt = 0;; ++attempt) {
    const EllipticParams params = sample_elliptic_params(rng, lo, hi, policy);
    try {
      return body(params);
    } catch (const DegenerateParameters&) {
      if (attempt + 1 >= policy.max_retries) throw;
    } catch (const DegenerateSequence&) {
      if (attempt + 1 >= policy.max_retries) throw;
    }
  }
}

}  // namespace ellcomb
