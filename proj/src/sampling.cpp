#include "ellcomb/sampling.hpp"

#include <numbers>

#include "ellcomb/errors.hpp"

namespace ellcomb {

Complex Rng::annulus(double rmin, double rmax) {
  const double r = uniform(rmin, rmax);
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, phase);
}

EllipticParams sample_elliptic_params(Rng& rng, long lo, long hi, const SamplingPolicy& policy) {
  for (int attempt = 0; attempt < policy.max_retries; ++attempt) {
    const Complex p = rng.annulus(policy.p_min, policy.p_max);
    const Complex q = rng.annulus(policy.r_min, policy.r_max);
    const Complex a = rng.annulus(policy.r_min, policy.r_max);
    const Complex b = rng.annulus(policy.r_min, policy.r_max);
    try {
      EllipticParams params = EllipticParams::make(a, b, q, p, policy.guard);
      check_genericity(params, lo, hi);
      return params;
    } catch (const DegenerateParameters&) {
    }
  }
  throw DegenerateParameters("sample_elliptic_params: no generic parameters after retries");
}

}  // namespace ellcomb
