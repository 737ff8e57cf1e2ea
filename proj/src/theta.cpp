#include "ellcomb/theta.hpp"

#include <cmath>

#include "ellcomb/errors.hpp"

namespace ellcomb {

namespace {

constexpr int kMaxFactors = 100000;

int required_terms(Complex p, double eps) {
  const double mod = std::abs(p);
  if (mod == 0.0) return 1;
  return static_cast<int>(std::ceil(std::log(eps) / std::log(mod)));
}

}  // namespace

ThetaPolicy ThetaPolicy::for_nome(Complex p, double eps) {
  if (std::abs(p) >= 1.0) throw DomainError("theta: nome must satisfy |p| < 1");
  return ThetaPolicy{std::max(24, required_terms(p, eps)), eps};
}

Complex theta(Complex x, Complex p, const ThetaPolicy& policy) {
  if (!(std::abs(p) < 1.0)) throw DomainError("theta: nome must satisfy |p| < 1");
  if (p == 0.0) return 1.0 - x;
  if (x == 0.0) throw DomainError("theta: argument must be nonzero");
  if (policy.terms < required_terms(p, policy.target_eps))
    throw DomainError("theta: truncation order below ceil(ln(eps)/ln|p|)");

  const Complex inv = 1.0 / x;
  Complex result = 1.0;
  Complex pj = 1.0;  // p^j
  for (int j = 0; j < kMaxFactors; ++j) {
    const Complex a = pj * x;
    const Complex b = pj * p * inv;
    if (j >= policy.terms && std::abs(a) < policy.target_eps && std::abs(b) < policy.target_eps) break;
    result *= (1.0 - a) * (1.0 - b);
    pj *= p;
  }
  return result;
}

Complex theta(Complex x, Complex p) { return theta(x, p, ThetaPolicy::for_nome(p)); }

Complex theta_multi(std::span<const Complex> xs, Complex p, const ThetaPolicy& policy) {
  Complex result = 1.0;
  for (Complex x : xs) result *= theta(x, p, policy);
  return result;
}

Complex theta_multi(std::initializer_list<Complex> xs, Complex p) {
  const ThetaPolicy policy = ThetaPolicy::for_nome(p);
  return theta_multi(std::span<const Complex>(xs.begin(), xs.size()), p, policy);
}

}  // namespace ellcomb
