#pragma once

#include <span>

#include "ellcomb/numeric.hpp"

namespace ellcomb {

// Truncation of the theta product. `terms` is the minimum number of factor
// pairs; evaluation continues past it until both tail factors p^j x and
// p^(j+1)/x are below target_eps in modulus.
struct ThetaPolicy {
  int terms = 24;
  double target_eps = 1e-16;

  // J = max(24, ceil(ln(eps) / ln|p|)).
  static ThetaPolicy for_nome(Complex p, double eps = 1e-16);
};

// Modified Jacobi theta function
//   theta(x; p) = prod_{j >= 0} (1 - p^j x)(1 - p^(j+1) / x).
// At p = 0 this is exactly 1 - x (and x = 0 is then admissible).
// Throws DomainError for |p| >= 1, for x = 0 when p != 0, and when the
// policy's order is below ceil(ln(eps)/ln|p|).
Complex theta(Complex x, Complex p, const ThetaPolicy& policy);
Complex theta(Complex x, Complex p);

// theta(x_1, ..., x_l; p) = prod theta(x_i; p); the empty product is 1.
Complex theta_multi(std::span<const Complex> xs, Complex p, const ThetaPolicy& policy);
Complex theta_multi(std::initializer_list<Complex> xs, Complex p);

}  // namespace ellcomb
