#pragma once

#include <string>

#include "ellcomb/numeric.hpp"
#include "ellcomb/theta.hpp"

namespace ellcomb {

// Which closed form evaluates the elliptic quantities. The limits are taken
// in the fixed order p -> 0, then a -> 0, then b -> 0.
enum class Degeneration {
  none,    // full theta quotients
  p_zero,  // theta(x; 0) = 1 - x
  a_zero,  // p = 0 and a = 0
  b_zero,  // p = 0, a = 0 and b = 0: the q-analogue
};

std::string to_string(Degeneration d);

// The parameters (a, b, q, p) of elliptic numbers and weights.
class EllipticParams {
 public:
  // Validates |p| < 1 and a, b, q != 0. The degeneration level is inferred:
  // p = 0 selects the rational form, additionally a = 0 the a-limit and
  // additionally b = 0 the q-limit. Any other zero parameter is rejected.
  static EllipticParams make(Complex a, Complex b, Complex q, Complex p, double min_denominator = 1e-12);

  // Same numbers evaluated by the closed form of a degeneration level
  // (a and b are zeroed as the level requires).
  EllipticParams degenerate(Degeneration level) const;

  // (a q^alpha, b q^beta, q, p).
  EllipticParams shifted(long alpha, long beta) const;
  // (1/a, b/a, q, p). Undefined once a has been sent to 0.
  EllipticParams inverted() const;
  // (p a, b, q, p) and (a, p b, q, p): the multiplicative periods.
  EllipticParams with_a(Complex a) const;
  EllipticParams with_b(Complex b) const;
  EllipticParams with_min_denominator(double guard) const;

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex q() const { return q_; }
  Complex p() const { return p_; }
  double min_denominator() const { return min_denominator_; }
  Degeneration level() const { return level_; }
  const ThetaPolicy& policy() const { return policy_; }

  std::string describe() const;

 private:
  EllipticParams() = default;

  Complex a_ = 0.0, b_ = 0.0, q_ = 0.0, p_ = 0.0;
  double min_denominator_ = 1e-12;
  Degeneration level_ = Degeneration::none;
  ThetaPolicy policy_;
};

// [z]_{a,b;q,p} = theta(q^z, a q^z, b q, a q / b; p) / theta(q, a q, b q^z, a q^z / b; p).
// Throws DegenerateParameters naming the offending denominator factor when
// its modulus is below params.min_denominator().
Complex elliptic_number(long z, const EllipticParams& params);
// Real z through the principal branch of q^z.
Complex elliptic_number_real(double z, const EllipticParams& params);
// Elliptic number for (a q^alpha, b q^beta).
Complex elliptic_number_shifted(long z, long alpha, long beta, const EllipticParams& params);

// W_{a,b;q,p}(k) = theta(a q^(2k+1), b, b q, a/b, a q/b; p)
//                  / theta(a q, b q^k, b q^(k+1), a q^k/b, a q^(k+1)/b; p) * q^k.
Complex elliptic_weight(long k, const EllipticParams& params);

// Checks every guarded denominator of [z] and W(z) for z in [lo, hi].
// Throws DegenerateParameters on the first failure.
void check_genericity(const EllipticParams& params, long lo, long hi);

}  // namespace ellcomb
