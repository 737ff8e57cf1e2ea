#include "ellcomb/elliptic.hpp"

#include <cmath>
#include <sstream>

#include "ellcomb/errors.hpp"
#include "elliptic_formulas.hpp"

namespace ellcomb {

std::string to_string(Degeneration d) {
  switch (d) {
    case Degeneration::none: return "elliptic";
    case Degeneration::p_zero: return "p=0";
    case Degeneration::a_zero: return "p=0,a=0";
    case Degeneration::b_zero: return "p=0,a=0,b=0";
  }
  return "?";
}

EllipticParams EllipticParams::make(Complex a, Complex b, Complex q, Complex p, double min_denominator) {
  if (!(std::abs(p) < 1.0)) throw DomainError("elliptic parameters: |p| must be < 1");
  if (q == 0.0) throw DomainError("elliptic parameters: q must be nonzero");
  if (!(min_denominator > 0.0)) throw DomainError("elliptic parameters: min_denominator must be positive");
  EllipticParams r;
  r.a_ = a;
  r.b_ = b;
  r.q_ = q;
  r.p_ = p;
  r.min_denominator_ = min_denominator;
  r.policy_ = ThetaPolicy::for_nome(p);
  if (p != 0.0) {
    if (a == 0.0 || b == 0.0) throw DomainError("elliptic parameters: a and b must be nonzero when p != 0");
    r.level_ = Degeneration::none;
  } else if (a != 0.0) {
    if (b == 0.0) throw DomainError("elliptic parameters: b = 0 requires a = 0 (limit order p, a, b)");
    r.level_ = Degeneration::p_zero;
  } else {
    r.level_ = b == 0.0 ? Degeneration::b_zero : Degeneration::a_zero;
  }
  return r;
}

EllipticParams EllipticParams::degenerate(Degeneration level) const {
  EllipticParams r = *this;
  if (level == Degeneration::none) return r;
  r.p_ = 0.0;
  r.policy_ = ThetaPolicy::for_nome(0.0);
  if (level == Degeneration::a_zero || level == Degeneration::b_zero) r.a_ = 0.0;
  if (level == Degeneration::b_zero) r.b_ = 0.0;
  r.level_ = level;
  return r;
}

EllipticParams EllipticParams::shifted(long alpha, long beta) const {
  EllipticParams r = *this;
  r.a_ = a_ * ipow(q_, alpha);
  r.b_ = b_ * ipow(q_, beta);
  return r;
}

EllipticParams EllipticParams::inverted() const {
  if (level_ == Degeneration::a_zero || level_ == Degeneration::b_zero)
    throw DegenerateParameters("parameter inversion a -> 1/a is undefined once a -> 0");
  EllipticParams r = *this;
  r.a_ = 1.0 / a_;
  r.b_ = b_ / a_;
  return r;
}

EllipticParams EllipticParams::with_a(Complex a) const {
  return make(a, b_, q_, p_, min_denominator_).degenerate(level_);
}

EllipticParams EllipticParams::with_b(Complex b) const {
  return make(a_, b, q_, p_, min_denominator_).degenerate(level_);
}

EllipticParams EllipticParams::with_min_denominator(double guard) const {
  EllipticParams r = *this;
  r.min_denominator_ = guard;
  return r;
}

std::string EllipticParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "a=" << a_.real() << "," << a_.imag() << " b=" << b_.real() << "," << b_.imag() << " q=" << q_.real()
     << "," << q_.imag() << " p=" << p_.real() << "," << p_.imag() << " level=" << to_string(level_);
  return os.str();
}

namespace {

// Theta (or its p = 0 form) of one factor.
Complex factor(Complex x, const EllipticParams& params) {
  if (params.level() != Degeneration::none) return 1.0 - x;
  return theta(x, params.p(), params.policy());
}

Complex guarded_factor(Complex x, const EllipticParams& params, const char* name, long index) {
  const Complex v = factor(x, params);
  if (!(std::abs(v) >= params.min_denominator())) {
    std::ostringstream os;
    os << "denominator factor theta(" << name << ") at index " << index << " has modulus " << std::abs(v)
       << " below guard " << params.min_denominator() << " [" << params.describe() << "]";
    throw DegenerateParameters(os.str());
  }
  return v;
}

Complex double_factor(Complex x, const char* label, long index, bool guarded, const EllipticParams& params) {
  return guarded ? guarded_factor(x, params, label, index) : factor(x, params);
}

Complex elliptic_from_power(Complex qz, long index, const EllipticParams& params) {
  return detail::number_from_power(qz, params.a(), params.b(), params.q(), params.level(), index,
                                   [&](Complex x, const char* label, long i, bool guarded) {
                                     return double_factor(x, label, i, guarded, params);
                                   });
}

}  // namespace

Complex elliptic_number(long z, const EllipticParams& params) {
  return elliptic_from_power(ipow(params.q(), z), z, params);
}

Complex elliptic_number_real(double z, const EllipticParams& params) {
  const double rounded = std::round(z);
  if (rounded == z && std::abs(z) < 1e9) return elliptic_number(static_cast<long>(rounded), params);
  return elliptic_from_power(std::exp(z * std::log(params.q())), static_cast<long>(z), params);
}

Complex elliptic_number_shifted(long z, long alpha, long beta, const EllipticParams& params) {
  return elliptic_number(z, params.shifted(alpha, beta));
}

Complex elliptic_weight(long k, const EllipticParams& params) {
  return detail::weight_from_power(ipow(params.q(), k), params.a(), params.b(), params.q(), params.level(), k,
                                   [&](Complex x, const char* label, long i, bool guarded) {
                                     return double_factor(x, label, i, guarded, params);
                                   });
}

void check_genericity(const EllipticParams& params, long lo, long hi) {
  for (long z = lo; z <= hi; ++z) {
    (void)elliptic_number(z, params);
    (void)elliptic_weight(z, params);
  }
}

}  // namespace ellcomb
