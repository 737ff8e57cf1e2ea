#include "ellcomb/elliptic_hp.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "ellcomb/errors.hpp"
#include "elliptic_formulas.hpp"

namespace ellcomb {

namespace {

// Tail factors below this modulus are 1 to quad precision.
constexpr double kQuadEps = 1e-36;
constexpr int kMaxFactors = 100000;

}  // namespace

ComplexHP theta_hp(const ComplexHP& x, const ComplexHP& p) {
  const ComplexHP one(1);
  if (p == ComplexHP(0)) return one - x;
  const double pmod = modulus(p);
  if (!(pmod < 1.0)) throw DomainError("theta: nome must satisfy |p| < 1");
  if (x == ComplexHP(0)) throw DomainError("theta: argument must be nonzero");
  const double xmod = modulus(x);
  const ComplexHP inv = one / x;
  ComplexHP result = one;
  ComplexHP pj = one;
  double pjmod = 1.0;
  for (int j = 0; j < kMaxFactors; ++j) {
    if (pjmod * xmod < kQuadEps && pjmod * pmod / xmod < kQuadEps) break;
    result *= (one - pj * x) * (one - pj * p * inv);
    pj *= p;
    pjmod *= pmod;
  }
  return result;
}

EllipticHP::EllipticHP(const EllipticParams& params)
    : params_(params),
      a_(to_hp(params.a())),
      b_(to_hp(params.b())),
      q_(to_hp(params.q())),
      p_(to_hp(params.p())),
      cache_(std::make_shared<Cache>()) {}

EllipticHP EllipticHP::shifted(long alpha, long beta) const {
  EllipticHP r = *this;
  r.a_ = a_ * ipow(q_, alpha);
  r.b_ = b_ * ipow(q_, beta);
  std::ostringstream os;
  os << "aq^" << alpha << ",bq^" << beta;
  r.shift_ = shift_.empty() ? os.str() : shift_ + ";" + os.str();
  r.cache_ = std::make_shared<Cache>();
  return r;
}

EllipticHP EllipticHP::inverted() const {
  if (level() == Degeneration::a_zero || level() == Degeneration::b_zero)
    throw DegenerateParameters("parameter inversion a -> 1/a is undefined once a -> 0");
  EllipticHP r = *this;
  r.a_ = ComplexHP(1) / a_;
  r.b_ = b_ / a_;
  r.shift_ = shift_.empty() ? "1/a,b/a" : shift_ + ";1/a,b/a";
  r.cache_ = std::make_shared<Cache>();
  return r;
}

ComplexHP EllipticHP::factor(const ComplexHP& x, const char* label, long index, bool guarded) const {
  const bool constant = std::strchr(label, '^') == nullptr;
  const auto it = constant ? cache_->constants.find(label) : cache_->constants.end();
  ComplexHP v;
  if (it != cache_->constants.end()) {
    v = it->second;
  } else {
    v = level() == Degeneration::none ? theta_hp(x, p_) : ComplexHP(1) - x;
    if (constant) cache_->constants.emplace(label, v);
  }
  if (guarded && !(modulus(v) >= params_.min_denominator())) {
    std::ostringstream os;
    os << "denominator factor theta(" << label << ") at index " << index << " below guard "
       << params_.min_denominator() << (shift_.empty() ? "" : " with " + shift_) << " [" << params_.describe()
       << "]";
    throw DegenerateParameters(os.str());
  }
  return v;
}

ComplexHP EllipticHP::number(long z) const {
  const auto it = cache_->numbers.find(z);
  if (it != cache_->numbers.end()) return it->second;
  const ComplexHP v = detail::number_from_power(
      ipow(q_, z), a_, b_, q_, level(), z,
      [this](const ComplexHP& x, const char* label, long i, bool guarded) { return factor(x, label, i, guarded); });
  cache_->numbers.emplace(z, v);
  return v;
}

ComplexHP EllipticHP::weight(long k) const {
  const auto it = cache_->weights.find(k);
  if (it != cache_->weights.end()) return it->second;
  const ComplexHP v = detail::weight_from_power(
      ipow(q_, k), a_, b_, q_, level(), k,
      [this](const ComplexHP& x, const char* label, long i, bool guarded) { return factor(x, label, i, guarded); });
  cache_->weights.emplace(k, v);
  return v;
}

}  // namespace ellcomb
