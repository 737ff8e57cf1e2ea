#pragma once

#include <map>
#include <memory>
#include <string>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/high_precision.hpp"
#include "ellcomb/value_sequence.hpp"

namespace ellcomb {

// Quad-precision theta product; p = 0 gives 1 - x.
ComplexHP theta_hp(const ComplexHP& x, const ComplexHP& p);

// Elliptic numbers and weights in quad precision for parameters given in
// double precision. Shifts and inversions are applied in quad precision, so
// [z]_{aq^2i, bq^i} here is the exact shift of the given a, b. Results are
// memoized; copies share nothing.
class EllipticHP {
 public:
  explicit EllipticHP(const EllipticParams& params);

  // (a q^alpha, b q^beta).
  EllipticHP shifted(long alpha, long beta) const;
  // (1/a, b/a); DegenerateParameters once a has been sent to 0.
  EllipticHP inverted() const;

  ComplexHP number(long z) const;
  ComplexHP weight(long k) const;

  const EllipticParams& params() const { return params_; }
  Degeneration level() const { return params_.level(); }

 private:
  struct Cache {
    std::map<long, ComplexHP> numbers, weights;
    std::map<std::string, ComplexHP> constants;
  };

  ComplexHP factor(const ComplexHP& x, const char* label, long index, bool guarded) const;

  EllipticParams params_;  // describes the unshifted base, for messages and guards
  ComplexHP a_, b_, q_, p_;
  std::string shift_;      // e.g. "aq^4,bq^2", for messages
  std::shared_ptr<Cache> cache_;
};

// a_i = [i] evaluated in quad precision.
inline ValueSequence<ComplexHP> elliptic_sequence_hp(const EllipticHP& e) {
  return ValueSequence<ComplexHP>("elliptic-hp", [e](long i) { return e.number(i); });
}

}  // namespace ellcomb
