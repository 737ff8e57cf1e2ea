#pragma once

#include "ellcomb/elliptic.hpp"

// The elliptic number and weight as theta quotients, shared by the double
// and quad-precision evaluators. `f(x, label, index, guarded)` returns the
// theta factor of x (or 1 - x once p = 0) and enforces the denominator guard
// when `guarded` is set. Labels without '^' do not depend on the index.
namespace ellcomb::detail {

template <class C, class Factor>
C number_from_power(const C& qz, const C& a, const C& b, const C& q, Degeneration level, long index, Factor&& f) {
  const C one(1);
  switch (level) {
    case Degeneration::none:
    case Degeneration::p_zero: {
      const C den = f(q, "q", index, true) * f(a * q, "aq", index, true) * f(b * qz, "bq^z", index, true) *
                    f(a * qz / b, "aq^z/b", index, true);
      const C num = f(qz, "q^z", index, false) * f(a * qz, "aq^z", index, false) * f(b * q, "bq", index, false) *
                    f(a * q / b, "aq/b", index, false);
      return num / den;
    }
    case Degeneration::a_zero: {
      const C den = f(q, "q", index, true) * f(b * qz, "bq^z", index, true);
      return (one - qz) * (one - b * q) / den;
    }
    case Degeneration::b_zero:
      return (one - qz) / f(q, "q", index, true);
  }
  return C(0);
}

template <class C, class Factor>
C weight_from_power(const C& qk, const C& a, const C& b, const C& q, Degeneration level, long k, Factor&& f) {
  const C one(1);
  switch (level) {
    case Degeneration::none:
    case Degeneration::p_zero: {
      const C den = f(a * q, "aq", k, true) * f(b * qk, "bq^k", k, true) * f(b * qk * q, "bq^(k+1)", k, true) *
                    f(a * qk / b, "aq^k/b", k, true) * f(a * qk * q / b, "aq^(k+1)/b", k, true);
      const C num = f(a * qk * qk * q, "aq^(2k+1)", k, false) * f(b, "b", k, false) * f(b * q, "bq", k, false) *
                    f(a / b, "a/b", k, false) * f(a * q / b, "aq/b", k, false);
      return num / den * qk;
    }
    case Degeneration::a_zero: {
      const C den = f(b * qk, "bq^k", k, true) * f(b * qk * q, "bq^(k+1)", k, true);
      return (one - b) * (one - b * q) / den * qk;
    }
    case Degeneration::b_zero:
      return qk;
  }
  return C(0);
}

}  // namespace ellcomb::detail
