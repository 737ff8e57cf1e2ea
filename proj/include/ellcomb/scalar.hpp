#pragma once

#include <algorithm>
#include <concepts>
#include <string>

#include "ellcomb/errors.hpp"
#include "ellcomb/exact_scalar.hpp"
#include "ellcomb/numeric.hpp"

namespace ellcomb {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar zero() { return ExactScalar(0); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar from_integer(long n) { return ExactScalar(n); }
  static bool is_zero(const ExactScalar& x) { return x.is_zero(); }
  static bool distinct(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
  static std::string describe(const ExactScalar& x) { return x.to_string(); }
};

// Distinctness guard for numeric values: |x - y| >= 1e-8 * max(1, |x|, |y|).
inline constexpr double kDistinctnessGuard = 1e-8;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return 0.0; }
  static Complex one() { return 1.0; }
  static Complex from_integer(long n) { return static_cast<double>(n); }
  static bool is_zero(const Complex& x) { return x == 0.0; }
  static bool distinct(const Complex& x, const Complex& y) {
    return std::abs(x - y) >= kDistinctnessGuard * std::max({1.0, std::abs(x), std::abs(y)});
  }
  static std::string describe(const Complex& x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  }
};

template <class S>
concept ScalarField = requires(S a, S b, long n) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
  { ScalarTraits<S>::one() } -> std::convertible_to<S>;
  { ScalarTraits<S>::from_integer(n) } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<S>::distinct(a, b) } -> std::convertible_to<bool>;
};

// Division that refuses a zero-tested divisor in either realization.
template <ScalarField S>
S checked_div(const S& x, const S& y) {
  if (ScalarTraits<S>::is_zero(y)) throw DivisionByZero("division by a zero scalar");
  return x / y;
}

template <ScalarField S>
S power(S base, unsigned e) {
  S result = ScalarTraits<S>::one();
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace ellcomb
