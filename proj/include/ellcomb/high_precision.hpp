#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <string>

#include "ellcomb/numeric.hpp"
#include "ellcomb/scalar.hpp"

// Quad-precision complex scalars (113-bit mantissa). The explicit-sum and
// divided-difference routes cancel terms far larger than their result, so
// the elliptic families evaluate them, and the thetas feeding them, here.
//
// ComplexWide carries 100 decimal digits. Divided-difference triangles over
// clustered nodes can lose more than quad precision holds; they take quad
// nodes, treat them as exact and run the triangle in ComplexWide.
namespace ellcomb {

using RealHP = boost::multiprecision::cpp_bin_float_quad;
using ComplexHP = boost::multiprecision::cpp_complex_quad;
using RealWide = boost::multiprecision::cpp_bin_float_100;
using ComplexWide = boost::multiprecision::cpp_complex_100;

inline ComplexHP to_hp(Complex z) { return ComplexHP(RealHP(z.real()), RealHP(z.imag())); }

inline ComplexWide to_wide(const ComplexHP& z) {
  return ComplexWide(static_cast<RealWide>(z.real()), static_cast<RealWide>(z.imag()));
}

inline ComplexHP to_hp(const ComplexWide& z) {
  return ComplexHP(static_cast<RealHP>(z.real()), static_cast<RealHP>(z.imag()));
}

inline Complex to_double(const ComplexHP& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline Complex to_double(const ComplexWide& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline double modulus(const ComplexHP& z) { return static_cast<double>(abs(z)); }
inline double modulus(const ComplexWide& z) { return static_cast<double>(abs(z)); }

namespace detail {

template <class C>
struct MultiprecisionTraits {
  static constexpr bool exact = false;
  static C zero() { return C(0); }
  static C one() { return C(1); }
  static C from_integer(long n) { return C(n); }
  static bool is_zero(const C& x) { return x == C(0); }
  static bool distinct(const C& x, const C& y) {
    return modulus(x - y) >= kDistinctnessGuard * std::max({1.0, modulus(x), modulus(y)});
  }
  static std::string describe(const C& x) { return ScalarTraits<Complex>::describe(to_double(x)); }
};

template <class C>
C ipow(C z, long e) {
  if (e < 0) return C(1) / ipow(z, -e);
  C result(1);
  while (e > 0) {
    if (e & 1) result *= z;
    e >>= 1;
    if (e > 0) z *= z;
  }
  return result;
}

}  // namespace detail

template <>
struct ScalarTraits<ComplexHP> : detail::MultiprecisionTraits<ComplexHP> {};
template <>
struct ScalarTraits<ComplexWide> : detail::MultiprecisionTraits<ComplexWide> {};

inline ComplexHP ipow(const ComplexHP& z, long e) { return detail::ipow(z, e); }
inline ComplexWide ipow(const ComplexWide& z, long e) { return detail::ipow(z, e); }

}  // namespace ellcomb
