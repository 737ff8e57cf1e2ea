#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <initializer_list>
#include <string>
#include <vector>

namespace ellcomb {

using Complex = std::complex<double>;

// Approximate-equality policy for numeric scalars:
// approx_eq(x, y) iff |x - y| <= max(abs, rel * max(|x|, |y|)).
struct Tolerance {
  double rel = 1e-12;
  double abs = 0.0;

  bool approx_eq(Complex x, Complex y) const {
    return std::abs(x - y) <= std::max(abs, rel * std::max(std::abs(x), std::abs(y)));
  }
};

// |x - y| / max(|x|, |y|), and 0 when both vanish.
inline double relative_error(Complex x, Complex y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

// Residual of an identity lhs = sum(terms), measured against the largest
// magnitude involved so that cancellation among the terms does not inflate it.
inline double sum_identity_error(Complex lhs, std::initializer_list<Complex> terms) {
  Complex rhs = 0.0;
  double scale = std::abs(lhs);
  for (Complex t : terms) {
    rhs += t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

inline double sum_identity_error(Complex lhs, const std::vector<Complex>& terms) {
  Complex rhs = 0.0;
  double scale = std::abs(lhs);
  for (Complex t : terms) {
    rhs += t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

// z^e for integer e by repeated squaring.
inline Complex ipow(Complex z, long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= z;
    e >>= 1;
    if (e > 0) z *= z;
  }
  return result;
}

// "re+imi" with 17 significant digits, e.g. "0.5-1.25i".
inline std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace ellcomb
